#include "toric/arith.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotPointed: return "NonPointed";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::RankUnsupported: return "RankUnsupported";
        case ErrorKind::EmptyGenerators: return "EmptyGenerators";
        case ErrorKind::ZeroGenerator: return "ZeroGenerator";
        case ErrorKind::NotInMonoid: return "NotInMonoid";
        case ErrorKind::AlphaInSaturation: return "AlphaInSaturation";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::ExponentOutsideCarrier: return "ExponentOutsideCarrier";
        case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
        case ErrorKind::ZeroDerivation: return "ZeroDerivation";
        case ErrorKind::NotLocallyNilpotent: return "NotLocallyNilpotent";
        case ErrorKind::InconsistentImages: return "InconsistentImages";
        case ErrorKind::TotalNotNilpotent: return "TotalNotNilpotent";
        case ErrorKind::ValidationFailed: return "ValidationFailed";
    }
    return "Unknown";
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

static void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DomainError(ErrorKind::LengthMismatch,
                          "vector lengths " + std::to_string(a) + " and " + std::to_string(b));
    }
}

Integer dot(const IntVector& a, const IntVector& b) {
    require_same_length(a.size(), b.size());
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
    require_same_length(a.size(), b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

IntVector add(const IntVector& a, const IntVector& b) {
    require_same_length(a.size(), b.size());
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    require_same_length(a.size(), b.size());
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector scale(const IntVector& a, const Integer& k) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

IntVector negate(const IntVector& a) { return scale(a, -1); }

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitive(const IntVector& v) {
    Integer g = gcd_of(v);
    if (g == 0) throw DomainError(ErrorKind::ZeroVector, "primitive of the zero vector");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVector primitive(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        r[i] = s.get_num();
    }
    return primitive(r);
}

RatVector to_rational(const IntVector& v) {
    RatVector r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace toric
