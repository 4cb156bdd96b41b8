#include "toric/derivation.hpp"

#include "toric/error.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

constexpr unsigned long kIterationMargin = 64;
constexpr unsigned long kSpotCheckIterations = 256;
constexpr unsigned long kSpotCheckPerUnit = 16;
constexpr std::size_t kSpotCheckTerms = 200000;

// Iteration budget for the spot check: grows with the largest coordinate among
// piece degrees and generators, capped at kSpotCheckIterations.
unsigned long spot_check_budget(const Derivation& d) {
    Integer size = 1;
    auto widen = [&](const IntVector& v) {
        for (const auto& x : v) if (abs(x) + 1 > size) size = abs(x) + 1;
    };
    for (const auto& p : d.pieces()) widen(p.degree().free);
    for (const auto& g : d.pieces().front().carrier().generators()) widen(g.free);
    if (size > Integer(kSpotCheckIterations / kSpotCheckPerUnit)) return kSpotCheckIterations;
    return kSpotCheckPerUnit * size.get_ui();
}

}  // namespace

// AlgebraElement

AlgebraElement AlgebraElement::monomial(GroupElement m, Rational c) {
    AlgebraElement a;
    a.add_term(m, c);
    return a;
}

Rational AlgebraElement::coefficient(const GroupElement& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const GroupElement& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

AlgebraElement multiply(const AbelianGroup& group, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& [m, c] : a.terms())
        for (const auto& [n, d] : b.terms()) r.add_term(group.add(m, n), c * d);
    return r;
}

// FlowPolynomial

FlowPolynomial::FlowPolynomial(std::vector<AlgebraElement> coefficients) : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

AlgebraElement FlowPolynomial::constant_term() const {
    return coefficients_.empty() ? AlgebraElement{} : coefficients_.front();
}

FlowPolynomial multiply(const AbelianGroup& group, const FlowPolynomial& a, const FlowPolynomial& b) {
    if (a.coefficients().empty() || b.coefficients().empty()) return FlowPolynomial{};
    std::vector<AlgebraElement> c(a.coefficients().size() + b.coefficients().size() - 1);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            c[i + j] += multiply(group, a.coefficients()[i], b.coefficients()[j]);
    return FlowPolynomial(std::move(c));
}

// HomogeneousDerivation

HomogeneousDerivation::HomogeneousDerivation(std::shared_ptr<const AffineMonoid> carrier, GroupElement degree,
                                             RatVector character)
    : carrier_(std::move(carrier)), degree_(std::move(degree)), character_(std::move(character)) {
    const auto& s = *carrier_;
    s.group().check(degree_);
    degree_ = s.group().element(degree_.free, degree_.torsion);
    if (character_.size() != s.group().rank()) {
        throw DomainError(ErrorKind::LengthMismatch, "character length differs from the rank");
    }
    MembershipTester in_s(s);
    for (const auto& g : s.generators()) {
        if (pairing(character_, g) == 0) continue;
        if (!in_s(s.group().add(g, degree_))) {
            throw DomainError(ErrorKind::ExponentOutsideCarrier,
                              "g + alpha leaves S for generator " + to_string(g.free) +
                                  "; the derivation is not defined on Q[S]");
        }
    }
}

AlgebraElement HomogeneousDerivation::on_monomial(const GroupElement& m) const {
    Rational c = pairing(character_, m);
    if (c == 0) return {};
    return AlgebraElement::monomial(carrier_->group().add(m, degree_), c);
}

// Derivation

Derivation::Derivation(std::vector<HomogeneousDerivation> pieces) {
    if (pieces.empty()) throw DomainError(ErrorKind::ZeroDerivation, "a derivation needs at least one piece");
    const auto& carrier = pieces.front().carrier();
    std::map<GroupElement, RatVector> merged;
    for (const auto& p : pieces) {
        if (!(p.carrier() == carrier)) throw DomainError(ErrorKind::LengthMismatch, "pieces over different carriers");
        auto [it, inserted] = merged.emplace(p.degree(), p.character());
        if (!inserted)
            for (std::size_t i = 0; i < it->second.size(); ++i) it->second[i] += p.character()[i];
    }
    for (auto& [alpha, gamma] : merged) {
        if (is_zero(gamma)) continue;
        pieces_.emplace_back(pieces.front().carrier_ptr(), alpha, std::move(gamma));
    }
    if (pieces_.empty()) throw DomainError(ErrorKind::ZeroDerivation, "the pieces cancel");
}

HomogeneousDerivation root_derivation(const DemazureRoot& root, std::shared_ptr<const AffineMonoid> s) {
    RootTester test(*s);
    if (!test.is_root_for(root.alpha(), root.distinguished_ray())) {
        throw DomainError(ErrorKind::NotARoot, to_string(root.alpha().free) + " is not a root of the carrier");
    }
    return HomogeneousDerivation(std::move(s), root.alpha(), to_rational(root.distinguished_ray().coords));
}

namespace {

void require_in_carrier(const AffineMonoid& s, const AlgebraElement& f) {
    MembershipTester in_s(s);
    for (const auto& [m, c] : f.terms()) {
        if (!in_s(m)) {
            throw DomainError(ErrorKind::ExponentOutsideCarrier, "exponent " + to_string(m.free) + " is not in S");
        }
    }
}

AlgebraElement apply_unchecked(const HomogeneousDerivation& d, const AlgebraElement& f) {
    AlgebraElement r;
    for (const auto& [m, c] : f.terms()) r += d.on_monomial(m) * c;
    return r;
}

AlgebraElement apply_unchecked(const Derivation& d, const AlgebraElement& f) {
    AlgebraElement r;
    for (const auto& p : d.pieces()) r += apply_unchecked(p, f);
    return r;
}

}  // namespace

AlgebraElement apply(const HomogeneousDerivation& d, const AlgebraElement& f) {
    require_in_carrier(d.carrier(), f);
    return apply_unchecked(d, f);
}

AlgebraElement apply(const Derivation& d, const AlgebraElement& f) {
    require_in_carrier(d.pieces().front().carrier(), f);
    return apply_unchecked(d, f);
}

NilpotencyData nilpotency_data(const HomogeneousDerivation& d, const GroupElement& m) {
    AlgebraElement cur = AlgebraElement::monomial(m);
    require_in_carrier(d.carrier(), cur);

    // The coefficient picked up at step j is gamma(m) + j*gamma(alpha), so a
    // terminating iteration stops by |gamma(m) / gamma(alpha)|.
    const Rational gm = pairing(d.character(), m);
    const Rational ga = pairing(d.character(), d.degree());
    unsigned long budget = kIterationMargin;
    if (ga != 0) {
        Rational q = abs(gm / ga);
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        budget += c.get_ui();
    }

    NilpotencyData out;
    for (;;) {
        AlgebraElement next = apply_unchecked(d, cur);
        if (next.is_zero()) {
            out.top_term = std::move(cur);
            return out;
        }
        if (++out.index > budget) {
            throw DomainError(ErrorKind::IterationBudgetExceeded,
                              "no vanishing after " + std::to_string(budget) + " iterations on " + to_string(m.free));
        }
        cur = std::move(next);
    }
}

LndCertificate is_locally_nilpotent(const HomogeneousDerivation& d) {
    const auto& s = d.carrier();
    const auto& gamma = d.character();
    bool acts = std::any_of(s.generators().begin(), s.generators().end(),
                            [&](const GroupElement& g) { return pairing(gamma, g) != 0; });
    if (!acts) throw DomainError(ErrorKind::ZeroDerivation, "the derivation vanishes on every generator");

    LndCertificate cert;
    RootTester test(s);
    for (const auto& rho : s.dual_rays()) {
        std::size_t i = 0;
        while (rho.coords[i] == 0) ++i;
        Rational lambda = gamma[i] / Rational(rho.coords[i]);
        if (lambda == 0) continue;
        bool proportional = true;
        for (std::size_t j = 0; j < gamma.size() && proportional; ++j) proportional = gamma[j] == lambda * rho.coords[j];
        if (!proportional) continue;

        cert.lambda = lambda;
        cert.ray = rho;
        const Integer p = pairing(rho, d.degree());
        if (p != -1) {
            cert.failed_clause = "ray " + to_string(rho.coords) + " pairs to " + p.get_str() + " with the degree, not -1";
            return cert;
        }
        if (!test.is_root_for(d.degree(), rho)) {
            cert.failed_clause = "degree fails the monoid root condition for ray " + to_string(rho.coords);
            return cert;
        }
        cert.locally_nilpotent = true;
        cert.root = test(d.degree());
        return cert;
    }
    cert.failed_clause = "character is not proportional to a ray of the dual monoid";
    return cert;
}

FlowPolynomial exp_action(const HomogeneousDerivation& d, const AlgebraElement& f) {
    const auto cert = is_locally_nilpotent(d);
    if (!cert.locally_nilpotent) throw DomainError(ErrorKind::NotLocallyNilpotent, cert.failed_clause);
    require_in_carrier(d.carrier(), f);

    std::vector<AlgebraElement> coeffs;
    AlgebraElement cur = f;
    Integer fact = 1;
    for (unsigned long i = 0; !cur.is_zero(); ++i) {
        if (i > 0) fact *= i;
        coeffs.push_back(cur * Rational(Integer(1), fact));
        cur = apply_unchecked(d, cur);
    }
    return FlowPolynomial(std::move(coeffs));
}

Face kernel_face(const HomogeneousDerivation& d) {
    const auto& s = d.carrier();
    if (is_zero(d.character())) throw DomainError(ErrorKind::ZeroDerivation, "zero character");
    IntVector u = primitive(d.character());
    bool all_nonpos = std::all_of(s.generators().begin(), s.generators().end(),
                                  [&](const GroupElement& g) { return dot(u, g.free) <= 0; });
    if (all_nonpos) u = negate(u);
    return Face{DualVector{u}};
}

Derivation decompose(std::shared_ptr<const AffineMonoid> s, const GeneratorImages& images) {
    const auto& group = s->group();
    MembershipTester in_s(*s);
    std::set<GroupElement> offsets;
    for (const auto& [g, image] : images) {
        if (!std::binary_search(s->generators().begin(), s->generators().end(), g)) {
            throw DomainError(ErrorKind::LengthMismatch, to_string(g.free) + " is not a generator of S");
        }
        for (const auto& [m, c] : image.terms()) {
            if (!in_s(m)) throw DomainError(ErrorKind::ExponentOutsideCarrier, "image exponent " + to_string(m.free));
            offsets.insert(group.sub(m, g));
        }
    }

    std::vector<IntVector> rows;
    for (const auto& g : s->generators()) rows.push_back(g.free);

    std::vector<HomogeneousDerivation> pieces;
    for (const auto& alpha : offsets) {
        // gamma_alpha(g) = coefficient of chi^(g + alpha) in the image of g.
        RatVector rhs;
        for (const auto& g : s->generators()) {
            auto it = images.find(g);
            rhs.push_back(it == images.end() ? Rational(0) : it->second.coefficient(group.add(g, alpha)));
        }
        auto gamma = solve_rational(rows, rhs, group.rank());
        if (!gamma) {
            throw DomainError(ErrorKind::InconsistentImages,
                              "no functional matches the images at degree " + to_string(alpha.free));
        }
        pieces.emplace_back(s, alpha, std::move(*gamma));
    }
    if (pieces.empty()) throw DomainError(ErrorKind::ZeroDerivation, "every image is zero");
    return Derivation(std::move(pieces));
}

GeneratorImages images_on_generators(const Derivation& d) {
    GeneratorImages out;
    for (const auto& g : d.pieces().front().carrier().generators()) {
        out[g] = apply_unchecked(d, AlgebraElement::monomial(g));
    }
    return out;
}

std::vector<std::size_t> hull_vertices(const std::vector<IntVector>& points) {
    std::vector<std::size_t> out;
    if (points.empty()) return out;
    const std::size_t r = points.front().size();
    for (std::size_t p = 0; p < points.size(); ++p) {
        std::vector<std::size_t> others;
        for (std::size_t q = 0; q < points.size(); ++q)
            if (points[q] != points[p]) others.push_back(q);

        // p is not a vertex iff it is a convex combination of at most r+1
        // of the other points (Caratheodory).
        bool inside = false;
        const std::size_t max_k = std::min(others.size(), r + 1);
        for (std::size_t k = 1; k <= max_k && !inside; ++k) {
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = i;
            for (;;) {
                std::vector<IntVector> rows(r + 1, IntVector(k));
                RatVector rhs(r + 1);
                for (std::size_t j = 0; j < k; ++j) {
                    for (std::size_t c = 0; c < r; ++c) rows[c][j] = points[others[idx[j]]][c];
                    rows[r][j] = 1;
                }
                for (std::size_t c = 0; c < r; ++c) rhs[c] = points[p][c];
                rhs[r] = 1;
                if (auto lambda = solve_rational(rows, rhs, k)) {
                    if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; })) {
                        inside = true;
                        break;
                    }
                }
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == others.size() - k + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!inside) out.push_back(p);
    }
    return out;
}

std::vector<HomogeneousDerivation> extract_lnd_pieces(const Derivation& d) {
    const auto& s = d.pieces().front().carrier();
    const unsigned long budget = spot_check_budget(d);

    for (const auto& g : s.generators()) {
        AlgebraElement cur = AlgebraElement::monomial(g);
        unsigned long steps = 0;
        while (!cur.is_zero()) {
            if (++steps > budget || cur.terms().size() > kSpotCheckTerms) {
                throw DomainError(ErrorKind::TotalNotNilpotent,
                                  "iteration on generator " + to_string(g.free) + " does not terminate");
            }
            cur = apply_unchecked(d, cur);
        }
    }

    std::vector<IntVector> free_degrees;
    for (const auto& p : d.pieces()) free_degrees.push_back(p.degree().free);
    std::set<IntVector, IntVectorLess> vertices;
    for (auto i : hull_vertices(free_degrees)) vertices.insert(free_degrees[i]);

    std::vector<HomogeneousDerivation> out;
    for (const auto& p : d.pieces()) {
        if (!vertices.count(p.degree().free)) continue;
        auto cert = is_locally_nilpotent(p);
        if (!cert.locally_nilpotent) {
            throw DomainError(ErrorKind::ValidationFailed,
                              "vertex piece of degree " + to_string(p.degree().free) + " rejected: " + cert.failed_clause);
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace toric
