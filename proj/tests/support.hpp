#pragma once

// Shared fixtures and independent oracles for the test binaries.
//
// The oracles work in plain int64 and avoid the library's algorithms: monoid
// membership is a grade-bounded closure of generator sums, Hilbert bases are
// brute-force irreducibles in a box, roots are checked against every element
// of S up to a grade rather than only against generators.

#include "toric/surface.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace support {

using namespace toric;
using Vec = std::vector<std::int64_t>;

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntVector iv(const Vec& xs) {
    IntVector v;
    for (auto x : xs) v.emplace_back(static_cast<long>(x));
    return v;
}

inline Vec to_vec(const IntVector& v) {
    Vec out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

inline std::int64_t dot64(const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline GroupElement el(const AbelianGroup& g, std::initializer_list<long> free, std::initializer_list<long> torsion = {}) {
    return g.element(iv(free), iv(torsion));
}

struct Fixture {
    std::string name;
    std::shared_ptr<const AffineMonoid> monoid;
};

/// S = Z>=0^2 x Z/2 minus {(0,1,0), (0,0,1), (1,0,1)}: generators are the
/// irreducible elements found by brute force in [0,4]^2 x Z/2.
inline std::vector<GroupElement> three_point_deletion_generators() {
    const AbelianGroup g(2, iv({2}));
    auto in_s = [](long a, long b, long t) {
        if (a < 0 || b < 0) return false;
        if (a == 0 && b == 1 && t == 0) return false;
        if (a == 0 && b == 0 && t == 1) return false;
        if (a == 1 && b == 0 && t == 1) return false;
        return true;
    };
    std::vector<std::array<long, 3>> pts;
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            for (long t = 0; t < 2; ++t)
                if (in_s(a, b, t) && (a || b || t)) pts.push_back({a, b, t});
    std::vector<GroupElement> irreducible;
    for (const auto& x : pts) {
        bool reducible = false;
        for (const auto& y : pts) {
            long a = x[0] - y[0], b = x[1] - y[1], t = ((x[2] - y[2]) % 2 + 2) % 2;
            if ((a || b || t) && in_s(a, b, t)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irreducible.push_back(g.element(iv({x[0], x[1]}), iv({x[2]})));
    }
    return irreducible;
}

inline std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;
    auto add = [&](std::string name, AbelianGroup g, std::vector<GroupElement> gens) {
        out.push_back({std::move(name), std::make_shared<const AffineMonoid>(std::move(g), std::move(gens))});
    };
    const AbelianGroup z1 = AbelianGroup::free_group(1);
    const AbelianGroup z2 = AbelianGroup::free_group(2);
    const AbelianGroup z1t2(1, iv({2}));
    const AbelianGroup z2t2(2, iv({2}));
    const AbelianGroup z2t3(2, iv({3}));
    add("Z>=0 x Z/2", z1t2, {el(z1t2, {1}, {0}), el(z1t2, {0}, {1})});
    add("three-point deletion", z2t2, three_point_deletion_generators());
    add("<2,3>", z1, {el(z1, {2}), el(z1, {3})});
    add("<3,5,7>", z1, {el(z1, {3}), el(z1, {5}), el(z1, {7})});
    add("quadrant", z2, {el(z2, {1, 0}), el(z2, {0, 1})});
    add("quadric", z2, {el(z2, {1, 0}), el(z2, {1, 1}), el(z2, {1, 2})});
    add("even quadrant", z2, {el(z2, {2, 0}), el(z2, {1, 1}), el(z2, {0, 2})});
    add("plane deletion", z2, deletion_monoid(Cone(2, {iv({0, 1}), iv({1, 0})})).generators());
    add("quadric deletion", z2, deletion_monoid(Cone(2, {iv({0, 1}), iv({2, -1})})).generators());
    add("twisted Z/3", z2t3, {el(z2t3, {1, 0}, {0}), el(z2t3, {0, 1}, {1})});
    add("skew cone", z2, {el(z2, {1, -1}), el(z2, {1, 2}), el(z2, {2, 1})});
    return out;
}

// ---------------------------------------------------------------------------
// Closure oracle: every element of S whose grade is at most a bound.

struct Closure {
    std::size_t rank = 0;
    Vec orders;  // torsion orders
    Vec grading;
    std::int64_t max_grade = 0;
    std::set<Vec> elements;  // free part followed by torsion part

    Vec key(const GroupElement& m) const {
        Vec k = to_vec(m.free);
        for (auto t : to_vec(m.torsion)) k.push_back(t);
        return k;
    }

    std::int64_t grade(const GroupElement& m) const { return dot64(grading, to_vec(m.free)); }

    /// Exact for every m of grade <= max_grade; elements of larger grade are
    /// outside the closure's knowledge and rejected by contract.
    bool contains(const GroupElement& m) const {
        if (grade(m) > max_grade) throw std::logic_error("closure oracle queried beyond its grade");
        return elements.count(key(m)) > 0;
    }
};

/// Some w with w(g) > 0 on every generator with nonzero free part, found by
/// searching small integer vectors.
inline Vec find_grading(const AffineMonoid& s) {
    const std::size_t r = s.group().rank();
    Vec w(r, -6);
    for (;;) {
        bool ok = true;
        for (const auto& g : s.positive_generators()) ok = ok && dot64(w, to_vec(g.free)) > 0;
        if (ok) return w;
        std::size_t i = 0;
        while (i < r && w[i] == 6) w[i++] = -6;
        if (i == r) throw std::logic_error("no small grading");
        ++w[i];
    }
}

inline Closure closure(const AffineMonoid& s, std::int64_t max_grade) {
    Closure c;
    c.rank = s.group().rank();
    c.orders = to_vec(s.group().torsion_orders());
    c.grading = find_grading(s);
    c.max_grade = max_grade;
    std::vector<Vec> gens;
    for (const auto& g : s.generators()) gens.push_back(c.key(g));
    Vec zero(c.rank + c.orders.size(), 0);
    std::vector<Vec> frontier{zero};
    c.elements.insert(zero);
    while (!frontier.empty()) {
        Vec x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Vec y = x;
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
            for (std::size_t i = 0; i < c.orders.size(); ++i) {
                auto& t = y[c.rank + i];
                t = ((t % c.orders[i]) + c.orders[i]) % c.orders[i];
            }
            Vec free(y.begin(), y.begin() + static_cast<long>(c.rank));
            if (dot64(c.grading, free) > max_grade) continue;
            if (c.elements.insert(y).second) frontier.push_back(y);
        }
    }
    return c;
}

inline GroupElement from_key(const AbelianGroup& g, const Vec& k) {
    Vec free(k.begin(), k.begin() + static_cast<long>(g.rank()));
    Vec tor(k.begin() + static_cast<long>(g.rank()), k.end());
    return g.element(iv(free), iv(tor));
}

/// Root oracle: alpha is a root for rho when rho(alpha) = -1 and m + alpha
/// lies in S for every m in S with rho(m) > 0 and grade <= test_grade.
inline bool oracle_root_for(const Closure& c, const AbelianGroup& g, const GroupElement& alpha, const Vec& rho,
                            std::int64_t test_grade) {
    if (dot64(rho, to_vec(alpha.free)) != -1) return false;
    for (const auto& k : c.elements) {
        Vec free(k.begin(), k.begin() + static_cast<long>(c.rank));
        if (dot64(c.grading, free) > test_grade || dot64(rho, free) <= 0) continue;
        if (!c.contains(g.add(from_key(g, k), alpha))) return false;
    }
    return true;
}

inline bool in_cone_2d(const Vec& r1, const Vec& r2, std::int64_t x, std::int64_t y) {
    // r1, r2 ordered counter-clockwise: x is inside iff cross(r1, x) >= 0 and cross(x, r2) >= 0.
    return r1[0] * y - r1[1] * x >= 0 && x * r2[1] - y * r2[0] >= 0;
}

/// Irreducible nonzero lattice points of cone(r1, r2) in [0, box]^2, for rays
/// with non-negative entries.
inline std::set<Vec> brute_hilbert_2d(Vec r1, Vec r2, std::int64_t box) {
    if (r1[0] * r2[1] - r1[1] * r2[0] < 0) std::swap(r1, r2);
    std::vector<std::vector<char>> in(box + 1, std::vector<char>(box + 1, 0));
    for (std::int64_t x = 0; x <= box; ++x)
        for (std::int64_t y = 0; y <= box; ++y) in[x][y] = in_cone_2d(r1, r2, x, y);
    std::set<Vec> out;
    for (std::int64_t x = 0; x <= box; ++x)
        for (std::int64_t y = 0; y <= box; ++y) {
            if (!in[x][y] || (x == 0 && y == 0)) continue;
            bool reducible = false;
            for (std::int64_t a = 0; a <= x && !reducible; ++a)
                for (std::int64_t b = 0; b <= y && !reducible; ++b)
                    if ((a || b) && (a != x || b != y) && in[a][b] && in[x - a][y - b]) reducible = true;
            if (!reducible) out.insert({x, y});
        }
    return out;
}

/// Cone root by the literal definition over int64.
inline std::vector<Vec> oracle_cone_root_rays(const std::vector<Vec>& rays, const Vec& alpha) {
    std::vector<Vec> out;
    for (const auto& rho : rays) {
        if (dot64(rho, alpha) != -1) continue;
        bool ok = true;
        for (const auto& other : rays)
            if (other != rho && dot64(other, alpha) < 0) ok = false;
        if (ok) out.push_back(rho);
    }
    return out;
}

inline Integer falling_factorial(const Integer& n, unsigned long k) {
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= n - i;
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// A random element of S: a random non-negative combination of generators.
inline GroupElement random_element(const AffineMonoid& s, std::mt19937& rng, int max_coeff = 2) {
    std::uniform_int_distribution<int> coeff(0, max_coeff);
    GroupElement m = s.group().zero();
    for (const auto& g : s.generators()) m = s.group().add(m, s.group().scale(g, coeff(rng)));
    return m;
}

inline Rational random_rational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace support
