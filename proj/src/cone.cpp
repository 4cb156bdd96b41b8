#include "toric/cone.hpp"

#include "toric/error.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

std::vector<IntVector> normalized(const std::vector<IntVector>& vs, std::size_t rank) {
    std::set<IntVector, IntVectorLess> seen;
    for (const auto& v : vs) {
        if (v.size() != rank) throw DomainError(ErrorKind::LengthMismatch, "cone generator " + to_string(v));
        if (is_zero(v)) continue;
        seen.insert(primitive(v));
    }
    return {seen.begin(), seen.end()};
}

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<IntVector> with_lineality_pairs(const RaySet& rs) {
    std::set<IntVector, IntVectorLess> all(rs.rays.begin(), rs.rays.end());
    for (const auto& l : rs.lineality) {
        all.insert(l);
        all.insert(negate(l));
    }
    return {all.begin(), all.end()};
}

}  // namespace

RaySet extreme_rays(const std::vector<IntVector>& inequalities, std::size_t rank) {
    const std::vector<IntVector> rows = normalized(inequalities, rank);
    RaySet out;
    out.lineality = integer_kernel(rows, rank);
    const std::size_t d = rank - out.lineality.size();
    if (d == 0) return out;

    // An extreme ray of the pointed part is cut out by d-1 independent tight
    // inequalities inside the orthogonal complement of the lineality space.
    std::set<IntVector, IntVectorLess> found;
    for_each_subset(rows.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> system = out.lineality;
        for (auto i : idx) system.push_back(rows[i]);
        auto ker = integer_kernel(system, rank);
        if (ker.size() != 1) return;
        for (int s : {1, -1}) {
            IntVector u = scale(ker[0], s);
            bool ok = std::all_of(rows.begin(), rows.end(), [&](const IntVector& a) { return dot(a, u) >= 0; });
            if (ok) found.insert(u);
        }
    });
    out.rays.assign(found.begin(), found.end());
    return out;
}

Cone::Cone(std::size_t rank, const std::vector<IntVector>& generators) : rank_(rank) {
    const std::vector<IntVector> gens = normalized(generators, rank);
    dimension_ = rank_of(gens, rank);
    facets_ = with_lineality_pairs(extreme_rays(gens, rank));
    RaySet primal = extreme_rays(facets_, rank);
    lineality_ = primal.lineality;
    rays_ = with_lineality_pairs(primal);
}

std::vector<IntVector> Cone::pointed_rays() const {
    std::vector<IntVector> out;
    for (const auto& r : rays_) {
        IntVector neg = negate(r);
        if (std::find(rays_.begin(), rays_.end(), neg) == rays_.end()) out.push_back(r);
    }
    return out;
}

bool Cone::contains(const IntVector& v) const {
    if (v.size() != rank_) throw DomainError(ErrorKind::LengthMismatch, "cone membership");
    return std::all_of(facets_.begin(), facets_.end(), [&](const IntVector& u) { return dot(u, v) >= 0; });
}

Cone dual_cone(const Cone& c) { return Cone(c.rank(), c.facet_normals()); }

bool is_pointed(const Cone& c) { return !c.has_lineality(); }

std::optional<IntVector> positivity_witness(const Cone& c) {
    if (!is_pointed(c)) return std::nullopt;
    IntVector w(c.rank());
    for (const auto& u : c.facet_normals()) w = add(w, u);
    for (const auto& v : c.rays()) {
        if (dot(w, v) <= 0) return std::nullopt;
    }
    return w;
}

namespace {

void require_hilbert_preconditions(const Cone& c) {
    if (!is_pointed(c)) throw DomainError(ErrorKind::NotPointed, "cone contains a line");
    if (c.rank() == 0 || c.rank() > 3) {
        throw DomainError(ErrorKind::RankUnsupported, "rank " + std::to_string(c.rank()) + " (supported: 1..3)");
    }
    if (!c.is_full_dimensional()) throw DomainError(ErrorKind::NotFullDimensional, "cone is not full-dimensional");
}

}  // namespace

std::vector<std::vector<IntVector>> triangulate(const Cone& c) {
    require_hilbert_preconditions(c);
    const auto& rays = c.rays();
    if (c.rank() < 3) return {rays};

    // Fan over the first ray: one simplex per facet not containing it. Facets
    // of a pointed 3-dimensional cone are 2-dimensional, hence simplicial.
    const IntVector& apex = rays.front();
    std::vector<std::vector<IntVector>> simplices;
    for (const auto& f : c.facet_normals()) {
        if (dot(f, apex) == 0) continue;
        std::vector<IntVector> simplex{apex};
        for (const auto& v : rays)
            if (dot(f, v) == 0) simplex.push_back(v);
        if (simplex.size() != 3) throw DomainError(ErrorKind::ValidationFailed, "non-simplicial facet");
        simplices.push_back(std::move(simplex));
    }
    return simplices;
}

std::vector<IntVector> fundamental_parallelepiped_points(const std::vector<IntVector>& simplex) {
    const std::size_t r = simplex.size();
    // Columns are the simplex rays.
    IntMatrix v(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (simplex[i].size() != r) throw DomainError(ErrorKind::LengthMismatch, "simplex ray");
        for (std::size_t j = 0; j < r; ++j) v(j, i) = simplex[i][j];
    }
    const Integer det = determinant(v);
    if (det == 0) throw DomainError(ErrorKind::ValidationFailed, "degenerate simplex");
    const Integer vol = abs(det);

    // adj(V) row i, scaled so that lambda_i = (adj_i . p) / vol.
    std::vector<IntVector> adj(r, IntVector(r));
    std::vector<IntVector> rows(r);
    for (std::size_t i = 0; i < r; ++i) rows[i] = v.row(i);
    for (std::size_t j = 0; j < r; ++j) {
        RatVector e(r);
        e[j] = 1;
        auto col = solve_rational(rows, e, r);  // column j of V^{-1}
        for (std::size_t i = 0; i < r; ++i) {
            Rational x = (*col)[i] * vol;
            adj[i][j] = x.get_num();
        }
    }

    IntVector lo(r), hi(r);
    for (const auto& ray : simplex)
        for (std::size_t j = 0; j < r; ++j) {
            if (ray[j] < 0) lo[j] += ray[j];
            else hi[j] += ray[j];
        }

    std::vector<IntVector> points;
    IntVector p = lo;
    for (;;) {
        bool inside = true;
        for (std::size_t i = 0; i < r && inside; ++i) {
            Integer t = dot(adj[i], p);
            inside = t >= 0 && t < vol;
        }
        if (inside) points.push_back(p);
        std::size_t j = 0;
        while (j < r) {
            if (p[j] < hi[j]) {
                ++p[j];
                break;
            }
            p[j] = lo[j];
            ++j;
        }
        if (j == r) break;
    }
    return points;
}

std::vector<IntVector> hilbert_basis(const Cone& c) {
    std::set<IntVector, IntVectorLess> candidates(c.rays().begin(), c.rays().end());
    for (const auto& simplex : triangulate(c))
        for (auto& p : fundamental_parallelepiped_points(simplex))
            if (!is_zero(p)) candidates.insert(std::move(p));

    // Every irreducible element is either a ray or a nonzero point of some
    // half-open parallelepiped, so subtracting candidates decides reducibility.
    std::vector<IntVector> basis;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& y : candidates) {
            if (y == x) continue;
            if (c.contains(sub(x, y))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

}  // namespace toric
