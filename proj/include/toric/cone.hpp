#pragma once

// Rational polyhedral cones in Q^r given by integer generators.
//
// A Cone always stores its minimal primitive ray set together with the rays
// of its dual (its facet normals). A cone containing a line is stored as the
// rays of its pointed part plus +/- pairs spanning the lineality space; the
// same convention applies to the dual, so dual_cone is total.

#include "toric/arith.hpp"

#include <optional>
#include <vector>

namespace toric {

class Cone {
public:
    /// Cone generated by `generators` in Q^rank. Zero generators are ignored;
    /// an empty list gives the zero cone.
    Cone(std::size_t rank, const std::vector<IntVector>& generators);

    std::size_t rank() const { return rank_; }

    /// Minimal primitive generators, lexicographically sorted. Includes the
    /// +/- lineality pairs when the cone is not pointed.
    const std::vector<IntVector>& rays() const { return rays_; }
    /// Rays of the dual cone; u . v >= 0 for every ray v.
    const std::vector<IntVector>& facet_normals() const { return facets_; }

    /// Basis of the largest linear subspace contained in the cone.
    const std::vector<IntVector>& lineality_basis() const { return lineality_; }
    /// Rays that are not part of a lineality pair.
    std::vector<IntVector> pointed_rays() const;

    bool has_lineality() const { return !lineality_.empty(); }
    std::size_t dimension() const { return dimension_; }
    bool is_full_dimensional() const { return dimension_ == rank_; }

    bool contains(const IntVector& v) const;
    bool operator==(const Cone& o) const { return rank_ == o.rank_ && rays_ == o.rays_; }

private:
    Cone() = default;
    friend Cone dual_cone(const Cone&);

    std::size_t rank_ = 0;
    std::size_t dimension_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> facets_;
    std::vector<IntVector> lineality_;
};

Cone dual_cone(const Cone& c);

/// True iff the cone contains no line.
bool is_pointed(const Cone& c);

/// A functional strictly positive on every nonzero element of a pointed cone
/// (the sum of the dual rays); nullopt if the cone is not pointed.
std::optional<IntVector> positivity_witness(const Cone& c);

/// Minimal generating set of C ∩ Z^r, lexicographically sorted.
/// Requires C pointed and full-dimensional with 1 <= rank <= 3.
std::vector<IntVector> hilbert_basis(const Cone& c);

/// Simplicial cones (each given by `rank` rays) covering C. Fan over the
/// first ray; requires C pointed, full-dimensional, rank <= 3.
std::vector<std::vector<IntVector>> triangulate(const Cone& c);

/// Lattice points p = sum lambda_i v_i with every lambda_i in [0, 1).
std::vector<IntVector> fundamental_parallelepiped_points(const std::vector<IntVector>& simplex);

/// Rays of {u : a . u >= 0 for all a in `inequalities`} in Q^rank: the
/// pointed part followed by the lineality basis.
struct RaySet {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};
RaySet extreme_rays(const std::vector<IntVector>& inequalities, std::size_t rank);

}  // namespace toric
