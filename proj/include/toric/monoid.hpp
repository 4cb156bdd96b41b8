#pragma once

// Finitely generated cancellative monoids S inside a given ambient group M.
// Cancellativity is automatic since S is a subset of a group.

#include "toric/abelian.hpp"
#include "toric/cone.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace toric {

class AffineMonoid {
public:
    /// Throws EmptyGenerators, ZeroGenerator, LengthMismatch. Duplicate
    /// generators are dropped. A monoid whose positive generators span a cone
    /// containing a line is still constructed but flagged (see is_pointed).
    AffineMonoid(AbelianGroup group, std::vector<GroupElement> generators);

    const AbelianGroup& group() const { return group_; }
    /// Sorted, pairwise distinct, nonzero.
    const std::vector<GroupElement>& generators() const { return generators_; }
    /// Generators with nonzero free part.
    const std::vector<GroupElement>& positive_generators() const { return positive_; }
    /// The finite group generated by the zero-free-part generators, as
    /// sorted torsion vectors.
    const std::vector<IntVector>& unit_subgroup() const { return units_; }
    bool is_unit(const IntVector& torsion) const;

    /// Cone over the free parts of the generators.
    const Cone& recession_cone() const { return cone_; }
    /// Rays of the dual cone; these are S*(1) when the cone is full-dimensional.
    const std::vector<DualVector>& dual_rays() const { return dual_rays_; }

    /// Some w with w(g) > 0 for every positive generator exists.
    bool is_pointed() const { return witness_.has_value(); }
    /// Free parts of the generators span Q^r, so S*(1) is a set of rays.
    bool is_full_dimensional() const { return cone_.is_full_dimensional(); }
    /// Throws NotPointed unless is_pointed().
    void require_pointed() const;
    /// Throws NotPointed / NotFullDimensional.
    void require_rays() const;

    /// The strictly positive functional (sum of the dual rays).
    const IntVector& grading() const;

    bool operator==(const AffineMonoid& o) const { return group_ == o.group_ && generators_ == o.generators_; }

private:
    AbelianGroup group_;
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> positive_;
    std::vector<IntVector> units_;
    Cone cone_;
    std::vector<DualVector> dual_rays_;
    std::optional<IntVector> witness_;
};

/// Decides m in S by depth-first search over generator multiplicities,
/// bounded by the grading. Results are memoized for the tester's lifetime,
/// so one tester should be reused across many related queries.
class MembershipTester {
public:
    explicit MembershipTester(const AffineMonoid& s);

    bool operator()(const GroupElement& m);

private:
    bool search(const GroupElement& m);

    const AffineMonoid& monoid_;
    std::map<GroupElement, bool> memo_;
};

bool contains(const AffineMonoid& s, const GroupElement& m);

/// Membership in S^sat, i.e. rho(m) >= 0 for every dual ray (torsion free).
bool saturation_contains(const AffineMonoid& s, const GroupElement& m);

/// Generators of S^sat: the Hilbert basis of the recession cone lifted with
/// torsion zero, then one generator per invariant factor of M.
std::vector<GroupElement> saturation_generators(const AffineMonoid& s);
AffineMonoid saturation(const AffineMonoid& s);

/// Least l >= 1 with m + l*alpha not in S. Requires alpha outside S^sat
/// (AlphaInSaturation otherwise) and m in S (NotInMonoid).
Integer corollary_escape_exponent(const AffineMonoid& s, const GroupElement& m, const GroupElement& alpha);

/// A face S ∩ rho⊥, or all of S when no ray is set.
struct Face {
    std::optional<DualVector> defining_ray;

    bool contains(MembershipTester& in_s, const GroupElement& m) const;
    /// Generators of S lying on the face; these generate it.
    std::vector<GroupElement> generators(const AffineMonoid& s) const;
};

}  // namespace toric
