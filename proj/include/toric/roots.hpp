#pragma once

// Demazure roots: the classical definition for a cone sigma in N and the
// generalized definition for a cancellative monoid S.
//
// A root of S is alpha in M with a ray rho of S* such that rho(alpha) = -1
// and m + alpha in S for every m in S with rho(m) > 0. It suffices to test
// the generators of S.

#include "toric/monoid.hpp"

#include <optional>
#include <vector>

namespace toric {

class DemazureRoot {
public:
    const GroupElement& alpha() const { return alpha_; }
    /// The first ray (in sorted ray order) satisfying the definition.
    const DualVector& distinguished_ray() const { return rays_.front(); }
    /// Every ray satisfying the definition; one element in all known cases.
    const std::vector<DualVector>& satisfying_rays() const { return rays_; }

    bool operator==(const DemazureRoot& o) const { return alpha_ == o.alpha_ && rays_ == o.rays_; }
    bool operator<(const DemazureRoot& o) const { return alpha_ < o.alpha_; }

private:
    DemazureRoot(GroupElement alpha, std::vector<DualVector> rays) : alpha_(std::move(alpha)), rays_(std::move(rays)) {}
    friend class RootTester;
    friend std::optional<DemazureRoot> is_cone_root(const Cone&, const GroupElement&);

    GroupElement alpha_;
    std::vector<DualVector> rays_;
};

/// alpha is a root of the cone sigma (rays in N): exactly the rays rho with
/// rho(alpha) = -1 and rho'(alpha) >= 0 for every other ray. Torsion of
/// alpha is unconstrained. Throws NotPointed.
std::optional<DemazureRoot> is_cone_root(const Cone& sigma, const GroupElement& alpha);

/// Reusable root decision for one monoid; memoizes membership across calls.
class RootTester {
public:
    /// Throws NotPointed / NotFullDimensional.
    explicit RootTester(const AffineMonoid& s);

    std::optional<DemazureRoot> operator()(const GroupElement& alpha);
    /// Decision for one fixed ray of S*.
    bool is_root_for(const GroupElement& alpha, const DualVector& rho);

    MembershipTester& membership() { return in_s_; }
    const AffineMonoid& monoid() const { return monoid_; }

private:
    const AffineMonoid& monoid_;
    MembershipTester in_s_;
};

std::optional<DemazureRoot> is_monoid_root(const AffineMonoid& s, const GroupElement& alpha);

/// The cone sigma of S, i.e. the dual of the recession cone.
Cone root_cone(const AffineMonoid& s);

/// Every element of M with |free|_inf <= bound, all torsion values.
std::vector<GroupElement> box_elements(const AbelianGroup& group, long bound);

/// Roots with |alpha.free|_inf <= bound (all torsion values), sorted.
std::vector<DemazureRoot> enumerate_roots(const AffineMonoid& s, long bound);
std::vector<DemazureRoot> enumerate_roots(const Cone& sigma, const AbelianGroup& group, long bound);

/// R(S) ∩ box is contained in R(S^sat) ∩ box.
struct InclusionReport {
    std::vector<DemazureRoot> monoid_roots;
    std::vector<DemazureRoot> saturation_roots;
    /// Roots of S that are not roots of S^sat with the same ray. Must be empty.
    std::vector<DemazureRoot> violations;
    bool holds() const { return violations.empty(); }
};

InclusionReport check_inclusion_in_saturation_roots(const AffineMonoid& s, long bound);

}  // namespace toric
