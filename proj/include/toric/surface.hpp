#pragma once

// Normal toric surfaces X_sigma, the non-normal deletion model
// S = (sigma^v ∩ M) \ H, and the root-set comparison between them.

#include "toric/derivation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Cyclic quotient parameters: sigma is lattice-equivalent to
/// cone((0,1), (d,-e)) with 0 <= e < d and gcd(d, e) = 1. d = 1 is the plane.
struct SurfaceData {
    Cone sigma;
    Integer d;
    Integer e;
};

/// Throws NotPointed, NotFullDimensional, RankUnsupported (rank != 2).
SurfaceData surface_normal_form(const Cone& sigma);

/// cone((0,1), (d,-e)); throws InvalidGroup on invalid parameters.
Cone normal_form_cone(const Integer& d, const Integer& e);

/// Refuses the degenerate surfaces (torus factors) with NotPointed, quoting
/// the known automorphism facts for them.
void require_surface_without_torus_factor(const Cone& sigma);

/// The Hilbert basis of sigma^v ∩ Z^r.
std::vector<IntVector> dual_hilbert_basis(const Cone& sigma);

/// Monoid generated by all sums of two and of three Hilbert basis elements
/// (lifted with torsion zero), plus the torsion generators of M. Reducible
/// sums are dropped. The result is validated on a box against the direct
/// description (sigma^v ∩ M) \ H. Throws NotPointed, RankUnsupported,
/// ValidationFailed.
AffineMonoid deletion_monoid(const Cone& sigma, const AbelianGroup& group);
AffineMonoid deletion_monoid(const Cone& sigma);

struct AffineLineFactor {
    bool present = false;
    /// A root alpha of sigma with -alpha in sigma^v ∩ M, and its ray.
    std::optional<GroupElement> witness;
    std::optional<DualVector> ray;
    /// Outcome of the independent box search (bounded evidence only).
    bool box_search_found = false;
};

/// Structural decision per ray: rho(alpha) = -1, rho'(alpha) = 0 for every
/// other ray has an integral solution. Cross-validated by a box search;
/// throws ValidationFailed on disagreement. Throws NotPointed.
AffineLineFactor has_affine_line_factor(const Cone& sigma, long bound);

struct RootEqualityReport {
    SurfaceData normal_form;
    std::vector<GroupElement> deletion_generators;
    std::vector<IntVector> hilbert_basis;
    std::vector<DemazureRoot> cone_roots;
    std::vector<DemazureRoot> monoid_roots;
    bool equal = false;
    AffineLineFactor line_factor;
    std::vector<DemazureRoot> lost_roots;
    /// Set when unequal: a lost root and a generator m with rho(m) > 0 and
    /// m + alpha outside S.
    std::optional<GroupElement> witness_root;
    std::optional<GroupElement> witness_generator;
};

/// Throws NotPointed, RankUnsupported, ValidationFailed (box verdict and
/// structural verdict disagree).
RootEqualityReport verify_root_equality(const Cone& sigma, long bound);
RootEqualityReport verify_root_equality(const Cone& sigma, const AbelianGroup& group, long bound);

struct RootAction {
    DemazureRoot root;
    /// exp(t d_alpha)(chi^h) for every Hilbert basis element h.
    std::vector<std::pair<GroupElement, FlowPolynomial>> comorphism;
};

struct RayActions {
    DualVector ray;
    std::vector<RootAction> actions;
};

struct AutGeneratorsReport {
    std::size_t torus_rank = 0;
    std::vector<GroupElement> coordinate_generators;  // Hilbert basis of sigma^v ∩ M
    std::vector<RayActions> rays;
};

/// Generating data of Aut(X_sigma): the torus plus the G_a-actions of the
/// roots in the box. Descriptive only.
AutGeneratorsReport aut_generators_report(const Cone& sigma, long bound);

}  // namespace toric
