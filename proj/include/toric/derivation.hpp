#pragma once

// The semigroup algebra Q[S] and its homogeneous derivations.
//
// A homogeneous derivation of degree alpha acts on monomials by
//     chi^m  ->  gamma(m) * chi^(m + alpha)
// where gamma is a rational functional on the free part of M (torsion maps
// to zero in characteristic zero). The pair (alpha, gamma) is a normal form:
// it is well defined on all of Q[S] as soon as g + alpha lies in S for every
// generator g with gamma(g) != 0.

#include "toric/roots.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Sparse element of Q[M]; no zero coefficients are stored.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement monomial(GroupElement m, Rational c = 1);

    const std::map<GroupElement, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const GroupElement& m) const;

    void add_term(const GroupElement& m, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

private:
    std::map<GroupElement, Rational> terms_;
};

/// chi^m * chi^m' = chi^(m + m').
AlgebraElement multiply(const AbelianGroup& group, const AlgebraElement& a, const AlgebraElement& b);

/// Polynomial in one formal parameter t; coefficients()[i] multiplies t^i.
class FlowPolynomial {
public:
    FlowPolynomial() = default;
    explicit FlowPolynomial(std::vector<AlgebraElement> coefficients);

    const std::vector<AlgebraElement>& coefficients() const { return coefficients_; }
    std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
    /// Value at t = 0.
    AlgebraElement constant_term() const;

    bool operator==(const FlowPolynomial& o) const { return coefficients_ == o.coefficients_; }

private:
    std::vector<AlgebraElement> coefficients_;  // trailing zeros trimmed
};

FlowPolynomial multiply(const AbelianGroup& group, const FlowPolynomial& a, const FlowPolynomial& b);

class HomogeneousDerivation {
public:
    /// Validates well-definedness on the generators; throws
    /// ExponentOutsideCarrier if some g + alpha leaves S while gamma(g) != 0.
    HomogeneousDerivation(std::shared_ptr<const AffineMonoid> carrier, GroupElement degree, RatVector character);

    const GroupElement& degree() const { return degree_; }
    const RatVector& character() const { return character_; }
    const AffineMonoid& carrier() const { return *carrier_; }
    const std::shared_ptr<const AffineMonoid>& carrier_ptr() const { return carrier_; }

    /// gamma(m) chi^(m + alpha), without a carrier check.
    AlgebraElement on_monomial(const GroupElement& m) const;

    bool operator==(const HomogeneousDerivation& o) const {
        return degree_ == o.degree_ && character_ == o.character_;
    }

private:
    std::shared_ptr<const AffineMonoid> carrier_;
    GroupElement degree_;
    RatVector character_;
};

/// Finite sum of homogeneous pieces over one carrier, pairwise distinct
/// degrees, sorted by degree.
class Derivation {
public:
    explicit Derivation(std::vector<HomogeneousDerivation> pieces);
    Derivation(const HomogeneousDerivation& piece) : Derivation(std::vector<HomogeneousDerivation>{piece}) {}

    const std::vector<HomogeneousDerivation>& pieces() const { return pieces_; }

private:
    std::vector<HomogeneousDerivation> pieces_;
};

/// The derivation chi^m -> rho(m) chi^(m + alpha). Throws NotARoot unless
/// the root satisfies the monoid root condition for S with its ray.
HomogeneousDerivation root_derivation(const DemazureRoot& root, std::shared_ptr<const AffineMonoid> s);

/// Throws ExponentOutsideCarrier if f has an exponent outside the carrier.
AlgebraElement apply(const Derivation& d, const AlgebraElement& f);
AlgebraElement apply(const HomogeneousDerivation& d, const AlgebraElement& f);

struct NilpotencyData {
    unsigned long index = 0;  // least n with D^(n+1)(chi^m) = 0
    AlgebraElement top_term;  // D^n(chi^m)
};

/// Iterates D on chi^m. Throws IterationBudgetExceeded when the iteration
/// does not terminate within the affine-coefficient bound plus a margin.
NilpotencyData nilpotency_data(const HomogeneousDerivation& d, const GroupElement& m);

struct LndCertificate {
    bool locally_nilpotent = false;
    Rational lambda;                    // D = lambda * d_alpha when accepted
    std::optional<DualVector> ray;      // the ray proportional to gamma
    std::optional<DemazureRoot> root;   // set when accepted
    std::string failed_clause;          // set when rejected
};

/// Decides local nilpotency of a homogeneous derivation: gamma must be a
/// nonzero multiple of a ray rho of S* with rho(alpha) = -1 and alpha a root
/// of S for rho. Throws ZeroDerivation.
LndCertificate is_locally_nilpotent(const HomogeneousDerivation& d);

/// exp(tD)(f) = sum t^i D^i(f) / i!. Throws NotLocallyNilpotent.
FlowPolynomial exp_action(const HomogeneousDerivation& d, const AlgebraElement& f);

/// The set of monomials killed by D: S ∩ {gamma = 0}. The defining
/// functional is primitive and oriented to be non-negative on S whenever the
/// slice is a face (always the case for locally nilpotent D).
Face kernel_face(const HomogeneousDerivation& d);

using GeneratorImages = std::map<GroupElement, AlgebraElement>;

/// Splits the derivation given by generator images into homogeneous pieces
/// (alpha, gamma_alpha). Throws InconsistentImages, ExponentOutsideCarrier.
Derivation decompose(std::shared_ptr<const AffineMonoid> s, const GeneratorImages& images);

/// D(chi^g) for every generator g.
GeneratorImages images_on_generators(const Derivation& d);

/// Pieces whose free degree is a vertex of the convex hull of all free
/// degrees; every returned piece is validated locally nilpotent.
/// Throws TotalNotNilpotent (spot check on generators) or ValidationFailed.
std::vector<HomogeneousDerivation> extract_lnd_pieces(const Derivation& d);

/// Indices of the points that are vertices of their convex hull.
std::vector<std::size_t> hull_vertices(const std::vector<IntVector>& points);

}  // namespace toric
