#pragma once

// Finitely generated abelian groups M = Z^r + Z/d1 + ... + Z/dk in
// invariant-factor form, their elements, and the integer pairing with the
// dual lattice N = Hom(M, Z).

#include "toric/arith.hpp"
#include "toric/linalg.hpp"

#include <string>
#include <vector>

namespace toric {

/// An element split into its free part (length r) and its torsion part
/// (length k, entry i always reduced into [0, d_i)). Elements never carry
/// their group; arithmetic goes through AbelianGroup so that torsion stays
/// canonical.
struct GroupElement {
    IntVector free;
    IntVector torsion;

    bool operator==(const GroupElement& o) const { return free == o.free && torsion == o.torsion; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    /// Lexicographic on the free part, then on the torsion part.
    bool operator<(const GroupElement& o) const;

    bool is_zero() const { return toric::is_zero(free) && toric::is_zero(torsion); }
    bool has_zero_free_part() const { return toric::is_zero(free); }
};

/// Integer functional on the free part of M; torsion pairs to zero.
struct DualVector {
    IntVector coords;

    bool operator==(const DualVector& o) const { return coords == o.coords; }
    bool operator<(const DualVector& o) const { return lex_less(coords, o.coords); }
};

class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Throws InvalidGroup unless every order is >= 2 and d1 | d2 | ... | dk.
    AbelianGroup(std::size_t rank, IntVector torsion_orders);

    static AbelianGroup free_group(std::size_t rank) { return AbelianGroup(rank, {}); }

    std::size_t rank() const { return rank_; }
    const IntVector& torsion_orders() const { return torsion_; }
    std::size_t torsion_count() const { return torsion_.size(); }
    bool has_torsion() const { return !torsion_.empty(); }
    /// |T| as an integer (1 for torsion-free groups).
    Integer torsion_size() const;

    bool operator==(const AbelianGroup& o) const { return rank_ == o.rank_ && torsion_ == o.torsion_; }

    /// Builds an element, reducing torsion entries. Throws LengthMismatch.
    GroupElement element(IntVector free, IntVector torsion = {}) const;
    GroupElement zero() const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, const Integer& k) const;

    /// Every element of the torsion subgroup, in lexicographic order.
    std::vector<IntVector> torsion_elements() const;

    /// Unit vector for invariant factor i, with zero free part.
    GroupElement torsion_generator(std::size_t i) const;

    void check(const GroupElement& m) const;

    std::string describe() const;

private:
    std::size_t rank_ = 0;
    IntVector torsion_;
};

Integer pairing(const DualVector& u, const GroupElement& m);
Rational pairing(const RatVector& u, const GroupElement& m);

/// Z^n / <relations> rewritten as an AbelianGroup together with the
/// coordinate change in both directions.
class Presentation {
public:
    Presentation(std::size_t n, const std::vector<IntVector>& relations);

    const AbelianGroup& group() const { return group_; }
    std::size_t ambient_dimension() const { return n_; }

    /// User coordinates (length n) to canonical element.
    GroupElement to_canonical(const IntVector& x) const;
    /// Canonical element to one representative in user coordinates.
    IntVector from_canonical(const GroupElement& m) const;

private:
    std::size_t n_;
    AbelianGroup group_;
    IntMatrix basis_change_;          // V: x -> x * V
    IntMatrix inverse_basis_change_;  // V^{-1}
    std::vector<Integer> diagonal_;   // length n, diagonal of D padded with zeros
};

}  // namespace toric
