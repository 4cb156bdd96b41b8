#include "toric/abelian.hpp"

#include "toric/error.hpp"

#include <sstream>

namespace toric {

bool GroupElement::operator<(const GroupElement& o) const {
    if (free != o.free) return lex_less(free, o.free);
    return lex_less(torsion, o.torsion);
}

AbelianGroup::AbelianGroup(std::size_t rank, IntVector torsion_orders)
    : rank_(rank), torsion_(std::move(torsion_orders)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) {
            throw DomainError(ErrorKind::InvalidGroup, "torsion order " + torsion_[i].get_str() + " < 2");
        }
        if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t())) {
            throw DomainError(ErrorKind::InvalidGroup, "torsion orders are not invariant factors");
        }
    }
}

Integer AbelianGroup::torsion_size() const {
    Integer s = 1;
    for (const auto& d : torsion_) s *= d;
    return s;
}

void AbelianGroup::check(const GroupElement& m) const {
    if (m.free.size() != rank_ || m.torsion.size() != torsion_.size()) {
        throw DomainError(ErrorKind::LengthMismatch, "element does not match group " + describe());
    }
}

GroupElement AbelianGroup::element(IntVector free, IntVector torsion) const {
    GroupElement m{std::move(free), std::move(torsion)};
    check(m);
    for (std::size_t i = 0; i < torsion_.size(); ++i) m.torsion[i] = mod_floor(m.torsion[i], torsion_[i]);
    return m;
}

GroupElement AbelianGroup::zero() const {
    return GroupElement{IntVector(rank_), IntVector(torsion_.size())};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement r{toric::add(a.free, b.free), toric::add(a.torsion, b.torsion)};
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (r.torsion[i] >= torsion_[i]) r.torsion[i] -= torsion_[i];
    }
    return r;
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    check(a);
    GroupElement r{toric::negate(a.free), IntVector(torsion_.size())};
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        r.torsion[i] = a.torsion[i] == 0 ? Integer(0) : Integer(torsion_[i] - a.torsion[i]);
    }
    return r;
}

GroupElement AbelianGroup::scale(const GroupElement& a, const Integer& k) const {
    return element(toric::scale(a.free, k), toric::scale(a.torsion, k));
}

std::vector<IntVector> AbelianGroup::torsion_elements() const {
    std::vector<IntVector> out;
    IntVector cur(torsion_.size());
    // Odometer in lexicographic order.
    for (;;) {
        out.push_back(cur);
        std::size_t i = torsion_.size();
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < torsion_[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (torsion_.empty()) return out;
    }
}

GroupElement AbelianGroup::torsion_generator(std::size_t i) const {
    GroupElement g = zero();
    g.torsion.at(i) = 1;
    return g;
}

std::string AbelianGroup::describe() const {
    std::ostringstream os;
    os << "Z^" << rank_;
    for (const auto& d : torsion_) os << " + Z/" << d.get_str();
    return os.str();
}

Integer pairing(const DualVector& u, const GroupElement& m) { return dot(u.coords, m.free); }

Rational pairing(const RatVector& u, const GroupElement& m) { return dot(u, m.free); }

Presentation::Presentation(std::size_t n, const std::vector<IntVector>& relations) : n_(n) {
    IntMatrix r = IntMatrix::from_rows(relations, n);
    SmithDecomposition snf = smith_normal_form(r);
    basis_change_ = snf.right;
    inverse_basis_change_ = unimodular_inverse(snf.right);
    diagonal_.assign(n, Integer(0));
    for (std::size_t i = 0; i < std::min(r.rows(), n); ++i) diagonal_[i] = snf.diagonal(i, i);

    std::size_t rank = 0;
    IntVector torsion;
    for (const auto& d : diagonal_) {
        if (d == 0) {
            ++rank;
        } else if (d > 1) {
            torsion.push_back(d);
        }
    }
    group_ = AbelianGroup(rank, std::move(torsion));
}

GroupElement Presentation::to_canonical(const IntVector& x) const {
    if (x.size() != n_) throw DomainError(ErrorKind::LengthMismatch, "presentation coordinates");
    // Row vector y = x * V; relations become the rows of D.
    IntVector y(n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) y[j] += x[i] * basis_change_(i, j);
    IntVector free, torsion;
    for (std::size_t j = 0; j < n_; ++j) {
        if (diagonal_[j] == 0) {
            free.push_back(y[j]);
        } else if (diagonal_[j] > 1) {
            torsion.push_back(y[j]);
        }
    }
    return group_.element(std::move(free), std::move(torsion));
}

IntVector Presentation::from_canonical(const GroupElement& m) const {
    group_.check(m);
    IntVector y(n_);
    std::size_t fi = 0, ti = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        if (diagonal_[j] == 0) {
            y[j] = m.free[fi++];
        } else if (diagonal_[j] > 1) {
            y[j] = m.torsion[ti++];
        }
    }
    IntVector x(n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) x[j] += y[i] * inverse_basis_change_(i, j);
    return x;
}

}  // namespace toric
