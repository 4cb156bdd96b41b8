#include "toric/monoid.hpp"

#include "toric/error.hpp"

#include <algorithm>

namespace toric {

AffineMonoid::AffineMonoid(AbelianGroup group, std::vector<GroupElement> generators)
    : group_(std::move(group)), cone_(group_.rank(), {}) {
    if (generators.empty()) throw DomainError(ErrorKind::EmptyGenerators, "a monoid needs at least one generator");
    std::set<GroupElement> distinct;
    for (auto& g : generators) {
        g = group_.element(std::move(g.free), std::move(g.torsion));
        if (g.is_zero()) throw DomainError(ErrorKind::ZeroGenerator, "generator is the identity");
        distinct.insert(std::move(g));
    }
    generators_.assign(distinct.begin(), distinct.end());

    std::set<IntVector, IntVectorLess> units{IntVector(group_.torsion_count())};
    std::vector<IntVector> free_parts;
    for (const auto& g : generators_) {
        if (g.has_zero_free_part()) {
            // Close the unit set under adding this torsion generator; every
            // torsion element has finite order, so this is a subgroup.
            std::vector<IntVector> frontier(units.begin(), units.end());
            while (!frontier.empty()) {
                IntVector t = frontier.back();
                frontier.pop_back();
                IntVector next = group_.add(GroupElement{g.free, t}, g).torsion;
                if (units.insert(next).second) frontier.push_back(next);
            }
        } else {
            positive_.push_back(g);
            free_parts.push_back(g.free);
        }
    }
    units_.assign(units.begin(), units.end());

    cone_ = Cone(group_.rank(), free_parts);
    for (const auto& u : cone_.facet_normals()) dual_rays_.push_back(DualVector{u});
    witness_ = positivity_witness(cone_);
}

bool AffineMonoid::is_unit(const IntVector& torsion) const {
    return std::binary_search(units_.begin(), units_.end(), torsion, IntVectorLess{});
}

void AffineMonoid::require_pointed() const {
    if (!is_pointed()) {
        throw DomainError(ErrorKind::NotPointed, "the positive generators span a cone containing a line");
    }
}

void AffineMonoid::require_rays() const {
    require_pointed();
    if (!is_full_dimensional()) {
        throw DomainError(ErrorKind::NotFullDimensional,
                          "generators do not span the free part of the ambient group, so S* has no rays");
    }
}

const IntVector& AffineMonoid::grading() const {
    require_pointed();
    return *witness_;
}

MembershipTester::MembershipTester(const AffineMonoid& s) : monoid_(s) { s.require_pointed(); }

bool MembershipTester::operator()(const GroupElement& m) {
    monoid_.group().check(m);
    return search(m);
}

bool MembershipTester::search(const GroupElement& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    bool result = false;
    if (m.has_zero_free_part()) {
        result = monoid_.is_unit(m.torsion);
    } else if (saturation_contains(monoid_, m) && dot(monoid_.grading(), m.free) > 0) {
        // Every positive generator has strictly positive grading, so the
        // recursion depth is bounded by the grading of m.
        for (const auto& g : monoid_.positive_generators()) {
            if (search(monoid_.group().sub(m, g))) {
                result = true;
                break;
            }
        }
    }
    memo_.emplace(m, result);
    return result;
}

bool contains(const AffineMonoid& s, const GroupElement& m) {
    MembershipTester t(s);
    return t(m);
}

bool saturation_contains(const AffineMonoid& s, const GroupElement& m) {
    s.group().check(m);
    return std::all_of(s.dual_rays().begin(), s.dual_rays().end(),
                       [&](const DualVector& u) { return pairing(u, m) >= 0; });
}

std::vector<GroupElement> saturation_generators(const AffineMonoid& s) {
    s.require_rays();
    const auto& group = s.group();
    std::vector<GroupElement> out;
    if (group.rank() > 0) {
        for (auto& h : hilbert_basis(s.recession_cone())) out.push_back(group.element(std::move(h), IntVector(group.torsion_count())));
    }
    for (std::size_t i = 0; i < group.torsion_count(); ++i) out.push_back(group.torsion_generator(i));
    return out;
}

AffineMonoid saturation(const AffineMonoid& s) { return AffineMonoid(s.group(), saturation_generators(s)); }

Integer corollary_escape_exponent(const AffineMonoid& s, const GroupElement& m, const GroupElement& alpha) {
    if (saturation_contains(s, alpha)) {
        throw DomainError(ErrorKind::AlphaInSaturation, "alpha lies in the saturation; no escape exponent exists");
    }
    MembershipTester in_s(s);
    if (!in_s(m)) throw DomainError(ErrorKind::NotInMonoid, "m is not in S");

    const DualVector* witness = nullptr;
    for (const auto& u : s.dual_rays()) {
        if (pairing(u, alpha) < 0) {
            witness = &u;
            break;
        }
    }
    // u(m + l*alpha) < 0 once l exceeds u(m) / -u(alpha).
    const Integer um = pairing(*witness, m);
    const Integer step = -pairing(*witness, alpha);
    Integer limit;
    mpz_cdiv_q(limit.get_mpz_t(), um.get_mpz_t(), step.get_mpz_t());
    limit += 1;

    GroupElement cur = m;
    for (Integer l = 1; l <= limit; ++l) {
        cur = s.group().add(cur, alpha);
        if (!in_s(cur)) return l;
    }
    throw DomainError(ErrorKind::ValidationFailed, "escape exponent exceeded its proven bound");
}

bool Face::contains(MembershipTester& in_s, const GroupElement& m) const {
    if (!in_s(m)) return false;
    return !defining_ray || pairing(*defining_ray, m) == 0;
}

std::vector<GroupElement> Face::generators(const AffineMonoid& s) const {
    std::vector<GroupElement> out;
    for (const auto& g : s.generators())
        if (!defining_ray || pairing(*defining_ray, g) == 0) out.push_back(g);
    return out;
}

}  // namespace toric
