#include "toric/surface.hpp"

#include "toric/error.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

// (d, e) with `first` sent to (0,1) and `second` to (d, -e).
std::pair<Integer, Integer> normal_form_for(const IntVector& first, const IntVector& second) {
    const Integer& p = first[0];
    const Integer& q = first[1];
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    // A = [[q, -p], [x, y]] has det 1 and sends (p, q) to (0, 1).
    Integer b1 = q * second[0] - p * second[1];
    Integer b2 = x * second[0] + y * second[1];
    if (b1 < 0) b1 = -b1;  // reflection fixing (0, 1)
    // Shears (u, v) -> (u, v + k u) fix (0, 1); pick e in [0, d).
    Integer e = mod_floor(-b2, b1);
    return {b1, e};
}

}  // namespace

void require_surface_without_torus_factor(const Cone& sigma) {
    if (sigma.rank() != 2) {
        throw DomainError(ErrorKind::RankUnsupported, "surfaces need rank 2, got " + std::to_string(sigma.rank()));
    }
    if (!is_pointed(sigma)) throw DomainError(ErrorKind::NotPointed, "sigma contains a line");
    if (sigma.dimension() == 0) {
        throw DomainError(ErrorKind::NotPointed,
                          "X_σ = G_m² is a torus; known special case, not computed");
    }
    if (sigma.dimension() == 1) {
        throw DomainError(ErrorKind::NotPointed,
                          "X_σ = G_m×A¹ has a torus factor; known special case: Aut(X_σ)=Z/2Z×(G_a⋊G_m) while "
                          "Aut(X_S)=Z/2Z×G_m");
    }
}

SurfaceData surface_normal_form(const Cone& sigma) {
    require_surface_without_torus_factor(sigma);
    const auto& rays = sigma.rays();
    auto a = normal_form_for(rays[0], rays[1]);
    auto b = normal_form_for(rays[1], rays[0]);
    if (a.first != b.first) throw DomainError(ErrorKind::ValidationFailed, "normal form orderings disagree on d");
    return SurfaceData{sigma, a.first, std::min(a.second, b.second)};
}

Cone normal_form_cone(const Integer& d, const Integer& e) {
    if (d < 1 || e < 0 || e >= d || gcd(d, e) != 1) {
        throw DomainError(ErrorKind::InvalidGroup, "normal form needs d >= 1, 0 <= e < d, gcd(d, e) = 1");
    }
    return Cone(2, {IntVector{0, 1}, IntVector{d, -e}});
}

std::vector<IntVector> dual_hilbert_basis(const Cone& sigma) {
    if (!is_pointed(sigma) || !sigma.is_full_dimensional()) {
        throw DomainError(ErrorKind::NotPointed, "sigma must be pointed and full-dimensional");
    }
    return hilbert_basis(dual_cone(sigma));
}

AffineMonoid deletion_monoid(const Cone& sigma, const AbelianGroup& group) {
    if (group.rank() != sigma.rank()) throw DomainError(ErrorKind::LengthMismatch, "group rank differs from cone rank");
    const Cone dual = dual_cone(sigma);
    const auto hilbert = dual_hilbert_basis(sigma);
    const IntVector no_torsion(group.torsion_count());

    // Any sum of n >= 2 Hilbert elements is a sum of pairs, or of one triple
    // and pairs.
    std::set<IntVector, IntVectorLess> sums;
    for (std::size_t i = 0; i < hilbert.size(); ++i)
        for (std::size_t j = i; j < hilbert.size(); ++j) {
            IntVector ij = add(hilbert[i], hilbert[j]);
            for (std::size_t l = j; l < hilbert.size(); ++l) sums.insert(add(ij, hilbert[l]));
            sums.insert(std::move(ij));
        }
    std::vector<GroupElement> gens;
    for (const auto& s : sums) gens.push_back(group.element(s, no_torsion));
    for (std::size_t i = 0; i < group.torsion_count(); ++i) gens.push_back(group.torsion_generator(i));

    const AffineMonoid full(group, gens);
    MembershipTester in_full(full);
    std::vector<GroupElement> minimal;
    for (const auto& s : full.generators()) {
        bool reducible = false;
        if (!s.has_zero_free_part()) {
            for (const auto& g : full.positive_generators()) {
                if (g == s) continue;
                GroupElement rest = group.sub(s, g);
                if (!rest.has_zero_free_part() && in_full(rest)) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) minimal.push_back(s);
    }
    AffineMonoid result(group, minimal);

    // Box check against the direct description.
    Integer extent = 1;
    for (const auto& h : hilbert)
        for (const auto& x : h) extent = std::max(extent, Integer(abs(x)));
    const long box = 2 * extent.get_si() + 1;
    MembershipTester in_s(result);
    const std::set<IntVector, IntVectorLess> hset(hilbert.begin(), hilbert.end());
    for (const auto& m : box_elements(group, box)) {
        bool expected = m.has_zero_free_part() || (dual.contains(m.free) && !hset.count(m.free));
        if (in_s(m) != expected) {
            throw DomainError(ErrorKind::ValidationFailed,
                              "deletion monoid disagrees with (sigma^v ∩ M) \\ H at " + to_string(m.free));
        }
    }
    return result;
}

AffineMonoid deletion_monoid(const Cone& sigma) {
    return deletion_monoid(sigma, AbelianGroup::free_group(sigma.rank()));
}

AffineLineFactor has_affine_line_factor(const Cone& sigma, long bound) {
    if (!is_pointed(sigma)) throw DomainError(ErrorKind::NotPointed, "sigma contains a line");
    const std::size_t r = sigma.rank();
    const auto& rays = sigma.rays();
    const Cone dual = dual_cone(sigma);

    // rho(alpha) = -1 and rho'(alpha) = 0 elsewhere make -alpha lie in sigma^v.
    AffineLineFactor out;
    for (std::size_t k = 0; k < rays.size() && !out.present; ++k) {
        IntVector rhs(rays.size());
        rhs[k] = -1;
        auto alpha = solve_integer(rays, rhs, r);
        if (!alpha) continue;
        out.present = true;
        out.ray = DualVector{rays[k]};
        out.witness = GroupElement{*alpha, {}};
    }

    const auto group = AbelianGroup::free_group(r);
    for (const auto& root : enumerate_roots(sigma, group, bound)) {
        if (dual.contains(negate(root.alpha().free))) {
            out.box_search_found = true;
            break;
        }
    }
    bool witness_in_box = out.witness && std::all_of(out.witness->free.begin(), out.witness->free.end(),
                                                     [&](const Integer& x) { return abs(x) <= bound; });
    // The box cannot invent a factor, and must see a structural witness lying inside it.
    if ((out.box_search_found && !out.present) || (witness_in_box && !out.box_search_found)) {
        throw DomainError(ErrorKind::ValidationFailed, "box search disagrees with the structural A^1-factor test");
    }
    return out;
}

RootEqualityReport verify_root_equality(const Cone& sigma, const AbelianGroup& group, long bound) {
    RootEqualityReport rep{surface_normal_form(sigma), {}, {}, {}, {}, false, {}, {}, {}, {}};
    if (group.rank() != 2) throw DomainError(ErrorKind::RankUnsupported, "surfaces need rank 2");

    const AffineMonoid s = deletion_monoid(sigma, group);
    rep.deletion_generators = s.generators();
    rep.hilbert_basis = dual_hilbert_basis(sigma);
    rep.cone_roots = enumerate_roots(sigma, group, bound);
    rep.monoid_roots = enumerate_roots(s, bound);
    rep.equal = rep.cone_roots == rep.monoid_roots;
    rep.line_factor = has_affine_line_factor(sigma, bound);

    for (const auto& root : rep.cone_roots)
        if (!std::binary_search(rep.monoid_roots.begin(), rep.monoid_roots.end(), root)) rep.lost_roots.push_back(root);

    if (rep.equal == rep.line_factor.present) {
        throw DomainError(ErrorKind::ValidationFailed,
                          std::string("box verdict ") + (rep.equal ? "EQUAL" : "NOT_EQUAL") +
                              " contradicts the structural A^1-factor test");
    }
    if (!rep.equal) {
        // The structural witness alpha loses its root property at m = -2 alpha:
        // rho(m) = 2 > 0 while m + alpha = -alpha is a deleted Hilbert element.
        GroupElement alpha = group.element(rep.line_factor.witness->free, IntVector(group.torsion_count()));
        const DualVector& rho = *rep.line_factor.ray;
        MembershipTester in_s(s);
        std::optional<GroupElement> gen;
        GroupElement preferred = group.scale(alpha, -2);
        if (std::binary_search(s.generators().begin(), s.generators().end(), preferred) &&
            !in_s(group.add(preferred, alpha))) {
            gen = preferred;
        } else {
            for (const auto& g : s.generators()) {
                if (pairing(rho, g) > 0 && !in_s(group.add(g, alpha))) {
                    gen = g;
                    break;
                }
            }
        }
        if (!gen) throw DomainError(ErrorKind::ValidationFailed, "lost root without a failing generator");
        rep.witness_root = alpha;
        rep.witness_generator = gen;
    }
    return rep;
}

RootEqualityReport verify_root_equality(const Cone& sigma, long bound) {
    return verify_root_equality(sigma, AbelianGroup::free_group(sigma.rank()), bound);
}

AutGeneratorsReport aut_generators_report(const Cone& sigma, long bound) {
    surface_normal_form(sigma);  // refusal of degenerate inputs
    const auto group = AbelianGroup::free_group(2);
    AutGeneratorsReport rep;
    rep.torus_rank = 2;

    std::vector<GroupElement> hilbert;
    for (const auto& h : dual_hilbert_basis(sigma)) hilbert.push_back(group.element(h));
    rep.coordinate_generators = hilbert;
    auto normal = std::make_shared<const AffineMonoid>(group, hilbert);

    const auto roots = enumerate_roots(sigma, group, bound);
    for (const auto& rho : sigma.rays()) {
        RayActions ra{DualVector{rho}, {}};
        for (const auto& root : roots) {
            if (!(root.distinguished_ray() == ra.ray)) continue;
            auto d = root_derivation(root, normal);
            RootAction action{root, {}};
            for (const auto& h : hilbert) action.comorphism.emplace_back(h, exp_action(d, AlgebraElement::monomial(h)));
            ra.actions.push_back(std::move(action));
        }
        rep.rays.push_back(std::move(ra));
    }
    return rep;
}

}  // namespace toric
