#include "toric/roots.hpp"

#include "toric/error.hpp"

#include <algorithm>

namespace toric {

std::optional<DemazureRoot> is_cone_root(const Cone& sigma, const GroupElement& alpha) {
    if (!is_pointed(sigma)) throw DomainError(ErrorKind::NotPointed, "cone contains a line");
    if (alpha.free.size() != sigma.rank()) throw DomainError(ErrorKind::LengthMismatch, "root candidate");

    // Apply the definition literally: two rays at -1 disqualify both.
    std::vector<DualVector> rays;
    for (const auto& rho : sigma.rays()) {
        DualVector r{rho};
        if (pairing(r, alpha) != -1) continue;
        bool others_ok = std::all_of(sigma.rays().begin(), sigma.rays().end(), [&](const IntVector& other) {
            return other == rho || dot(other, alpha.free) >= 0;
        });
        if (others_ok) rays.push_back(std::move(r));
    }
    if (rays.empty()) return std::nullopt;
    return DemazureRoot(alpha, std::move(rays));
}

RootTester::RootTester(const AffineMonoid& s) : monoid_(s), in_s_(s) { s.require_rays(); }

bool RootTester::is_root_for(const GroupElement& alpha, const DualVector& rho) {
    if (pairing(rho, alpha) != -1) return false;
    for (const auto& g : monoid_.generators()) {
        if (pairing(rho, g) > 0 && !in_s_(monoid_.group().add(g, alpha))) return false;
    }
    return true;
}

std::optional<DemazureRoot> RootTester::operator()(const GroupElement& alpha) {
    monoid_.group().check(alpha);
    std::vector<DualVector> rays;
    for (const auto& rho : monoid_.dual_rays())
        if (is_root_for(alpha, rho)) rays.push_back(rho);
    if (rays.empty()) return std::nullopt;
    return DemazureRoot(alpha, std::move(rays));
}

std::optional<DemazureRoot> is_monoid_root(const AffineMonoid& s, const GroupElement& alpha) {
    RootTester t(s);
    return t(alpha);
}

Cone root_cone(const AffineMonoid& s) {
    s.require_rays();
    return dual_cone(s.recession_cone());
}

std::vector<GroupElement> box_elements(const AbelianGroup& group, long bound) {
    const std::size_t r = group.rank();
    const auto torsion = group.torsion_elements();
    std::vector<GroupElement> out;
    IntVector free(r, Integer(-bound));
    for (;;) {
        for (const auto& t : torsion) out.push_back(GroupElement{free, t});
        std::size_t i = 0;
        while (i < r && free[i] == bound) free[i++] = -bound;
        if (i == r) break;
        ++free[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DemazureRoot> enumerate_roots(const AffineMonoid& s, long bound) {
    RootTester test(s);
    std::vector<DemazureRoot> out;
    for (const auto& alpha : box_elements(s.group(), bound)) {
        if (auto root = test(alpha)) out.push_back(std::move(*root));
    }
    return out;
}

std::vector<DemazureRoot> enumerate_roots(const Cone& sigma, const AbelianGroup& group, long bound) {
    if (sigma.rank() != group.rank()) throw DomainError(ErrorKind::LengthMismatch, "cone and group ranks differ");
    std::vector<DemazureRoot> out;
    for (const auto& alpha : box_elements(group, bound)) {
        if (auto root = is_cone_root(sigma, alpha)) out.push_back(std::move(*root));
    }
    return out;
}

InclusionReport check_inclusion_in_saturation_roots(const AffineMonoid& s, long bound) {
    InclusionReport report;
    report.monoid_roots = enumerate_roots(s, bound);
    const AffineMonoid sat = saturation(s);
    report.saturation_roots = enumerate_roots(sat, bound);
    for (const auto& root : report.monoid_roots) {
        auto it = std::lower_bound(report.saturation_roots.begin(), report.saturation_roots.end(), root);
        bool found = it != report.saturation_roots.end() && it->alpha() == root.alpha() &&
                     std::find(it->satisfying_rays().begin(), it->satisfying_rays().end(), root.distinguished_ray()) !=
                         it->satisfying_rays().end();
        if (!found) report.violations.push_back(root);
    }
    return report;
}

}  // namespace toric
