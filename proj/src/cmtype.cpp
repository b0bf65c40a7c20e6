#include "mtlattice/cmtype.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "mtlattice/errors.hpp"

namespace mtlat {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_rho(const FiniteGroup& g, CentralInvolution rho) {
    if (rho.elem < 0 || rho.elem >= g.order())
        throw NotACMType("rho element index out of range");
    if (rho.elem == g.identity() || g.mul(rho.elem, rho.elem) != g.identity())
        throw NotACMType("rho is not an involution");
    for (int y = 0; y < g.order(); ++y)
        if (!g.commutes(rho.elem, y)) throw NotACMType("rho is not central");
}

}  // namespace

int conjugate_coset(const CosetSpace& space, int c, CentralInvolution rho) {
    return space.coset_of[space.group->mul(space.representative(c), rho.elem)];
}

CMType validate_cm_type(const CosetSpace& space, std::vector<int> phi, CentralInvolution rho) {
    const FiniteGroup& g = *space.group;
    check_rho(g, rho);
    if (space.subgroup.contains(rho.elem))
        throw RhoInSubgroup("rho lies in the subgroup H, so conjugation acts trivially on H\\G");
    phi = sorted_unique(phi);
    int n = space.num_cosets();
    for (int c : phi)
        if (c < 0 || c >= n) throw NotACMType("phi contains an invalid coset index");
    if (static_cast<int>(phi.size()) * 2 != n)
        throw NotACMType("phi must contain exactly half of the cosets");
    for (int c : phi) {
        int cbar = conjugate_coset(space, c, rho);
        if (std::binary_search(phi.begin(), phi.end(), cbar))
            throw NotACMType("phi contains a pair of conjugate cosets");
    }
    return CMType{space, std::move(phi), rho};
}

std::vector<CMType> enumerate_cm_types(const CosetSpace& space, CentralInvolution rho) {
    check_rho(*space.group, rho);
    if (space.subgroup.contains(rho.elem))
        throw RhoInSubgroup("rho lies in the subgroup H, so conjugation acts trivially on H\\G");
    // Pair each coset with its conjugate; rho central and outside H means the
    // pairing has no fixed points.
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> seen(space.num_cosets(), 0);
    for (int c = 0; c < space.num_cosets(); ++c) {
        if (seen[c]) continue;
        int cbar = conjugate_coset(space, c, rho);
        assert(cbar != c && !seen[cbar]);
        seen[c] = seen[cbar] = 1;
        pairs.emplace_back(c, cbar);
    }
    std::vector<CMType> out;
    int g = static_cast<int>(pairs.size());
    assert(g < 31);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g); ++mask) {
        std::vector<int> phi;
        phi.reserve(g);
        for (int i = 0; i < g; ++i)
            phi.push_back(mask & (std::uint64_t(1) << i) ? pairs[i].second : pairs[i].first);
        std::sort(phi.begin(), phi.end());
        out.push_back(CMType{space, std::move(phi), rho});
    }
    std::sort(out.begin(), out.end(),
              [](const CMType& a, const CMType& b) { return a.phi < b.phi; });
    return out;
}

std::vector<int> lift(const CMType& t) {
    std::vector<int> out;
    for (int x = 0; x < t.space.group->order(); ++x)
        if (std::binary_search(t.phi.begin(), t.phi.end(), t.space.coset_of[x])) out.push_back(x);
    return out;
}

ReflexDatum reflex(const CMType& t) {
    const FiniteGroup& g = *t.space.group;
    std::vector<int> lifted = lift(t);
    std::vector<char> in_lift(g.order(), 0);
    for (int x : lifted) in_lift[x] = 1;

    std::vector<int> stab;
    for (int y = 0; y < g.order(); ++y) {
        bool ok = true;
        for (int x : lifted)
            if (!in_lift[g.mul(x, y)]) {
                ok = false;
                break;
            }
        if (ok) stab.push_back(y);
    }
    Subgroup reflex_group = Subgroup::from_elements(t.space.group, std::move(stab));
    CosetSpace reflex_space = right_cosets(reflex_group);

    std::vector<int> lift_inverse;
    lift_inverse.reserve(lifted.size());
    for (int x : lifted) lift_inverse.push_back(g.inv(x));
    std::sort(lift_inverse.begin(), lift_inverse.end());

    std::vector<int> reflex_type;
    for (int x : lift_inverse) reflex_type.push_back(reflex_space.coset_of[x]);
    reflex_type = sorted_unique(reflex_type);

    ReflexDatum datum{std::move(reflex_group), std::move(reflex_space), std::move(reflex_type),
                      std::move(lift_inverse), t.rho};
    // The reflex type is itself a CM type for the same rho.
    validate_cm_type(datum.reflex_space, datum.reflex_type, datum.rho);
    return datum;
}

CMType ReflexDatum::as_cm_type() const { return CMType{reflex_space, reflex_type, rho}; }

bool is_primitive(const CMType& t) {
    const FiniteGroup& g = *t.space.group;
    std::vector<int> lifted = lift(t);
    std::vector<char> in_lift(g.order(), 0);
    for (int x : lifted) in_lift[x] = 1;
    std::vector<int> stab;
    for (int y = 0; y < g.order(); ++y) {
        bool ok = true;
        for (int x : lifted)
            if (!in_lift[g.mul(y, x)]) {
                ok = false;
                break;
            }
        if (ok) stab.push_back(y);
    }
    return stab == t.space.subgroup.elems();
}

std::optional<int> essentially_equal(const CMType& t1, const CMType& t2) {
    if (!(t1.space == t2.space) || !(t1.rho == t2.rho))
        throw SpaceMismatch("CM types live on different coset spaces");
    const CosetSpace& space = t1.space;
    Subgroup n = normalizer(space.subgroup);
    for (int w : n.elems()) {
        std::vector<int> image;
        image.reserve(t1.phi.size());
        for (int c : t1.phi)
            image.push_back(space.coset_of[space.group->mul(w, space.representative(c))]);
        std::sort(image.begin(), image.end());
        if (image == t2.phi) return w;
    }
    return std::nullopt;
}

CMType transport(const CMType& t, int g, const Subgroup& target_h) {
    const FiniteGroup& grp = *t.space.group;
    assert(target_h.parent() == t.space.group);
    std::vector<int> conj;
    conj.reserve(t.space.subgroup.order());
    for (int a : t.space.subgroup.elems()) conj.push_back(grp.mul(grp.mul(grp.inv(g), a), g));
    std::sort(conj.begin(), conj.end());
    if (conj != target_h.elems())
        throw NotAConjugation("element does not conjugate H onto the target subgroup");

    CosetSpace target_space = right_cosets(target_h);
    std::vector<int> moved_phi;
    for (int x : lift(t))
        moved_phi.push_back(target_space.coset_of[grp.mul(grp.mul(grp.inv(g), x), g)]);
    moved_phi = sorted_unique(moved_phi);
    return validate_cm_type(target_space, std::move(moved_phi), t.rho);
}

}  // namespace mtlat
