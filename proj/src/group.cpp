#include "mtlattice/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "mtlattice/errors.hpp"

namespace mtlat {

namespace {

std::string index_label(int i) { return "g" + std::to_string(i); }

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    return mul;
}

// Elements are s^e r^k with index e*n + k; s r s = r^-1 gives
// (s^e1 r^k1)(s^e2 r^k2) = s^(e1+e2) r^((-1)^e2 k1 + k2).
std::vector<std::vector<int>> dihedral_table(int n) {
    int order = 2 * n;
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        int e1 = a / n, k1 = a % n;
        for (int b = 0; b < order; ++b) {
            int e2 = b / n, k2 = b % n;
            int k = ((e2 ? -k1 : k1) + k2) % n;
            if (k < 0) k += n;
            mul[a][b] = ((e1 + e2) % 2) * n + k;
        }
    }
    return mul;
}

int permutation_parity(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}

std::string one_line(const std::vector<int>& p) {
    std::string s;
    for (int x : p) s += static_cast<char>('0' + x);
    return s;
}

// Permutations of {0,1,2,3} in lexicographic one-line order, optionally
// restricted to the even ones. Product = apply left factor first.
void symmetric_table(bool even_only, std::vector<std::vector<int>>& mul,
                     std::vector<std::string>& labels) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p = {0, 1, 2, 3};
    do {
        if (!even_only || permutation_parity(p) == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    auto find = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    mul.assign(n, std::vector<int>(n));
    labels.clear();
    for (int a = 0; a < n; ++a) {
        labels.push_back(one_line(perms[a]));
        for (int b = 0; b < n; ++b) {
            std::vector<int> r(4);
            for (int x = 0; x < 4; ++x) r[x] = perms[b][perms[a][x]];
            mul[a][b] = find(r);
        }
    }
}

// C2 x B with lexicographic (z, b) ordering: index = z*|B| + b.
void c2_times_table(const std::vector<std::vector<int>>& base,
                    const std::vector<std::string>& base_labels,
                    std::vector<std::vector<int>>& mul, std::vector<std::string>& labels) {
    int nb = static_cast<int>(base.size());
    int n = 2 * nb;
    mul.assign(n, std::vector<int>(n));
    labels.clear();
    for (int a = 0; a < n; ++a) {
        labels.push_back((a / nb ? "c" : "") + base_labels[a % nb]);
        for (int b = 0; b < n; ++b)
            mul[a][b] = ((a / nb + b / nb) % 2) * nb + base[a % nb][b % nb];
    }
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> mul, std::vector<std::string> labels,
                                 std::string name) {
    int n = static_cast<int>(mul.size());
    if (n == 0) throw AxiomViolation("empty multiplication table");
    if (n > kMaxOrder)
        throw OrderTooLarge("group order " + std::to_string(n) + " exceeds the supported maximum " +
                            std::to_string(kMaxOrder));
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw AxiomViolation("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw AxiomViolation("table entry out of range");
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul[e][x] == x && mul[x][e] == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw AxiomViolation("table has no identity element");

    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == identity && mul[b][a] == identity) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0)
            throw AxiomViolation("element " + std::to_string(a) + " has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw AxiomViolation("associativity fails at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");

    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(index_label(i));
    } else if (static_cast<int>(labels.size()) != n) {
        throw AxiomViolation("label count does not match group order");
    }

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->identity_ = identity;
    g->mul_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->mul_[a * n + b] = mul[a][b];
    g->inv_ = std::move(inv);
    g->labels_ = std::move(labels);
    g->name_ = std::move(name);
    return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
    return t;
}

GroupPtr make_group(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: {
            if (spec.n < 1) throw AxiomViolation("cyclic order must be positive");
            if (spec.n > FiniteGroup::kMaxOrder) throw OrderTooLarge("cyclic order too large");
            std::vector<std::string> labels = {"e"};
            for (int i = 1; i < spec.n; ++i)
                labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
            return FiniteGroup::from_table(cyclic_table(spec.n), std::move(labels),
                                           "C" + std::to_string(spec.n));
        }
        case GroupSpec::Kind::Dihedral: {
            if (spec.n < 1) throw AxiomViolation("dihedral parameter must be positive");
            if (2 * spec.n > FiniteGroup::kMaxOrder) throw OrderTooLarge("dihedral order too large");
            std::vector<std::string> labels;
            for (int e = 0; e < 2; ++e)
                for (int k = 0; k < spec.n; ++k) {
                    std::string rot = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
                    std::string lbl = (e ? "s" : "") + rot;
                    labels.push_back(lbl.empty() ? "e" : lbl);
                }
            return FiniteGroup::from_table(dihedral_table(spec.n), std::move(labels),
                                           "D" + std::to_string(spec.n));
        }
        case GroupSpec::Kind::C2Times: {
            if (spec.base != "A4" && spec.base != "S4")
                throw AxiomViolation("c2_times base must be A4 or S4");
            std::vector<std::vector<int>> base, mul;
            std::vector<std::string> base_labels, labels;
            symmetric_table(spec.base == "A4", base, base_labels);
            c2_times_table(base, base_labels, mul, labels);
            return FiniteGroup::from_table(std::move(mul), std::move(labels), "C2x" + spec.base);
        }
        case GroupSpec::Kind::UnitGroupMod: {
            if (spec.n < 2) throw AxiomViolation("unit_group_mod modulus must be at least 2");
            std::vector<int> residues;
            for (int a = 1; a < spec.n; ++a)
                if (std::gcd(a, spec.n) == 1) residues.push_back(a);
            int n = static_cast<int>(residues.size());
            if (n > FiniteGroup::kMaxOrder) throw OrderTooLarge("unit group too large");
            std::vector<int> index_of(spec.n, -1);
            for (int i = 0; i < n; ++i) index_of[residues[i]] = i;
            std::vector<std::vector<int>> mul(n, std::vector<int>(n));
            std::vector<std::string> labels;
            for (int i = 0; i < n; ++i) {
                labels.push_back("s" + std::to_string(residues[i]));
                for (int j = 0; j < n; ++j)
                    mul[i][j] = index_of[(residues[i] * residues[j]) % spec.n];
            }
            return FiniteGroup::from_table(std::move(mul), std::move(labels),
                                           "U" + std::to_string(spec.n));
        }
        case GroupSpec::Kind::Table:
            return FiniteGroup::from_table(spec.mul, {},
                                           "table" + std::to_string(spec.mul.size()));
    }
    throw AxiomViolation("unknown group spec kind");
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elems)
    : parent_(std::move(parent)), elems_(std::move(elems)), member_(parent_->order(), 0) {
    for (int e : elems_) member_[e] = 1;
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw AxiomViolation("subgroup cannot be empty");
    for (int e : elems)
        if (e < 0 || e >= parent->order()) throw AxiomViolation("subgroup element out of range");
    Subgroup h(std::move(parent), std::move(elems));
    const FiniteGroup& g = *h.parent_;
    if (!h.contains(g.identity())) throw AxiomViolation("subgroup does not contain the identity");
    for (int a : h.elems_) {
        if (!h.contains(g.inv(a))) throw AxiomViolation("subgroup is not closed under inverse");
        for (int b : h.elems_)
            if (!h.contains(g.mul(a, b)))
                throw AxiomViolation("subgroup is not closed under multiplication");
    }
    if (g.order() % h.order() != 0)
        throw AxiomViolation("subgroup order does not divide group order");
    return h;
}

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<int> all(parent->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
    int e = parent->identity();
    return Subgroup(std::move(parent), {e});
}

std::vector<CentralInvolution> central_involutions(const FiniteGroup& g) {
    std::vector<CentralInvolution> out;
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity() || g.mul(x, x) != g.identity()) continue;
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y) central = g.commutes(x, y);
        if (central) out.push_back({x});
    }
    return out;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> work = {g.identity()};
    seen[g.identity()] = 1;
    for (int x : gens)
        if (!seen[x]) {
            seen[x] = 1;
            work.push_back(x);
        }
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j) {
            int p = g.mul(work[i], work[j]);
            if (!seen[p]) {
                seen[p] = 1;
                work.push_back(p);
            }
        }
    std::sort(work.begin(), work.end());
    return work;
}

std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, int k,
                                         std::optional<CentralInvolution> excluding) {
    if (k < 1 || g->order() % k != 0)
        throw NonDivisorOrder("requested subgroup order " + std::to_string(k) +
                              " does not divide group order " + std::to_string(g->order()));
    // Breadth-first closure search: every subgroup of order k is reached by a
    // chain of subgroups of orders dividing k, each generated by the previous
    // one plus a single element.
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier = {{g->identity()}};
    found.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier) {
            if (static_cast<int>(s.size()) >= k) continue;
            for (int x = 0; x < g->order(); ++x) {
                if (std::binary_search(s.begin(), s.end(), x)) continue;
                std::vector<int> gens = s;
                gens.push_back(x);
                std::vector<int> t = generated_subgroup(*g, gens);
                if (k % t.size() != 0) continue;
                if (found.insert(t).second) next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto& s : found) {
        if (static_cast<int>(s.size()) != k) continue;
        if (excluding && std::binary_search(s.begin(), s.end(), excluding->elem)) continue;
        out.push_back(Subgroup::from_elements(g, s));
    }
    // std::set iteration is already lexicographic on the element lists.
    return out;
}

CosetSpace right_cosets(const Subgroup& h) {
    const FiniteGroup& g = *h.parent();
    CosetSpace space{h.parent(), h, {}, std::vector<int>(g.order(), -1)};
    for (int x = 0; x < g.order(); ++x) {
        if (space.coset_of[x] >= 0) continue;
        std::vector<int> coset;
        coset.reserve(h.order());
        for (int a : h.elems()) coset.push_back(g.mul(a, x));
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(space.cosets.size());
        for (int y : coset) space.coset_of[y] = idx;
        space.cosets.push_back(std::move(coset));
    }
    return space;
}

Subgroup normalizer(const Subgroup& h) {
    const FiniteGroup& g = *h.parent();
    std::vector<int> elems;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int a : h.elems()) {
            if (!h.contains(g.mul(g.mul(g.inv(x), a), x))) {
                ok = false;
                break;
            }
        }
        if (ok) elems.push_back(x);
    }
    return Subgroup::from_elements(h.parent(), std::move(elems));
}

std::optional<int> are_conjugate(const Subgroup& h1, const Subgroup& h2) {
    assert(h1.same_parent(h2));
    if (h1.order() != h2.order()) return std::nullopt;
    const FiniteGroup& g = *h1.parent();
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int a : h1.elems()) {
            if (!h2.contains(g.mul(g.mul(g.inv(x), a), x))) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    return std::nullopt;
}

}  // namespace mtlat
