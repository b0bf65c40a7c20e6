#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mtlat {

class FiniteGroup;
// Groups are immutable after construction; sharing non-const pointers is safe.
using GroupPtr = std::shared_ptr<FiniteGroup>;

/// A finite group given by its multiplication table on indices 0..order-1.
/// Instances are immutable after construction; all tables are precomputed.
/// The factory checks the group axioms exhaustively (orders are capped at 96).
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 96;

    /// Validates the table (totality, identity, inverses, associativity).
    /// Throws AxiomViolation or OrderTooLarge.
    static GroupPtr from_table(std::vector<std::vector<int>> mul,
                               std::vector<std::string> labels = {}, std::string name = "table");

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return identity_; }
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }

    /// Row-major copy of the multiplication table.
    std::vector<std::vector<int>> table() const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    int identity_ = 0;
    std::vector<int> mul_;  // order x order, row-major
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::string name_;
};

/// Recipe for a catalog group.
struct GroupSpec {
    enum class Kind { Cyclic, Dihedral, C2Times, UnitGroupMod, Table };

    Kind kind = Kind::Cyclic;
    int n = 1;                          // cyclic(n), dihedral(n) [order 2n], unit_group_mod(n)
    std::string base;                   // "A4" or "S4" for c2_times
    std::vector<std::vector<int>> mul;  // raw table

    static GroupSpec cyclic(int n) { return {Kind::Cyclic, n, "", {}}; }
    static GroupSpec dihedral(int n) { return {Kind::Dihedral, n, "", {}}; }
    static GroupSpec c2_times(std::string base) { return {Kind::C2Times, 0, std::move(base), {}}; }
    static GroupSpec unit_group_mod(int n) { return {Kind::UnitGroupMod, n, "", {}}; }
    static GroupSpec table(std::vector<std::vector<int>> mul) {
        return {Kind::Table, 0, "", std::move(mul)};
    }
};

/// Builds the group described by spec with its canonical element ordering:
/// cyclic groups by exponent, unit groups by ascending residue, dihedral as
/// e, r, ..., r^{n-1}, s, sr, ..., direct products lexicographic (C2 first).
GroupPtr make_group(const GroupSpec& spec);

/// A central element of order two (complex conjugation in CM data).
struct CentralInvolution {
    int elem = -1;

    bool operator==(const CentralInvolution&) const = default;
};

/// Subgroup of a fixed parent, stored as a sorted element list.
class Subgroup {
public:
    /// Validates membership of the identity and closure under mul/inv.
    static Subgroup from_elements(GroupPtr parent, std::vector<int> elems);

    /// The full group as a subgroup of itself.
    static Subgroup whole(GroupPtr parent);
    static Subgroup trivial(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& elems() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool contains(int g) const { return member_[g]; }
    int index() const { return parent_->order() / order(); }

    bool same_parent(const Subgroup& other) const { return parent_ == other.parent_; }
    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elems_ == other.elems_;
    }

private:
    Subgroup(GroupPtr parent, std::vector<int> elems);

    GroupPtr parent_;
    std::vector<int> elems_;
    std::vector<char> member_;
};

/// The ordered partition of G into right cosets Hg. Cosets are sorted by
/// their minimal element, which also serves as the representative.
struct CosetSpace {
    GroupPtr group;
    Subgroup subgroup;
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of;

    int num_cosets() const { return static_cast<int>(cosets.size()); }
    int representative(int c) const { return cosets[c][0]; }

    bool operator==(const CosetSpace& other) const {
        return group == other.group && subgroup == other.subgroup;
    }
};

/// All central order-2 elements, in index order. May be empty.
std::vector<CentralInvolution> central_involutions(const FiniteGroup& g);

/// Every subgroup of order k, optionally dropping those containing the given
/// element; deterministic order (lexicographic element lists).
/// Throws NonDivisorOrder when k does not divide |G|.
std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, int k,
                                         std::optional<CentralInvolution> excluding = {});

CosetSpace right_cosets(const Subgroup& h);

/// N_G(H) = {g : g^-1 H g = H}.
Subgroup normalizer(const Subgroup& h);

/// Smallest g with g^-1 H1 g = H2, if any.
std::optional<int> are_conjugate(const Subgroup& h1, const Subgroup& h2);

/// Closure of a set of elements under multiplication and inverse.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

}  // namespace mtlat
