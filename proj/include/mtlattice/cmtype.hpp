#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtlattice/group.hpp"

namespace mtlat {

// Conventions: G acts on the field on the right, embeddings of the fixed
// field of H are the right cosets Hg, conjugation is composition with the
// central involution rho (Hg -> Hg·rho), and precomposition with a field
// automorphism given by n in N_G(H) is the left translation Hg -> H(ng).

/// A CM type: half of the cosets of H\G, no two of which are conjugate.
struct CMType {
    CosetSpace space;
    std::vector<int> phi;  // sorted coset indices, |phi| = num_cosets/2
    CentralInvolution rho;

    int g() const { return static_cast<int>(phi.size()); }
    bool operator==(const CMType& other) const {
        return space == other.space && phi == other.phi && rho == other.rho;
    }
};

/// A CM abelian-variety factor: a CM type with a display label.
struct CMFactor {
    CMType type;
    std::string label;
};

/// Reflex data of a CM type: the reflex group H', the coset space H'\G, the
/// reflex type on it, and the element-level lift of the reflex type.
struct ReflexDatum {
    Subgroup reflex_group;
    CosetSpace reflex_space;
    std::vector<int> reflex_type;   // coset indices in reflex_space
    std::vector<int> lift_inverse;  // sorted element indices
    CentralInvolution rho;

    CMType as_cm_type() const;
};

/// The conjugate coset index of c under rho.
int conjugate_coset(const CosetSpace& space, int c, CentralInvolution rho);

/// Checks |phi| = cosets/2 and that no coset appears together with its
/// conjugate. Throws RhoInSubgroup or NotACMType.
CMType validate_cm_type(const CosetSpace& space, std::vector<int> phi, CentralInvolution rho);

/// All 2^g CM types of the space, ordered lexicographically by coset set.
std::vector<CMType> enumerate_cm_types(const CosetSpace& space, CentralInvolution rho);

/// The element-level lift {g in G : Hg in phi}, sorted.
std::vector<int> lift(const CMType& t);

/// Reflex group (right stabilizer of the lift), reflex type and its lift.
ReflexDatum reflex(const CMType& t);

/// True when the left stabilizer of the lift is exactly H.
bool is_primitive(const CMType& t);

/// Smallest n in N_G(H) with {H(n g) : Hg in phi1} = phi2, if any.
/// Throws SpaceMismatch when the types live on different spaces.
std::optional<int> essentially_equal(const CMType& t1, const CMType& t2);

/// Moves t along the conjugation x -> g^-1 x g onto target_h\G.
/// Throws NotAConjugation unless g^-1 H g = target_h.
CMType transport(const CMType& t, int g, const Subgroup& target_h);

}  // namespace mtlat
