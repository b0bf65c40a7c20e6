#pragma once

#include <string>

#include "mtlattice/cmtype.hpp"
#include "mtlattice/zlattice.hpp"

namespace mtlat {

/// Two CM factors presented inside one common Galois group with a shared
/// complex conjugation.
struct PairInput {
    GroupPtr group;
    CentralInvolution rho;
    CMFactor factor1;
    CMFactor factor2;

    /// Validates that both factors share the group and rho and that neither
    /// subgroup contains rho.
    static PairInput make(GroupPtr group, CentralInvolution rho, CMFactor factor1,
                          CMFactor factor2);
};

enum class ProjectionStatus { Iso, Isogeny, Neither };

std::string to_string(ProjectionStatus s);

/// Outcome of the character-lattice analysis of a product of two CM factors.
struct PairAnalysis {
    int dim_mt_1 = 0;
    int dim_mt_2 = 0;
    int dim_mt_product = 0;
    int dim_hg_1 = 0;
    int dim_hg_2 = 0;
    int dim_hg_product = 0;
    ProjectionStatus status_pi1 = ProjectionStatus::Neither;
    ProjectionStatus status_pi2 = ProjectionStatus::Neither;
    int kernel_rank = 0;
    IntMatrix matrix;  // |G| x (c1 + c2) concatenated block matrix
};

/// The |G| x |H\G| matrix of the composite character map T_E -> T_L induced
/// by the reflex norm and the field norm: entry (g1, Hg2) is 1 exactly when
/// g1*inv(g2) lies in the lift of the reflex type (g2 the canonical coset
/// representative; the lift is right-H-stable, so this is well defined).
IntMatrix reflex_norm_block(const CMType& t);

/// Horizontal concatenation of the two factor blocks, factor 1 first.
IntMatrix pair_matrix(const PairInput& p);

struct MtDimension {
    int dim_mt = 0;
    int dim_hg = 0;
};

/// dim MT = |H\G| - (kernel rank of the factor block); dim Hg = dim MT - 1.
MtDimension mt_dimension(const CMType& t);

/// Kernel of the concatenated matrix, product dimension, and the status of
/// each projection. Projection pi_i is classified against the factor-i
/// coordinate block: the kernel rows plus the standard basis of block i
/// span everything (Iso), a finite-index sublattice (Isogeny), or less.
PairAnalysis pair_analysis(const PairInput& p);

}  // namespace mtlat
