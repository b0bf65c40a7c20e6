#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtlattice/mtgroup.hpp"

namespace mtlat {

/// One analysed tuple (H1, H2, Phi1, Phi2) inside a common group.
struct ClassificationRecord {
    std::string group_name;
    std::vector<int> h1;
    std::vector<int> h2;
    std::vector<int> phi1;  // coset representatives (element indices)
    std::vector<int> phi2;
    int dim_mt_1 = 0;
    int dim_mt_2 = 0;
    int dim_mt_product = 0;
    ProjectionStatus status_pi1 = ProjectionStatus::Neither;
    ProjectionStatus status_pi2 = ProjectionStatus::Neither;
    std::optional<int> conjugacy_witness;
    bool essentially_equal_after_transport = false;
    bool primitive1 = false;
    bool primitive2 = false;
    bool equal_dims = false;
    bool violation = false;
};

struct CampaignOptions {
    /// Subset of {"C6", "D6", "C2xA4", "C2xS4"}; empty selects all four.
    std::vector<std::string> groups;
    int jobs = 1;
    /// By default only primitive CM types (simple factors) enter the run.
    bool include_imprimitive = false;
    /// Violations are always recorded; this keeps every record.
    bool full_records = false;
};

struct CampaignReport {
    long tuples_examined = 0;
    long equal_dims = 0;
    long violations = 0;
    std::vector<ClassificationRecord> records;
    double elapsed_seconds = 0.0;
    CampaignOptions settings;
};

/// Exhaustive run over the sextic catalog groups: for every ordered pair of
/// index-6 subgroups avoiding rho and every pair of CM types, analyse the
/// product and test whether equal Mumford-Tate dimensions force conjugate
/// subgroups with essentially equal transported types.
CampaignReport classify_threefolds(const CampaignOptions& options = {});

struct SearchRequire {
    bool primitive = false;
    bool essentially_different = false;
};

/// All CM-type pairs on h1\G x h2\G whose projections both reach at least
/// the requested status (Iso, or Isogeny-or-better), deterministic order.
std::vector<ClassificationRecord> search_pairs(const GroupPtr& group, CentralInvolution rho,
                                               const Subgroup& h1, const Subgroup& h2,
                                               ProjectionStatus mode, SearchRequire require);

/// The two-parameter family of CM types on Gal = Z/g x Z/2 given by their
/// reflex types, with r = h = the smallest prime not dividing g; the primal
/// types are recovered through the reflex involution.
struct FamilyTypes {
    GroupPtr group;
    CentralInvolution rho;
    CMType dual1;
    CMType dual2;
    CMType primal1;
    CMType primal2;
    int r = 0;
    int h = 0;
};

/// Throws UnsupportedG for g in {1, 2, 3, 4, 6} (or g < 1).
FamilyTypes family_types(int g);

struct ShiodaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ShiodaReport {
    std::vector<ShiodaCheck> checks;
    PairAnalysis analysis;

    bool all_pass() const;
};

/// Golden verification of the CM threefold X (field Q(zeta_9), type
/// {s1,s2,s4}) paired with the elliptic factor fixed by {s1,s4,s7}: reflex
/// type, the full 6x8 block matrix, two explicit kernel vectors, the span
/// test for pi_1, and the resulting Iso status.
ShiodaReport verify_shioda();

/// Representative element indices of the type, in coset order.
std::vector<int> coset_reps(const CMType& t);

}  // namespace mtlat
