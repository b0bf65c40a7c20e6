#pragma once

#include <json.hpp>

#include <string>

#include "mtlattice/classify.hpp"
#include "mtlattice/mtgroup.hpp"

namespace mtlat::io {

using json = nlohmann::ordered_json;

json group_spec_to_json(const GroupSpec& spec);
/// Throws InputError naming the offending field.
GroupSpec group_spec_from_json(const json& j, const std::string& path = "group");

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, const std::string& path = "matrix");

json cm_type_to_json(const CMType& t);
/// Reads {"H": [...], "phi": [...]} relative to a group and rho; "phi" lists
/// coset representatives as element indices, resolved through right_cosets.
CMType cm_type_from_json(const json& j, const GroupPtr& group, CentralInvolution rho,
                         const std::string& path);

/// Full pair input {"group", "rho", "factor1", "factor2"}.
PairInput pair_input_from_json(const json& j);

/// Reflex request {"group", "rho", "H", "phi"}.
CMType reflex_input_from_json(const json& j);

/// Search request {"group", "rho", "H1", "H2"}.
struct SearchInput {
    GroupPtr group;
    CentralInvolution rho;
    Subgroup h1;
    Subgroup h2;

    SearchInput(GroupPtr g, CentralInvolution r, Subgroup a, Subgroup b)
        : group(std::move(g)), rho(r), h1(std::move(a)), h2(std::move(b)) {}
};
SearchInput search_input_from_json(const json& j);

json reflex_report_to_json(const CMType& t, const ReflexDatum& rd, bool primitive);
std::string reflex_report_to_text(const CMType& t, const ReflexDatum& rd, bool primitive);

json pair_analysis_to_json(const PairAnalysis& a, bool with_matrix = true);
std::string pair_analysis_to_text(const PairAnalysis& a);

json record_to_json(const ClassificationRecord& r);

json campaign_report_to_json(const CampaignReport& r, bool include_timing = true);
std::string campaign_report_to_text(const CampaignReport& r, bool include_timing = true);

json search_records_to_json(const std::vector<ClassificationRecord>& records);
std::string search_records_to_text(const std::vector<ClassificationRecord>& records);

json family_report_to_json(const FamilyTypes& f, const PairAnalysis& a, bool primitive,
                           bool essentially_different);
std::string family_report_to_text(const FamilyTypes& f, const PairAnalysis& a, bool primitive,
                                  bool essentially_different);

json shioda_report_to_json(const ShiodaReport& r);
std::string shioda_report_to_text(const ShiodaReport& r);

}  // namespace mtlat::io
