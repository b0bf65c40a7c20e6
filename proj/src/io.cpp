#include "mtlattice/io.hpp"

#include <sstream>

#include "mtlattice/errors.hpp"

namespace mtlat::io {

namespace {

const json& require_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path + "." + key, "missing");
    return *it;
}

int require_int(const json& j, const std::string& key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number_integer()) throw InputError(path + "." + key, "expected an integer");
    return v.get<int>();
}

std::vector<int> require_int_array(const json& j, const std::string& key,
                                   const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_array()) throw InputError(path + "." + key, "expected an array of integers");
    std::vector<int> out;
    for (const json& x : v) {
        if (!x.is_number_integer())
            throw InputError(path + "." + key, "expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

json int_vector(const std::vector<int>& v) { return json(v); }

std::string labels_of(const FiniteGroup& g, const std::vector<int>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + g.label(elems[i]);
    return s + "}";
}

}  // namespace

json group_spec_to_json(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: return {{"kind", "cyclic"}, {"n", spec.n}};
        case GroupSpec::Kind::Dihedral: return {{"kind", "dihedral"}, {"n", spec.n}};
        case GroupSpec::Kind::C2Times: return {{"kind", "c2_times"}, {"base", spec.base}};
        case GroupSpec::Kind::UnitGroupMod: return {{"kind", "unit_group_mod"}, {"n", spec.n}};
        case GroupSpec::Kind::Table: return {{"kind", "table"}, {"mul", spec.mul}};
    }
    throw InputError("kind", "unknown group spec kind");
}

GroupSpec group_spec_from_json(const json& j, const std::string& path) {
    const json& kind = require_field(j, "kind", path);
    if (!kind.is_string()) throw InputError(path + ".kind", "expected a string");
    std::string k = kind.get<std::string>();
    if (k == "cyclic") return GroupSpec::cyclic(require_int(j, "n", path));
    if (k == "dihedral") return GroupSpec::dihedral(require_int(j, "n", path));
    if (k == "unit_group_mod") return GroupSpec::unit_group_mod(require_int(j, "n", path));
    if (k == "c2_times") {
        const json& base = require_field(j, "base", path);
        if (!base.is_string()) throw InputError(path + ".base", "expected \"A4\" or \"S4\"");
        return GroupSpec::c2_times(base.get<std::string>());
    }
    if (k == "table") {
        const json& mul = require_field(j, "mul", path);
        if (!mul.is_array()) throw InputError(path + ".mul", "expected an array of arrays");
        std::vector<std::vector<int>> rows;
        for (const json& r : mul) {
            if (!r.is_array()) throw InputError(path + ".mul", "expected an array of arrays");
            std::vector<int> row;
            for (const json& x : r) {
                if (!x.is_number_integer())
                    throw InputError(path + ".mul", "expected integer entries");
                row.push_back(x.get<int>());
            }
            rows.push_back(std::move(row));
        }
        return GroupSpec::table(std::move(rows));
    }
    throw InputError(path + ".kind",
                     "expected one of cyclic, dihedral, c2_times, unit_group_mod, table");
}

json matrix_to_json(const IntMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

IntMatrix matrix_from_json(const json& j, const std::string& path) {
    int rows = require_int(j, "rows", path);
    int cols = require_int(j, "cols", path);
    const json& data = require_field(j, "data", path);
    if (rows < 0 || cols < 0) throw InputError(path, "negative dimensions");
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw InputError(path + ".data", "expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError(path + ".data", "expected " + std::to_string(cols) + " columns");
        for (int k = 0; k < cols; ++k) {
            const json& x = row[k];
            if (x.is_number_integer())
                m.at(i, k) = Int(x.get<long long>());
            else if (x.is_string())
                try {
                    m.at(i, k) = Int(x.get<std::string>());
                } catch (const std::invalid_argument&) {
                    throw InputError(path + ".data", "entry is not a decimal integer");
                }
            else
                throw InputError(path + ".data", "entries must be integers or decimal strings");
        }
    }
    return m;
}

json cm_type_to_json(const CMType& t) {
    return {{"H", int_vector(t.space.subgroup.elems())},
            {"phi", int_vector(coset_reps(t))},
            {"rho", t.rho.elem}};
}

CMType cm_type_from_json(const json& j, const GroupPtr& group, CentralInvolution rho,
                         const std::string& path) {
    std::vector<int> h_elems = require_int_array(j, "H", path);
    for (int e : h_elems)
        if (e < 0 || e >= group->order())
            throw InputError(path + ".H", "element index out of range");
    Subgroup h = [&] {
        try {
            return Subgroup::from_elements(group, std::move(h_elems));
        } catch (const AxiomViolation& e) {
            throw InputError(path + ".H", e.what());
        }
    }();
    CosetSpace space = right_cosets(h);
    std::vector<int> phi;
    for (int e : require_int_array(j, "phi", path)) {
        if (e < 0 || e >= group->order())
            throw InputError(path + ".phi", "element index out of range");
        phi.push_back(space.coset_of[e]);
    }
    try {
        return validate_cm_type(space, std::move(phi), rho);
    } catch (const RhoInSubgroup& e) {
        throw InputError(path.empty() ? "rho" : path + ": rho", e.what());
    } catch (const NotACMType& e) {
        throw InputError(path + ".phi", e.what());
    }
}

namespace {

GroupPtr group_and_rho(const json& j, CentralInvolution& rho) {
    GroupPtr group = [&] {
        try {
            return make_group(group_spec_from_json(require_field(j, "group", "input"), "group"));
        } catch (const Error& e) {
            throw InputError("group", e.what());
        }
    }();
    int r = require_int(j, "rho", "input");
    if (r < 0 || r >= group->order()) throw InputError("rho", "element index out of range");
    rho = CentralInvolution{r};
    return group;
}

}  // namespace

PairInput pair_input_from_json(const json& j) {
    CentralInvolution rho{};
    GroupPtr group = group_and_rho(j, rho);
    auto read_factor = [&](const std::string& key) {
        const json& f = require_field(j, key, "input");
        CMType t = cm_type_from_json(f, group, rho, key);
        std::string label = key;
        if (auto it = f.find("label"); it != f.end() && it->is_string())
            label = it->get<std::string>();
        return CMFactor{std::move(t), std::move(label)};
    };
    CMFactor f1 = read_factor("factor1");
    CMFactor f2 = read_factor("factor2");
    try {
        return PairInput::make(group, rho, std::move(f1), std::move(f2));
    } catch (const Error& e) {
        throw InputError("rho", e.what());
    }
}

CMType reflex_input_from_json(const json& j) {
    CentralInvolution rho{};
    GroupPtr group = group_and_rho(j, rho);
    return cm_type_from_json(j, group, rho, "input");
}

SearchInput search_input_from_json(const json& j) {
    CentralInvolution rho{};
    GroupPtr group = group_and_rho(j, rho);
    auto read_subgroup = [&](const std::string& key) {
        std::vector<int> elems = require_int_array(j, key, "input");
        for (int e : elems)
            if (e < 0 || e >= group->order()) throw InputError(key, "element index out of range");
        try {
            return Subgroup::from_elements(group, std::move(elems));
        } catch (const AxiomViolation& e) {
            throw InputError(key, e.what());
        }
    };
    Subgroup h1 = read_subgroup("H1");
    Subgroup h2 = read_subgroup("H2");
    if (h1.contains(rho.elem) || h2.contains(rho.elem))
        throw InputError("rho", "rho lies in one of the search subgroups");
    return SearchInput(std::move(group), rho, std::move(h1), std::move(h2));
}

json reflex_report_to_json(const CMType& t, const ReflexDatum& rd, bool primitive) {
    std::vector<int> reflex_phi;
    for (int c : rd.reflex_type) reflex_phi.push_back(rd.reflex_space.representative(c));
    return {{"input", cm_type_to_json(t)},
            {"reflex_H", int_vector(rd.reflex_group.elems())},
            {"reflex_phi", int_vector(reflex_phi)},
            {"lift_inverse", int_vector(rd.lift_inverse)},
            {"primitive", primitive}};
}

std::string reflex_report_to_text(const CMType& t, const ReflexDatum& rd, bool primitive) {
    const FiniteGroup& g = *t.space.group;
    std::vector<int> reflex_phi;
    for (int c : rd.reflex_type) reflex_phi.push_back(rd.reflex_space.representative(c));
    std::ostringstream os;
    os << "group " << g.name() << " (order " << g.order() << ")\n";
    os << "H    = " << labels_of(g, t.space.subgroup.elems()) << "\n";
    os << "phi  = " << labels_of(g, coset_reps(t)) << "\n";
    os << "reflex H'   = " << labels_of(g, rd.reflex_group.elems()) << "\n";
    os << "reflex type = " << labels_of(g, reflex_phi) << "\n";
    os << "dual lift   = " << labels_of(g, rd.lift_inverse) << "\n";
    os << "primitive   = " << (primitive ? "yes" : "no") << "\n";
    return os.str();
}

json pair_analysis_to_json(const PairAnalysis& a, bool with_matrix) {
    json j = {{"dim_mt_1", a.dim_mt_1},
              {"dim_mt_2", a.dim_mt_2},
              {"dim_mt_product", a.dim_mt_product},
              {"dim_hg_1", a.dim_hg_1},
              {"dim_hg_2", a.dim_hg_2},
              {"dim_hg_product", a.dim_hg_product},
              {"status_pi1", to_string(a.status_pi1)},
              {"status_pi2", to_string(a.status_pi2)},
              {"kernel_rank", a.kernel_rank}};
    if (with_matrix) j["matrix"] = matrix_to_json(a.matrix);
    return j;
}

std::string pair_analysis_to_text(const PairAnalysis& a) {
    std::ostringstream os;
    os << "dim MT(A1)      = " << a.dim_mt_1 << "  (Hg " << a.dim_hg_1 << ")\n";
    os << "dim MT(A2)      = " << a.dim_mt_2 << "  (Hg " << a.dim_hg_2 << ")\n";
    os << "dim MT(A1 x A2) = " << a.dim_mt_product << "  (Hg " << a.dim_hg_product << ")\n";
    os << "kernel rank     = " << a.kernel_rank << "\n";
    os << "pi1: MT(A1 x A2) -> MT(A1): " << to_string(a.status_pi1) << "\n";
    os << "pi2: MT(A1 x A2) -> MT(A2): " << to_string(a.status_pi2) << "\n";
    os << "matrix (" << a.matrix.rows() << " x " << a.matrix.cols() << "):\n" << a.matrix.to_text();
    return os.str();
}

json record_to_json(const ClassificationRecord& r) {
    json j = {{"group", r.group_name},
              {"H1", int_vector(r.h1)},
              {"H2", int_vector(r.h2)},
              {"phi1", int_vector(r.phi1)},
              {"phi2", int_vector(r.phi2)},
              {"dim_mt_1", r.dim_mt_1},
              {"dim_mt_2", r.dim_mt_2},
              {"dim_mt_product", r.dim_mt_product},
              {"status_pi1", to_string(r.status_pi1)},
              {"status_pi2", to_string(r.status_pi2)},
              {"essentially_equal_after_transport", r.essentially_equal_after_transport},
              {"primitive1", r.primitive1},
              {"primitive2", r.primitive2},
              {"equal_dims", r.equal_dims},
              {"violation", r.violation}};
    if (r.conjugacy_witness)
        j["conjugacy_witness"] = *r.conjugacy_witness;
    else
        j["conjugacy_witness"] = nullptr;
    return j;
}

namespace {

std::string record_to_line(const ClassificationRecord& r) {
    std::ostringstream os;
    auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s + "]";
    };
    os << r.group_name << " H1=" << list(r.h1) << " H2=" << list(r.h2) << " phi1=" << list(r.phi1)
       << " phi2=" << list(r.phi2) << " dims=(" << r.dim_mt_1 << "," << r.dim_mt_2 << ","
       << r.dim_mt_product << ")"
       << " pi1=" << to_string(r.status_pi1) << " pi2=" << to_string(r.status_pi2)
       << " conj=" << (r.conjugacy_witness ? std::to_string(*r.conjugacy_witness) : "none")
       << " ess_eq=" << (r.essentially_equal_after_transport ? "yes" : "no")
       << (r.violation ? " VIOLATION" : "");
    return os.str();
}

}  // namespace

json campaign_report_to_json(const CampaignReport& r, bool include_timing) {
    json records = json::array();
    for (const ClassificationRecord& rec : r.records) records.push_back(record_to_json(rec));
    json j = {{"tuples_examined", r.tuples_examined},
              {"equal_dims", r.equal_dims},
              {"violations", r.violations},
              {"records", std::move(records)},
              {"settings",
               {{"groups", r.settings.groups},
                {"jobs", r.settings.jobs},
                {"include_imprimitive", r.settings.include_imprimitive},
                {"full_records", r.settings.full_records}}}};
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

std::string campaign_report_to_text(const CampaignReport& r, bool include_timing) {
    std::ostringstream os;
    os << "tuples examined = " << r.tuples_examined << "\n";
    os << "equal dims      = " << r.equal_dims << "\n";
    os << "violations      = " << r.violations << "\n";
    os << "settings: groups=";
    if (r.settings.groups.empty())
        os << "all";
    else
        for (std::size_t i = 0; i < r.settings.groups.size(); ++i)
            os << (i ? "," : "") << r.settings.groups[i];
    os << " jobs=" << r.settings.jobs
       << " include_imprimitive=" << (r.settings.include_imprimitive ? "yes" : "no")
       << " full_records=" << (r.settings.full_records ? "yes" : "no") << "\n";
    if (include_timing) os << "elapsed seconds = " << r.elapsed_seconds << "\n";
    for (const ClassificationRecord& rec : r.records) os << record_to_line(rec) << "\n";
    return os.str();
}

json search_records_to_json(const std::vector<ClassificationRecord>& records) {
    json arr = json::array();
    for (const ClassificationRecord& rec : records) arr.push_back(record_to_json(rec));
    return {{"count", records.size()}, {"records", std::move(arr)}};
}

std::string search_records_to_text(const std::vector<ClassificationRecord>& records) {
    std::ostringstream os;
    os << "matches = " << records.size() << "\n";
    for (const ClassificationRecord& rec : records) os << record_to_line(rec) << "\n";
    return os.str();
}

json family_report_to_json(const FamilyTypes& f, const PairAnalysis& a, bool primitive,
                           bool essentially_different) {
    return {{"group", f.group->name()},
            {"order", f.group->order()},
            {"rho", f.rho.elem},
            {"r", f.r},
            {"h", f.h},
            {"dual1", cm_type_to_json(f.dual1)},
            {"dual2", cm_type_to_json(f.dual2)},
            {"primal1", cm_type_to_json(f.primal1)},
            {"primal2", cm_type_to_json(f.primal2)},
            {"primitive", primitive},
            {"essentially_different", essentially_different},
            {"analysis", pair_analysis_to_json(a, false)}};
}

std::string family_report_to_text(const FamilyTypes& f, const PairAnalysis& a, bool primitive,
                                  bool essentially_different) {
    const FiniteGroup& g = *f.group;
    std::ostringstream os;
    os << "group " << g.name() << " (order " << g.order() << "), rho = " << g.label(f.rho.elem)
       << ", r = h = " << f.r << "\n";
    os << "dual1   = " << labels_of(g, coset_reps(f.dual1)) << "\n";
    os << "dual2   = " << labels_of(g, coset_reps(f.dual2)) << "\n";
    os << "primal1 = " << labels_of(g, coset_reps(f.primal1)) << "\n";
    os << "primal2 = " << labels_of(g, coset_reps(f.primal2)) << "\n";
    os << "primitive = " << (primitive ? "yes" : "no")
       << ", essentially different = " << (essentially_different ? "yes" : "no") << "\n";
    os << pair_analysis_to_text(a);
    return os.str();
}

json shioda_report_to_json(const ShiodaReport& r) {
    json checks = json::array();
    for (const ShiodaCheck& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"checks", std::move(checks)},
            {"all_pass", r.all_pass()},
            {"analysis", pair_analysis_to_json(r.analysis)}};
}

std::string shioda_report_to_text(const ShiodaReport& r) {
    std::ostringstream os;
    for (const ShiodaCheck& c : r.checks)
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    os << (r.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    os << pair_analysis_to_text(r.analysis);
    return os.str();
}

}  // namespace mtlat::io
