#include "mtlattice/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mtlattice/errors.hpp"
#include "mtlattice/io.hpp"

namespace mtlat {

namespace {

struct OutputOptions {
    std::string output;  // empty = stdout
    std::string format = "text";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--output", out.output, "write the report to a file instead of stdout");
    cmd->add_option("--format", out.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

void emit(const OutputOptions& opt, const io::json& j, const std::string& text) {
    std::string payload = opt.format == "json" ? j.dump(2) + "\n" : text;
    if (opt.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.output);
    if (!f) throw InputError("output", "cannot open \"" + opt.output + "\" for writing");
    f << payload;
}

io::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("input", "cannot open \"" + path + "\"");
    try {
        return io::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("input", std::string("JSON parse error: ") + e.what());
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Mumford-Tate groups of products of CM abelian varieties via exact "
                 "character-lattice computations"};
    app.require_subcommand(1);

    std::string input_path;
    OutputOptions out;

    auto* reflex_cmd = app.add_subcommand(
        "reflex", "reflex group, reflex type and primitivity of a CM type");
    reflex_cmd->add_option("--input", input_path, "JSON file with group, rho, H, phi")->required();
    add_output_options(reflex_cmd, out);

    auto* pair_cmd =
        app.add_subcommand("pair", "analyse the Mumford-Tate group of a product of two factors");
    pair_cmd->add_option("--input", input_path, "JSON file with group, rho, factor1, factor2")
        ->required();
    add_output_options(pair_cmd, out);

    auto* classify_cmd = app.add_subcommand(
        "classify-threefolds",
        "exhaustive classification over the sextic catalog groups; exit 1 on violations");
    std::string groups_csv;
    int jobs = 1;
    bool full_records = false;
    bool include_imprimitive = false;
    classify_cmd->add_option("--groups", groups_csv,
                             "comma-separated subset of C6,D6,C2xA4,C2xS4 (default all)");
    classify_cmd->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--full-records", full_records, "keep every record, not only violations");
    classify_cmd->add_flag("--include-imprimitive", include_imprimitive,
                           "also run imprimitive CM types (non-simple factors)");
    add_output_options(classify_cmd, out);

    auto* search_cmd = app.add_subcommand(
        "search", "find CM-type pairs whose projections reach the requested status");
    std::string mode = "iso";
    bool req_primitive = false;
    bool req_essdiff = false;
    search_cmd->add_option("--input", input_path, "JSON file with group, rho, H1, H2")->required();
    search_cmd->add_option("--mode", mode, "iso | isogeny")
        ->check(CLI::IsMember({"iso", "isogeny"}))
        ->capture_default_str();
    search_cmd->add_flag("--primitive", req_primitive, "restrict to primitive CM types");
    search_cmd->add_flag("--essentially-different", req_essdiff,
                         "drop pairs that are essentially equal after transport");
    add_output_options(search_cmd, out);

    auto* family_cmd =
        app.add_subcommand("family", "the dual-type family on Z/g x Z/2 and its pair analysis");
    int family_g = 0;
    family_cmd->add_option("--g", family_g, "dimension g outside {1,2,3,4,6}")->required();
    add_output_options(family_cmd, out);

    auto* shioda_cmd = app.add_subcommand(
        "verify-shioda", "golden checks for the threefold/elliptic pair in Q(zeta_9)");
    add_output_options(shioda_cmd, out);

    std::vector<char*> argv;
    std::string prog = "mtlattice";
    argv.push_back(prog.data());
    std::vector<std::string> owned = args;
    for (std::string& a : owned) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reflex_cmd->parsed()) {
            CMType t = io::reflex_input_from_json(load_json(input_path));
            ReflexDatum rd = reflex(t);
            bool prim = is_primitive(t);
            emit(out, io::reflex_report_to_json(t, rd, prim),
                 io::reflex_report_to_text(t, rd, prim));
            return 0;
        }
        if (pair_cmd->parsed()) {
            PairInput p = io::pair_input_from_json(load_json(input_path));
            PairAnalysis a = pair_analysis(p);
            emit(out, io::pair_analysis_to_json(a), io::pair_analysis_to_text(a));
            return 0;
        }
        if (classify_cmd->parsed()) {
            CampaignOptions opt;
            opt.groups = split_csv(groups_csv);
            opt.jobs = jobs;
            opt.full_records = full_records;
            opt.include_imprimitive = include_imprimitive;
            CampaignReport report = classify_threefolds(opt);
            emit(out, io::campaign_report_to_json(report), io::campaign_report_to_text(report));
            return report.violations > 0 ? 1 : 0;
        }
        if (search_cmd->parsed()) {
            io::SearchInput in = io::search_input_from_json(load_json(input_path));
            SearchRequire require{req_primitive, req_essdiff};
            ProjectionStatus status =
                mode == "iso" ? ProjectionStatus::Iso : ProjectionStatus::Isogeny;
            std::vector<ClassificationRecord> records =
                search_pairs(in.group, in.rho, in.h1, in.h2, status, require);
            emit(out, io::search_records_to_json(records), io::search_records_to_text(records));
            return 0;
        }
        if (family_cmd->parsed()) {
            FamilyTypes f = family_types(family_g);
            PairAnalysis a = pair_analysis(
                PairInput::make(f.group, f.rho, {f.primal1, "A1"}, {f.primal2, "A2"}));
            bool prim = is_primitive(f.primal1) && is_primitive(f.primal2);
            bool essdiff = !essentially_equal(f.primal1, f.primal2).has_value();
            emit(out, io::family_report_to_json(f, a, prim, essdiff),
                 io::family_report_to_text(f, a, prim, essdiff));
            return 0;
        }
        if (shioda_cmd->parsed()) {
            ShiodaReport report = verify_shioda();
            emit(out, io::shioda_report_to_json(report), io::shioda_report_to_text(report));
            return report.all_pass() ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace mtlat
