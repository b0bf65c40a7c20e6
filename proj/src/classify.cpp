#include "mtlattice/classify.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <thread>

#include "mtlattice/errors.hpp"

namespace mtlat {

namespace {

struct CatalogEntry {
    const char* name;
    GroupSpec spec;
};

const std::vector<CatalogEntry>& sextic_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {"C6", GroupSpec::cyclic(6)},
        {"D6", GroupSpec::dihedral(6)},
        {"C2xA4", GroupSpec::c2_times("A4")},
        {"C2xS4", GroupSpec::c2_times("S4")},
    };
    return catalog;
}

// Runs fn(i) for i in [0, count) over the requested number of workers.
// Results must be written to preallocated slots so the outcome does not
// depend on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

ClassificationRecord analyse_tuple(const std::string& group_name, const GroupPtr& group,
                                   CentralInvolution rho, const Subgroup& h1, const Subgroup& h2,
                                   const CMType& t1, const CMType& t2, bool primitive1,
                                   bool primitive2) {
    ClassificationRecord rec;
    rec.group_name = group_name;
    rec.h1 = h1.elems();
    rec.h2 = h2.elems();
    rec.phi1 = coset_reps(t1);
    rec.phi2 = coset_reps(t2);
    rec.primitive1 = primitive1;
    rec.primitive2 = primitive2;

    PairAnalysis a = pair_analysis(PairInput::make(group, rho, {t1, "A1"}, {t2, "A2"}));
    rec.dim_mt_1 = a.dim_mt_1;
    rec.dim_mt_2 = a.dim_mt_2;
    rec.dim_mt_product = a.dim_mt_product;
    rec.status_pi1 = a.status_pi1;
    rec.status_pi2 = a.status_pi2;
    rec.equal_dims = a.dim_mt_product == a.dim_mt_1 && a.dim_mt_1 == a.dim_mt_2;

    rec.conjugacy_witness = are_conjugate(h1, h2);
    if (rec.conjugacy_witness) {
        CMType moved = transport(t1, *rec.conjugacy_witness, h2);
        rec.essentially_equal_after_transport = essentially_equal(moved, t2).has_value();
    }
    rec.violation = rec.equal_dims &&
                    !(rec.conjugacy_witness && rec.essentially_equal_after_transport);
    return rec;
}

CentralInvolution unique_central_involution(const FiniteGroup& g) {
    std::vector<CentralInvolution> invs = central_involutions(g);
    assert(invs.size() == 1);
    return invs.front();
}

}  // namespace

std::vector<int> coset_reps(const CMType& t) {
    std::vector<int> reps;
    reps.reserve(t.phi.size());
    for (int c : t.phi) reps.push_back(t.space.representative(c));
    return reps;
}

CampaignReport classify_threefolds(const CampaignOptions& options) {
    auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.settings = options;

    std::vector<CatalogEntry> selected;
    if (options.groups.empty()) {
        selected = sextic_catalog();
    } else {
        for (const std::string& name : options.groups) {
            auto it = std::find_if(sextic_catalog().begin(), sextic_catalog().end(),
                                   [&](const CatalogEntry& e) { return name == e.name; });
            if (it == sextic_catalog().end())
                throw InputError("groups", "unknown catalog group \"" + name +
                                               "\" (expected C6, D6, C2xA4, C2xS4)");
            selected.push_back(*it);
        }
    }

    for (const CatalogEntry& entry : selected) {
        GroupPtr group = make_group(entry.spec);
        CentralInvolution rho = unique_central_involution(*group);
        std::vector<Subgroup> subgroups = subgroups_of_order(group, group->order() / 6, rho);

        struct TypeSet {
            std::vector<CMType> types;
            std::vector<char> primitive;
        };
        std::vector<TypeSet> per_subgroup;
        for (const Subgroup& h : subgroups) {
            TypeSet ts;
            for (CMType& t : enumerate_cm_types(right_cosets(h), rho)) {
                bool prim = is_primitive(t);
                if (!prim && !options.include_imprimitive) continue;
                ts.types.push_back(std::move(t));
                ts.primitive.push_back(prim);
            }
            per_subgroup.push_back(std::move(ts));
        }

        struct Tuple {
            std::size_t i1, i2, a, b;
        };
        std::vector<Tuple> tuples;
        for (std::size_t i1 = 0; i1 < subgroups.size(); ++i1)
            for (std::size_t i2 = 0; i2 < subgroups.size(); ++i2)
                for (std::size_t a = 0; a < per_subgroup[i1].types.size(); ++a)
                    for (std::size_t b = 0; b < per_subgroup[i2].types.size(); ++b)
                        tuples.push_back({i1, i2, a, b});

        std::vector<ClassificationRecord> records(tuples.size());
        parallel_for(tuples.size(), options.jobs, [&](std::size_t i) {
            const Tuple& t = tuples[i];
            records[i] = analyse_tuple(entry.name, group, rho, subgroups[t.i1], subgroups[t.i2],
                                       per_subgroup[t.i1].types[t.a], per_subgroup[t.i2].types[t.b],
                                       per_subgroup[t.i1].primitive[t.a],
                                       per_subgroup[t.i2].primitive[t.b]);
        });

        report.tuples_examined += static_cast<long>(records.size());
        for (ClassificationRecord& rec : records) {
            if (rec.equal_dims) ++report.equal_dims;
            if (rec.violation) ++report.violations;
            if (rec.violation || options.full_records) report.records.push_back(std::move(rec));
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<ClassificationRecord> search_pairs(const GroupPtr& group, CentralInvolution rho,
                                               const Subgroup& h1, const Subgroup& h2,
                                               ProjectionStatus mode, SearchRequire require) {
    if (h1.contains(rho.elem) || h2.contains(rho.elem))
        throw RhoInSubgroup("rho lies in one of the search subgroups");
    assert(mode != ProjectionStatus::Neither);

    std::vector<CMType> types1 = enumerate_cm_types(right_cosets(h1), rho);
    std::vector<CMType> types2 = enumerate_cm_types(right_cosets(h2), rho);
    std::optional<int> witness = are_conjugate(h1, h2);

    auto reaches = [&](ProjectionStatus s) {
        return s == ProjectionStatus::Iso ||
               (mode == ProjectionStatus::Isogeny && s == ProjectionStatus::Isogeny);
    };

    std::vector<ClassificationRecord> out;
    for (const CMType& t1 : types1) {
        bool prim1 = is_primitive(t1);
        if (require.primitive && !prim1) continue;
        for (const CMType& t2 : types2) {
            bool prim2 = is_primitive(t2);
            if (require.primitive && !prim2) continue;
            if (require.essentially_different && witness) {
                CMType moved = transport(t1, *witness, h2);
                if (essentially_equal(moved, t2)) continue;
            }
            ClassificationRecord rec =
                analyse_tuple(group->name(), group, rho, h1, h2, t1, t2, prim1, prim2);
            if (reaches(rec.status_pi1) && reaches(rec.status_pi2)) out.push_back(std::move(rec));
        }
    }
    return out;
}

FamilyTypes family_types(int g) {
    if (g < 1 || g == 1 || g == 2 || g == 3 || g == 4 || g == 6)
        throw UnsupportedG("family_types requires g outside {1, 2, 3, 4, 6}");
    if (2 * g > FiniteGroup::kMaxOrder)
        throw OrderTooLarge("family group order " + std::to_string(2 * g) + " exceeds 96");

    int r = 0;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (g % p != 0) {
            r = p;
            break;
        }
    }
    assert(r > 0);
    int h = r;

    // Z/g x Z/2 with the Z/2 part major: index i is psi^i, index g+i is
    // iota*psi^i, so rho = iota sits at index g.
    int order = 2 * g;
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int a = 0; a < order; ++a) {
        labels[a] = (a < g ? "s" : "sb") + std::to_string(a % g);
        for (int b = 0; b < order; ++b)
            mul[a][b] = ((a / g + b / g) % 2) * g + (a % g + b % g) % g;
    }
    GroupPtr group =
        FiniteGroup::from_table(std::move(mul), std::move(labels), "C" + std::to_string(g) + "xC2");
    CentralInvolution rho{g};

    CosetSpace space = right_cosets(Subgroup::trivial(group));
    auto build_dual = [&](int step) {
        std::vector<int> phi;
        for (int i = 0; i < r; ++i) phi.push_back(g + (step * i) % g);  // conjugate embeddings
        for (int i = r; i < g; ++i) phi.push_back((step * i) % g);
        return validate_cm_type(space, std::move(phi), rho);
    };

    FamilyTypes out;
    out.group = group;
    out.rho = rho;
    out.r = r;
    out.h = h;
    out.dual1 = build_dual(1);
    out.dual2 = build_dual(h);
    for (auto [dual, primal] : {std::pair{&out.dual1, &out.primal1}, {&out.dual2, &out.primal2}}) {
        ReflexDatum rd = reflex(*dual);
        if (rd.reflex_group.order() != 1)
            throw Error("family reflex field is smaller than expected");
        *primal = rd.as_cm_type();
    }
    return out;
}

bool ShiodaReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ShiodaCheck& c) { return c.pass; });
}

ShiodaReport verify_shioda() {
    ShiodaReport report;
    GroupPtr group = make_group(GroupSpec::unit_group_mod(9));
    CentralInvolution rho = unique_central_involution(*group);  // s8

    // Residues 1,2,4,5,7,8 sit at indices 0..5.
    auto index_of_residue = [&](int res) {
        static const int table[] = {1, 2, 4, 5, 7, 8};
        for (int i = 0; i < 6; ++i)
            if (table[i] == res) return i;
        return -1;
    };

    Subgroup h_x = Subgroup::trivial(group);
    CosetSpace space_x = right_cosets(h_x);
    CMType phi_x = validate_cm_type(
        space_x, {index_of_residue(1), index_of_residue(2), index_of_residue(4)}, rho);

    Subgroup h_e = Subgroup::from_elements(
        group, {index_of_residue(1), index_of_residue(4), index_of_residue(7)});
    CosetSpace space_e = right_cosets(h_e);
    CMType phi_e = validate_cm_type(space_e, {space_e.coset_of[index_of_residue(1)]}, rho);

    PairInput input = PairInput::make(group, rho, {phi_x, "X"}, {phi_e, "E"});
    report.analysis = pair_analysis(input);

    // (a) reflex type of the threefold is {s1, s5, s7}
    {
        ReflexDatum rd = reflex(phi_x);
        std::vector<int> got;
        for (int c : rd.reflex_type) got.push_back(rd.reflex_space.representative(c));
        std::vector<int> expected = {index_of_residue(1), index_of_residue(5),
                                     index_of_residue(7)};
        bool pass = rd.reflex_group.order() == 1 && got == expected;
        std::string detail = "reflex type {";
        for (std::size_t i = 0; i < got.size(); ++i)
            detail += (i ? "," : "") + group->label(got[i]);
        detail += "}, expected {s1,s5,s7}";
        report.checks.push_back({"reflex_type", pass, detail});
    }

    // (b) the concatenated matrix equals the expected 6x8 matrix
    const std::vector<std::vector<Int>> expected_rows = {
        {1, 1, 1, 0, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 1, 0},
        {1, 1, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 1, 0, 1},
    };
    IntMatrix expected = IntMatrix::from_rows(expected_rows);
    report.checks.push_back({"pair_matrix", report.analysis.matrix == expected,
                             "6x8 concatenated block matrix, entry for entry"});

    // (c) the two explicit vectors lie in the kernel
    const std::vector<std::vector<Int>> kernel_vectors = {
        {0, 0, 1, 0, 1, -1, -1, 0},
        {0, 0, 0, 1, -1, 1, 0, -1},
    };
    {
        bool pass = true;
        for (const auto& v : kernel_vectors)
            for (const Int& x : report.analysis.matrix.apply(v))
                if (x != 0) pass = false;
        report.checks.push_back({"kernel_vectors", pass, "matrix * v = 0 for both vectors"});
    }

    // (d) the two vectors together with Z^6 x {0} span Z^8
    {
        IntMatrix gens(8, 8);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 8; ++j) gens.at(i, j) = kernel_vectors[i][j];
        for (std::size_t i = 0; i < 6; ++i) gens.at(2 + i, i) = 1;
        bool pass = span_status(gens, 8).kind == SpanKind::Full;
        report.checks.push_back({"span_with_block1", pass,
                                 "kernel vectors + first factor block span the full lattice"});
    }

    // (e) the first projection is an isomorphism
    report.checks.push_back({"pi1_iso", report.analysis.status_pi1 == ProjectionStatus::Iso,
                             "status " + to_string(report.analysis.status_pi1) +
                                 ", dim MT(product) = " +
                                 std::to_string(report.analysis.dim_mt_product)});
    return report;
}

}  // namespace mtlat
