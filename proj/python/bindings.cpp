#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtlattice/classify.hpp"
#include "mtlattice/cli.hpp"
#include "mtlattice/cmtype.hpp"
#include "mtlattice/errors.hpp"
#include "mtlattice/group.hpp"
#include "mtlattice/mtgroup.hpp"
#include "mtlattice/zlattice.hpp"

namespace py = pybind11;
using namespace mtlat;

namespace {

py::object to_py_int(const Int& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int to_mpz(const py::handle& obj) { return Int(py::str(obj).cast<std::string>()); }

py::list matrix_to_lists(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py_int(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

IntMatrix matrix_from_lists(const py::sequence& rows, std::size_t cols_hint) {
    std::size_t r = rows.size();
    if (r == 0) return IntMatrix(0, cols_hint);
    std::size_t c = py::sequence(rows[0]).size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row(rows[i]);
        if (row.size() != c) throw py::value_error("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = to_mpz(row[j]);
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_mtlattice, m) {
    m.doc() = "Exact character-lattice computations for Mumford-Tate groups of products "
              "of CM abelian varieties";

    py::register_exception<Error>(m, "MtlatError");

    py::class_<FiniteGroup, GroupPtr>(m, "FiniteGroup")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("identity", &FiniteGroup::identity)
        .def_property_readonly("name", &FiniteGroup::name)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("label", &FiniteGroup::label)
        .def("labels", &FiniteGroup::labels)
        .def("table", &FiniteGroup::table)
        .def("__repr__", [](const FiniteGroup& g) {
            return "<FiniteGroup " + g.name() + " order " + std::to_string(g.order()) + ">";
        });

    py::class_<GroupSpec>(m, "GroupSpec")
        .def_static("cyclic", &GroupSpec::cyclic, py::arg("n"))
        .def_static("dihedral", &GroupSpec::dihedral, py::arg("n"))
        .def_static("c2_times", &GroupSpec::c2_times, py::arg("base"))
        .def_static("unit_group_mod", &GroupSpec::unit_group_mod, py::arg("n"))
        .def_static("table", &GroupSpec::table, py::arg("mul"));

    m.def("make_group", &make_group, py::arg("spec"));

    py::class_<CentralInvolution>(m, "CentralInvolution")
        .def(py::init([](int elem) { return CentralInvolution{elem}; }), py::arg("elem"))
        .def_readonly("elem", &CentralInvolution::elem)
        .def("__eq__", [](CentralInvolution a, CentralInvolution b) { return a == b; })
        .def("__repr__",
             [](CentralInvolution c) { return "<rho elem=" + std::to_string(c.elem) + ">"; });

    py::class_<Subgroup>(m, "Subgroup")
        .def_static("from_elements", &Subgroup::from_elements, py::arg("parent"),
                    py::arg("elems"))
        .def_static("trivial", &Subgroup::trivial, py::arg("parent"))
        .def_static("whole", &Subgroup::whole, py::arg("parent"))
        .def_property_readonly("elems", &Subgroup::elems)
        .def_property_readonly("order", &Subgroup::order)
        .def("contains", &Subgroup::contains)
        .def("__eq__", [](const Subgroup& a, const Subgroup& b) { return a == b; });

    py::class_<CosetSpace>(m, "CosetSpace")
        .def_readonly("cosets", &CosetSpace::cosets)
        .def_readonly("coset_of", &CosetSpace::coset_of)
        .def_property_readonly("num_cosets", &CosetSpace::num_cosets)
        .def("representative", &CosetSpace::representative)
        .def_property_readonly("group", [](const CosetSpace& s) { return s.group; })
        .def_property_readonly("subgroup", [](const CosetSpace& s) { return s.subgroup; });

    m.def("central_involutions",
          [](const GroupPtr& g) { return central_involutions(*g); }, py::arg("group"));
    m.def("subgroups_of_order", &subgroups_of_order, py::arg("group"), py::arg("k"),
          py::arg("excluding") = std::nullopt);
    m.def("right_cosets", &right_cosets, py::arg("subgroup"));
    m.def("normalizer", &normalizer, py::arg("subgroup"));
    m.def("are_conjugate", &are_conjugate, py::arg("h1"), py::arg("h2"));

    py::class_<CMType>(m, "CMType")
        .def_readonly("phi", &CMType::phi)
        .def_readonly("rho", &CMType::rho)
        .def_readonly("space", &CMType::space)
        .def_property_readonly("g", &CMType::g)
        .def_property_readonly("reps", &coset_reps)
        .def("__eq__", [](const CMType& a, const CMType& b) { return a == b; });

    py::class_<ReflexDatum>(m, "ReflexDatum")
        .def_readonly("reflex_group", &ReflexDatum::reflex_group)
        .def_readonly("reflex_space", &ReflexDatum::reflex_space)
        .def_readonly("reflex_type", &ReflexDatum::reflex_type)
        .def_readonly("lift_inverse", &ReflexDatum::lift_inverse)
        .def("as_cm_type", &ReflexDatum::as_cm_type);

    m.def("validate_cm_type", &validate_cm_type, py::arg("space"), py::arg("phi"),
          py::arg("rho"));
    m.def("enumerate_cm_types", &enumerate_cm_types, py::arg("space"), py::arg("rho"));
    m.def("lift", &lift, py::arg("cm_type"));
    m.def("reflex", &reflex, py::arg("cm_type"));
    m.def("is_primitive", &is_primitive, py::arg("cm_type"));
    m.def("essentially_equal", &essentially_equal, py::arg("t1"), py::arg("t2"));
    m.def("transport", &transport, py::arg("cm_type"), py::arg("g"), py::arg("target_h"));

    py::class_<IntMatrix>(m, "IntMatrix")
        .def(py::init([](const py::sequence& rows) { return matrix_from_lists(rows, 0); }),
             py::arg("rows"))
        .def_property_readonly("rows", &IntMatrix::rows)
        .def_property_readonly("cols", &IntMatrix::cols)
        .def("to_lists", &matrix_to_lists)
        .def("to_text", &IntMatrix::to_text)
        .def("__eq__", [](const IntMatrix& a, const IntMatrix& b) { return a == b; });

    py::class_<HnfResult>(m, "HnfResult")
        .def_readonly("h", &HnfResult::h)
        .def_readonly("u", &HnfResult::u);

    py::enum_<SpanKind>(m, "SpanKind")
        .value("FULL", SpanKind::Full)
        .value("FINITE_INDEX", SpanKind::FiniteIndex)
        .value("INFINITE_INDEX", SpanKind::InfiniteIndex);

    py::class_<SpanStatus>(m, "SpanStatus")
        .def_readonly("kind", &SpanStatus::kind)
        .def_property_readonly("index", [](const SpanStatus& s) { return to_py_int(s.index); })
        .def_readonly("rank", &SpanStatus::rank);

    m.def("hnf", &hnf, py::arg("matrix"));
    m.def("lattice_rank", &lattice_rank, py::arg("matrix"));
    m.def("kernel_basis", &kernel_basis, py::arg("matrix"));
    m.def("span_status", &span_status, py::arg("generators"), py::arg("ambient_rank"));
    m.def("smith_invariants", [](const IntMatrix& mat) {
        py::list out;
        for (const Int& d : smith_invariants(mat)) out.append(to_py_int(d));
        return out;
    });
    m.def("lattice_contains", [](const IntMatrix& basis, const py::sequence& v) {
        std::vector<Int> vec;
        for (const py::handle& x : v) vec.push_back(to_mpz(x));
        return lattice_contains(basis, vec);
    });

    py::enum_<ProjectionStatus>(m, "ProjectionStatus")
        .value("ISO", ProjectionStatus::Iso)
        .value("ISOGENY", ProjectionStatus::Isogeny)
        .value("NEITHER", ProjectionStatus::Neither);

    py::class_<CMFactor>(m, "CMFactor")
        .def(py::init([](CMType t, std::string label) {
                 return CMFactor{std::move(t), std::move(label)};
             }),
             py::arg("cm_type"), py::arg("label") = "")
        .def_readonly("type", &CMFactor::type)
        .def_readonly("label", &CMFactor::label);

    py::class_<PairInput>(m, "PairInput")
        .def_static("make", &PairInput::make, py::arg("group"), py::arg("rho"),
                    py::arg("factor1"), py::arg("factor2"))
        .def_readonly("factor1", &PairInput::factor1)
        .def_readonly("factor2", &PairInput::factor2);

    py::class_<MtDimension>(m, "MtDimension")
        .def_readonly("dim_mt", &MtDimension::dim_mt)
        .def_readonly("dim_hg", &MtDimension::dim_hg);

    py::class_<PairAnalysis>(m, "PairAnalysis")
        .def_readonly("dim_mt_1", &PairAnalysis::dim_mt_1)
        .def_readonly("dim_mt_2", &PairAnalysis::dim_mt_2)
        .def_readonly("dim_mt_product", &PairAnalysis::dim_mt_product)
        .def_readonly("dim_hg_1", &PairAnalysis::dim_hg_1)
        .def_readonly("dim_hg_2", &PairAnalysis::dim_hg_2)
        .def_readonly("dim_hg_product", &PairAnalysis::dim_hg_product)
        .def_readonly("status_pi1", &PairAnalysis::status_pi1)
        .def_readonly("status_pi2", &PairAnalysis::status_pi2)
        .def_readonly("kernel_rank", &PairAnalysis::kernel_rank)
        .def_readonly("matrix", &PairAnalysis::matrix);

    m.def("reflex_norm_block", &reflex_norm_block, py::arg("cm_type"));
    m.def("pair_matrix", &pair_matrix, py::arg("pair_input"));
    m.def("mt_dimension", &mt_dimension, py::arg("cm_type"));
    m.def("pair_analysis", &pair_analysis, py::arg("pair_input"));

    py::class_<ClassificationRecord>(m, "ClassificationRecord")
        .def_readonly("group_name", &ClassificationRecord::group_name)
        .def_readonly("h1", &ClassificationRecord::h1)
        .def_readonly("h2", &ClassificationRecord::h2)
        .def_readonly("phi1", &ClassificationRecord::phi1)
        .def_readonly("phi2", &ClassificationRecord::phi2)
        .def_readonly("dim_mt_1", &ClassificationRecord::dim_mt_1)
        .def_readonly("dim_mt_2", &ClassificationRecord::dim_mt_2)
        .def_readonly("dim_mt_product", &ClassificationRecord::dim_mt_product)
        .def_readonly("status_pi1", &ClassificationRecord::status_pi1)
        .def_readonly("status_pi2", &ClassificationRecord::status_pi2)
        .def_readonly("conjugacy_witness", &ClassificationRecord::conjugacy_witness)
        .def_readonly("essentially_equal_after_transport",
                      &ClassificationRecord::essentially_equal_after_transport)
        .def_readonly("primitive1", &ClassificationRecord::primitive1)
        .def_readonly("primitive2", &ClassificationRecord::primitive2)
        .def_readonly("equal_dims", &ClassificationRecord::equal_dims)
        .def_readonly("violation", &ClassificationRecord::violation);

    py::class_<CampaignOptions>(m, "CampaignOptions")
        .def(py::init<>())
        .def_readwrite("groups", &CampaignOptions::groups)
        .def_readwrite("jobs", &CampaignOptions::jobs)
        .def_readwrite("include_imprimitive", &CampaignOptions::include_imprimitive)
        .def_readwrite("full_records", &CampaignOptions::full_records);

    py::class_<CampaignReport>(m, "CampaignReport")
        .def_readonly("tuples_examined", &CampaignReport::tuples_examined)
        .def_readonly("equal_dims", &CampaignReport::equal_dims)
        .def_readonly("violations", &CampaignReport::violations)
        .def_readonly("records", &CampaignReport::records)
        .def_readonly("elapsed_seconds", &CampaignReport::elapsed_seconds);

    m.def("classify_threefolds", &classify_threefolds,
          py::arg("options") = CampaignOptions{});

    py::class_<SearchRequire>(m, "SearchRequire")
        .def(py::init([](bool primitive, bool essentially_different) {
                 return SearchRequire{primitive, essentially_different};
             }),
             py::arg("primitive") = false, py::arg("essentially_different") = false)
        .def_readwrite("primitive", &SearchRequire::primitive)
        .def_readwrite("essentially_different", &SearchRequire::essentially_different);

    m.def("search_pairs", &search_pairs, py::arg("group"), py::arg("rho"), py::arg("h1"),
          py::arg("h2"), py::arg("mode"), py::arg("require") = SearchRequire{});

    py::class_<FamilyTypes>(m, "FamilyTypes")
        .def_readonly("group", &FamilyTypes::group)
        .def_readonly("rho", &FamilyTypes::rho)
        .def_readonly("dual1", &FamilyTypes::dual1)
        .def_readonly("dual2", &FamilyTypes::dual2)
        .def_readonly("primal1", &FamilyTypes::primal1)
        .def_readonly("primal2", &FamilyTypes::primal2)
        .def_readonly("r", &FamilyTypes::r)
        .def_readonly("h", &FamilyTypes::h);

    m.def("family_types", &family_types, py::arg("g"));

    py::class_<ShiodaCheck>(m, "ShiodaCheck")
        .def_readonly("name", &ShiodaCheck::name)
        .def_readonly("pass_", &ShiodaCheck::pass)
        .def_readonly("detail", &ShiodaCheck::detail);

    py::class_<ShiodaReport>(m, "ShiodaReport")
        .def_readonly("checks", &ShiodaReport::checks)
        .def_readonly("analysis", &ShiodaReport::analysis)
        .def("all_pass", &ShiodaReport::all_pass);

    m.def("verify_shioda", &verify_shioda);

    m.def("run_cli", &run_cli, py::arg("args"));
}
