#include "mtlattice/mtgroup.hpp"

#include <cassert>

#include "mtlattice/errors.hpp"

namespace mtlat {

std::string to_string(ProjectionStatus s) {
    switch (s) {
        case ProjectionStatus::Iso: return "ISO";
        case ProjectionStatus::Isogeny: return "ISOGENY";
        case ProjectionStatus::Neither: return "NEITHER";
    }
    return "NEITHER";
}

PairInput PairInput::make(GroupPtr group, CentralInvolution rho, CMFactor factor1,
                          CMFactor factor2) {
    for (const CMFactor* f : {&factor1, &factor2}) {
        if (f->type.space.group != group)
            throw SpaceMismatch("factor \"" + f->label + "\" does not live in the common group");
        if (!(f->type.rho == rho))
            throw SpaceMismatch("factor \"" + f->label + "\" uses a different rho");
        if (f->type.space.subgroup.contains(rho.elem))
            throw RhoInSubgroup("rho lies in the subgroup of factor \"" + f->label + "\"");
    }
    return PairInput{std::move(group), rho, std::move(factor1), std::move(factor2)};
}

IntMatrix reflex_norm_block(const CMType& t) {
    const FiniteGroup& g = *t.space.group;
    ReflexDatum rd = reflex(t);
    std::vector<char> in_dual(g.order(), 0);
    for (int x : rd.lift_inverse) in_dual[x] = 1;

    IntMatrix m(g.order(), t.space.num_cosets());
    for (int row = 0; row < g.order(); ++row)
        for (int col = 0; col < t.space.num_cosets(); ++col) {
            int rep = t.space.representative(col);
            if (in_dual[g.mul(row, g.inv(rep))]) m.at(row, col) = 1;
        }
    return m;
}

IntMatrix pair_matrix(const PairInput& p) {
    return reflex_norm_block(p.factor1.type).hstack(reflex_norm_block(p.factor2.type));
}

MtDimension mt_dimension(const CMType& t) {
    IntMatrix block = reflex_norm_block(t);
    int cols = static_cast<int>(block.cols());
    int ker = static_cast<int>(kernel_basis(block).rows());
    return MtDimension{cols - ker, cols - ker - 1};
}

namespace {

ProjectionStatus block_status(const IntMatrix& kernel, std::size_t offset, std::size_t width,
                              std::size_t ambient) {
    IntMatrix gens(kernel.rows() + width, ambient);
    for (std::size_t i = 0; i < kernel.rows(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) gens.at(i, j) = kernel.at(i, j);
    for (std::size_t i = 0; i < width; ++i) gens.at(kernel.rows() + i, offset + i) = 1;
    SpanStatus s = span_status(gens, ambient);
    switch (s.kind) {
        case SpanKind::Full: return ProjectionStatus::Iso;
        case SpanKind::FiniteIndex: return ProjectionStatus::Isogeny;
        case SpanKind::InfiniteIndex: return ProjectionStatus::Neither;
    }
    return ProjectionStatus::Neither;
}

}  // namespace

PairAnalysis pair_analysis(const PairInput& p) {
    PairAnalysis a;
    a.matrix = pair_matrix(p);
    std::size_t c1 = p.factor1.type.space.num_cosets();
    std::size_t c2 = p.factor2.type.space.num_cosets();
    IntMatrix kernel = kernel_basis(a.matrix);
    a.kernel_rank = static_cast<int>(kernel.rows());
    a.dim_mt_product = static_cast<int>(c1 + c2) - a.kernel_rank;
    a.dim_hg_product = a.dim_mt_product - 1;

    MtDimension d1 = mt_dimension(p.factor1.type);
    MtDimension d2 = mt_dimension(p.factor2.type);
    a.dim_mt_1 = d1.dim_mt;
    a.dim_hg_1 = d1.dim_hg;
    a.dim_mt_2 = d2.dim_mt;
    a.dim_hg_2 = d2.dim_hg;

    a.status_pi1 = block_status(kernel, 0, c1, c1 + c2);
    a.status_pi2 = block_status(kernel, c1, c2, c1 + c2);
    return a;
}

}  // namespace mtlat
