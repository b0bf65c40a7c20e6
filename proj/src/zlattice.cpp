#include "mtlattice/zlattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "mtlattice/errors.hpp"

namespace mtlat {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

bool IntMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
    assert(rows_ == right.rows());
    IntMatrix m(rows_, cols_ + right.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    assert(cols_ == below.cols() || rows_ == 0 || below.rows() == 0);
    std::size_t c = rows_ > 0 ? cols_ : below.cols();
    IntMatrix m(rows_ + below.rows(), c);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows(); ++i)
        for (std::size_t j = 0; j < below.cols(); ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    assert(v.size() == cols_);
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::string IntMatrix::to_text() const {
    std::vector<std::size_t> width(cols_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            width[j] = std::max(width[j], at(i, j).get_str().size());
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            std::string s = at(i, j).get_str();
            os << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// row_r -= q * row_p
void submul_row(IntMatrix& m, std::size_t r, std::size_t p, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) -= q * m.at(p, j);
}

// Replaces rows (p, r) by (s*p + t*r, a/g*r - b/g*p); the 2x2 transform has
// determinant +1 when s*a + t*b = g = gcd(a, b).
void gcd_combine(IntMatrix& h, IntMatrix& u, std::size_t p, std::size_t r, const Int& a,
                 const Int& b) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    for (IntMatrix* m : {&h, &u}) {
        for (std::size_t j = 0; j < m->cols(); ++j) {
            Int mp = m->at(p, j), mr = m->at(r, j);
            m->at(p, j) = s * mp + t * mr;
            m->at(r, j) = ag * mr - bg * mp;
        }
    }
}

std::size_t pivot_col(const IntMatrix& h, std::size_t row) {
    for (std::size_t j = 0; j < h.cols(); ++j)
        if (h.at(row, j) != 0) return j;
    return h.cols();
}

bool is_diagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t nz = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r)
            if (h.at(r, col) != 0) {
                nz = r;
                break;
            }
        if (nz == m.rows()) continue;
        swap_rows(h, pivot_row, nz);
        swap_rows(u, pivot_row, nz);
        for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
            if (h.at(r, col) == 0) continue;
            gcd_combine(h, u, pivot_row, r, h.at(pivot_row, col), h.at(r, col));
        }
        if (h.at(pivot_row, col) < 0) {
            negate_row(h, pivot_row);
            negate_row(u, pivot_row);
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(r, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
            if (q != 0) {
                submul_row(h, r, pivot_row, q);
                submul_row(u, r, pivot_row, q);
            }
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

std::size_t lattice_rank(const IntMatrix& m) {
    IntMatrix h = hnf(m).h;
    std::size_t r = 0;
    while (r < h.rows() && !h.row_is_zero(r)) ++r;
    return r;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    HnfResult t = hnf(m.transposed());
    std::vector<std::vector<Int>> ker;
    for (std::size_t i = 0; i < t.h.rows(); ++i)
        if (t.h.row_is_zero(i)) ker.push_back(t.u.row(i));
    if (ker.empty()) return IntMatrix(0, m.cols());
    // Rows of a unimodular matrix are independent, so the HNF below only
    // canonicalizes the basis; it cannot introduce zero rows.
    return hnf(IntMatrix::from_rows(ker)).h;
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < n; ++k) {
        // Move some nonzero entry of the trailing submatrix to (k, k), then
        // alternate row/column eliminations until both are clear. |a(k,k)|
        // strictly decreases whenever a pass changes anything, so this stops.
        std::size_t pi = a.rows(), pj = 0;
        for (std::size_t i = k; i < a.rows() && pi == a.rows(); ++i)
            for (std::size_t j = k; j < a.cols(); ++j)
                if (a.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == a.rows()) break;
        swap_rows(a, k, pi);
        IntMatrix at_ = a.transposed();
        swap_rows(at_, k, pj);
        a = at_.transposed();
        while (true) {
            IntMatrix dummy_u = IntMatrix::identity(a.rows());
            for (std::size_t i = k + 1; i < a.rows(); ++i)
                if (a.at(i, k) != 0) gcd_combine(a, dummy_u, k, i, a.at(k, k), a.at(i, k));
            IntMatrix t = a.transposed();
            IntMatrix dummy_v = IntMatrix::identity(t.rows());
            bool row_dirty = false;
            for (std::size_t j = k + 1; j < t.rows(); ++j)
                if (t.at(j, k) != 0) {
                    gcd_combine(t, dummy_v, k, j, t.at(k, k), t.at(j, k));
                    row_dirty = true;
                }
            a = t.transposed();
            if (!row_dirty) break;
        }
    }
    assert(is_diagonal(a));
    std::vector<Int> d;
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i) != 0) d.push_back(abs(a.at(i, i)));
    // Repair the divisibility chain d1 | d2 | ... with gcd/lcm exchanges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (d[j] % d[i] != 0) {
                    Int g = gcd(d[i], d[j]);
                    Int l = d[i] / g * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
    }
    std::sort(d.begin(), d.end());
    return d;
}

SpanStatus span_status(const IntMatrix& generators, std::size_t ambient_rank) {
    assert(generators.cols() == ambient_rank || generators.rows() == 0);
    IntMatrix h = hnf(generators).h;
    std::size_t r = 0;
    while (r < h.rows() && !h.row_is_zero(r)) ++r;
    if (r < ambient_rank) return {SpanKind::InfiniteIndex, 0, r};
    // r == ambient_rank forces one pivot per column, so h is upper
    // triangular and the sublattice index is the diagonal product.
    Int index = 1;
    for (std::size_t i = 0; i < ambient_rank; ++i) index *= h.at(i, i);
    if (index == 1) return {SpanKind::Full, 1, r};
    return {SpanKind::FiniteIndex, index, r};
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v) {
    if (basis.rows() == 0) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }
    assert(v.size() == basis.cols());
    IntMatrix h = hnf(basis).h;
    std::vector<Int> w = v;
    for (std::size_t i = 0; i < h.rows() && !h.row_is_zero(i); ++i) {
        std::size_t c = pivot_col(h, i);
        if (!mpz_divisible_p(w[c].get_mpz_t(), h.at(i, c).get_mpz_t())) return false;
        Int q = w[c] / h.at(i, c);
        if (q != 0)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * h.at(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace mtlat
