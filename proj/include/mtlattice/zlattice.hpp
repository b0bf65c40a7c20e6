#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace mtlat {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major storage.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    bool row_is_zero(std::size_t i) const;

    IntMatrix transposed() const;
    /// Horizontal concatenation; requires equal row counts.
    IntMatrix hstack(const IntMatrix& right) const;
    /// Vertical concatenation; requires equal column counts.
    IntMatrix vstack(const IntMatrix& below) const;

    /// Matrix-vector product m * v (v has cols() entries).
    std::vector<Int> apply(const std::vector<Int>& v) const;

    bool operator==(const IntMatrix& other) const = default;

    /// Column-aligned rendering, one matrix row per line.
    std::string to_text() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// u * input = h with u unimodular.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows last. Canonical for a fixed input.
HnfResult hnf(const IntMatrix& m);

/// Rank of the row span (number of nonzero HNF rows).
std::size_t lattice_rank(const IntMatrix& m);

/// Basis of the right kernel {v : m v = 0}, one vector per row, in HNF.
/// The basis spans the full kernel lattice (saturated), not a sublattice.
IntMatrix kernel_basis(const IntMatrix& m);

/// Invariant factors d1 | d2 | ... | dr (positive, nonzero only).
std::vector<Int> smith_invariants(const IntMatrix& m);

enum class SpanKind { Full, FiniteIndex, InfiniteIndex };

struct SpanStatus {
    SpanKind kind;
    Int index;         // 1 when Full, the sublattice index when finite, 0 otherwise
    std::size_t rank;  // rank of the row span
};

/// Classifies the sublattice of Z^ambient_rank spanned by the rows.
SpanStatus span_status(const IntMatrix& generators, std::size_t ambient_rank);

/// True if v lies in the lattice spanned by the rows of basis.
bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v);

}  // namespace mtlat
