#pragma once

#include "hart/matrix.hpp"
#include "hart/rational.hpp"

#include <cstdint>
#include <vector>

namespace hart {

struct SparseEntry {
    std::uint32_t idx;
    Rational val;
};

// Sorted by idx, no stored zeros.
using SparseVec = std::vector<SparseEntry>;

SparseVec unit_vector(std::uint32_t idx);
SparseVec sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> sparse_to_dense(const SparseVec& v, std::size_t dim);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& cb = Rational(1));
SparseVec sparse_scale(const SparseVec& a, const Rational& c);
SparseVec sparse_shift(const SparseVec& a, std::uint32_t offset);

// Column-stored sparse matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const Matrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVec& column(std::size_t j) const { return columns_[j]; }
    SparseVec& column(std::size_t j) { return columns_[j]; }
    void set_column(std::size_t j, SparseVec v) { columns_[j] = std::move(v); }

    SparseVec apply(const SparseVec& x) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& c) const;
    SparseMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const;
    std::size_t nnz() const;

    Matrix to_dense() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec> columns_;
};

// Dense accumulator for sparse linear combinations.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim = 0) { resize(dim); }
    void resize(std::size_t dim);
    void add(const SparseVec& v, const Rational& c);
    void add_entry(std::uint32_t idx, const Rational& c);
    // Returns the sorted result and clears the accumulator.
    SparseVec take();

private:
    std::vector<Rational> vals_;
    std::vector<char> touched_;
    std::vector<std::uint32_t> list_;
};

// Row echelon basis of a subspace of K^dim with leading-entry pivots
// normalized to 1. Rows are not mutually reduced; reduce() still returns the
// canonical remainder because it eliminates pivot columns in increasing order.
// Optionally carries a tag vector per row (the combination of inserted
// vectors that produced it), which yields kernels and preimages.
class Echelon {
public:
    explicit Echelon(std::size_t dim = 0, std::size_t tag_dim = 0);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

    // Inserts v. Returns true if it enlarged the span. If tags are enabled and
    // v was dependent, *kernel receives tag(v) minus the combination of row
    // tags that cancels v.
    bool insert(const SparseVec& v, const SparseVec& tag = {}, SparseVec* kernel = nullptr);

    // Remainder of v modulo the span; supported on non-pivot columns only.
    SparseVec reduce(const SparseVec& v);
    // Like reduce, also returning in *combo the tag combination subtracted.
    SparseVec reduce_tagged(const SparseVec& v, SparseVec* combo);

    bool contains(const SparseVec& v) { return reduce(v).empty(); }

    // Non-pivot columns in increasing order (a basis of the quotient).
    std::vector<std::uint32_t> free_columns() const;

private:
    std::size_t dim_, tag_dim_;
    std::vector<SparseVec> rows_;
    std::vector<SparseVec> tags_;
    std::vector<std::int32_t> pivot_row_;

    std::vector<Rational> acc_;
    std::vector<char> in_heap_;
    std::vector<std::uint32_t> heap_;
    Accumulator tag_acc_;
};

std::size_t sparse_rank(const SparseMatrix& m);
// Basis of ker m, one vector per dependent column, each with a 1 in that column.
std::vector<SparseVec> sparse_kernel(const SparseMatrix& m);

}  // namespace hart
