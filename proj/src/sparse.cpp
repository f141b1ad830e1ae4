#include "hart/sparse.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hart {

SparseVec unit_vector(std::uint32_t idx) { return SparseVec{{idx, Rational(1)}}; }

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
    SparseVec r;
    for (std::uint32_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.push_back({i, v[i]});
    return r;
}

std::vector<Rational> sparse_to_dense(const SparseVec& v, std::size_t dim) {
    std::vector<Rational> r(dim);
    for (const auto& e : v) r[e.idx] = e.val;
    return r;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& cb) {
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].idx < a[i].idx) {
            Rational v = b[j].val * cb;
            if (!v.is_zero()) r.push_back({b[j].idx, std::move(v)});
            ++j;
        } else {
            Rational v = a[i].val;
            v.add_mul(b[j].val, cb);
            if (!v.is_zero()) r.push_back({a[i].idx, std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& c) {
    if (c.is_zero()) return {};
    SparseVec r = a;
    for (auto& e : r) e.val *= c;
    return r;
}

SparseVec sparse_shift(const SparseVec& a, std::uint32_t offset) {
    SparseVec r = a;
    for (auto& e : r) e.idx += offset;
    return r;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i] = unit_vector(static_cast<std::uint32_t>(i));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) m.columns_[j] = sparse_from_dense(d.column(j));
    return m;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    if (x.empty()) return {};
    if (x.size() == 1) return sparse_scale(columns_[x[0].idx], x[0].val);
    Accumulator acc(rows_);
    for (const auto& e : x) acc.add(columns_[e.idx], e.val);
    return acc.take();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in sparse product");
    SparseMatrix r(rows_, o.cols_);
    Accumulator acc(rows_);
    for (std::size_t j = 0; j < o.cols_; ++j) {
        for (const auto& e : o.columns_[j]) acc.add(columns_[e.idx], e.val);
        r.columns_[j] = acc.take();
    }
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in sparse sum");
    SparseMatrix r(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.columns_[j] = sparse_add(columns_[j], o.columns_[j]);
    return r;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix r(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.columns_[j] = sparse_scale(columns_[j], c);
    return r;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::uint32_t j = 0; j < cols_; ++j)
        for (const auto& e : columns_[j]) t.columns_[e.idx].push_back({j, e.val});
    return t;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& a = columns_[j];
        const auto& b = o.columns_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].idx != b[k].idx || a[k].val != b[k].val) return false;
    }
    return true;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

Matrix SparseMatrix::to_dense() const {
    Matrix d(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : columns_[j]) d(e.idx, j) = e.val;
    return d;
}

void Accumulator::resize(std::size_t dim) {
    vals_.assign(dim, Rational());
    touched_.assign(dim, 0);
    list_.clear();
}

void Accumulator::add(const SparseVec& v, const Rational& c) {
    for (const auto& e : v) {
        if (!touched_[e.idx]) {
            touched_[e.idx] = 1;
            list_.push_back(e.idx);
        }
        vals_[e.idx].add_mul(e.val, c);
    }
}

void Accumulator::add_entry(std::uint32_t idx, const Rational& c) {
    if (!touched_[idx]) {
        touched_[idx] = 1;
        list_.push_back(idx);
    }
    vals_[idx] += c;
}

SparseVec Accumulator::take() {
    std::sort(list_.begin(), list_.end());
    SparseVec r;
    r.reserve(list_.size());
    for (auto i : list_) {
        if (!vals_[i].is_zero()) r.push_back({i, std::move(vals_[i])});
        vals_[i] = Rational();
        touched_[i] = 0;
    }
    list_.clear();
    return r;
}

Echelon::Echelon(std::size_t dim, std::size_t tag_dim)
    : dim_(dim), tag_dim_(tag_dim), pivot_row_(dim, -1), acc_(dim), in_heap_(dim, 0), tag_acc_(tag_dim) {}

SparseVec Echelon::reduce_tagged(const SparseVec& v, SparseVec* combo) {
    // Entries are processed in increasing column order through a min-heap;
    // eliminating a pivot column only creates entries to its right.
    std::greater<std::uint32_t> cmp;
    for (const auto& e : v) {
        acc_[e.idx] = e.val;
        in_heap_[e.idx] = 1;
        heap_.push_back(e.idx);
    }
    std::make_heap(heap_.begin(), heap_.end(), cmp);
    SparseVec out;
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp);
        std::uint32_t c = heap_.back();
        heap_.pop_back();
        in_heap_[c] = 0;
        if (acc_[c].is_zero()) continue;
        std::int32_t r = pivot_row_[c];
        if (r < 0) {
            out.push_back({c, std::move(acc_[c])});
            acc_[c] = Rational();
            continue;
        }
        Rational f = std::move(acc_[c]);
        acc_[c] = Rational();
        const SparseVec& row = rows_[r];
        Rational nf = -f;
        for (std::size_t k = 1; k < row.size(); ++k) {
            std::uint32_t j = row[k].idx;
            acc_[j].add_mul(row[k].val, nf);
            if (!in_heap_[j]) {
                in_heap_[j] = 1;
                heap_.push_back(j);
                std::push_heap(heap_.begin(), heap_.end(), cmp);
            }
        }
        if (combo) tag_acc_.add(tags_[r], f);
    }
    if (combo) *combo = tag_acc_.take();
    return out;
}

SparseVec Echelon::reduce(const SparseVec& v) { return reduce_tagged(v, nullptr); }

bool Echelon::insert(const SparseVec& v, const SparseVec& tag, SparseVec* kernel) {
    bool tagged = tag_dim_ > 0;
    SparseVec combo;
    SparseVec rem = reduce_tagged(v, tagged ? &combo : nullptr);
    if (rem.empty()) {
        if (kernel && tagged) *kernel = sparse_add(tag, combo, Rational(-1));
        return false;
    }
    Rational inv = rem[0].val.inverse();
    if (!inv.is_one())
        for (auto& e : rem) e.val *= inv;
    pivot_row_[rem[0].idx] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(rem));
    if (tagged) tags_.push_back(sparse_scale(sparse_add(tag, combo, Rational(-1)), inv));
    return true;
}

std::vector<std::uint32_t> Echelon::free_columns() const {
    std::vector<std::uint32_t> f;
    for (std::uint32_t c = 0; c < dim_; ++c)
        if (pivot_row_[c] < 0) f.push_back(c);
    return f;
}

std::size_t sparse_rank(const SparseMatrix& m) {
    Echelon e(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    return e.rank();
}

std::vector<SparseVec> sparse_kernel(const SparseMatrix& m) {
    Echelon e(m.rows(), std::max<std::size_t>(m.cols(), 1));
    std::vector<SparseVec> ker;
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        SparseVec k;
        if (!e.insert(m.column(j), unit_vector(j), &k)) ker.push_back(std::move(k));
    }
    return ker;
}

}  // namespace hart
