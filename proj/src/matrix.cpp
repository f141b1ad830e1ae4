#include "hart/matrix.hpp"

#include "hart/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hart {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix m(rows.size(), rows.empty() ? cols : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    return std::vector<Rational>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j).add_mul(a, o(k, j));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o * Rational(-1); }

Matrix Matrix::operator*(const Rational& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch in matrix-vector product");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) r[i].add_mul((*this)(i, j), v[j]);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::pow(long e) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    Matrix base = e < 0 ? inverse(*this) : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Matrix r = identity(rows_);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l) r(i * o.rows_ + k, j * o.cols_ + l) = (*this)(i, j) * o(k, l);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    return r;
}

std::vector<mpz_class> IntMatrix::operator*(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch in matrix-vector product");
    std::vector<mpz_class> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    // Bareiss elimination
    std::vector<mpz_class> a(data_);
    std::size_t n = rows_;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        prev = a[k * n + k];
    }
    mpz_class det = n ? mpz_class(a[n * n - 1] * sign) : mpz_class(1);
    return det;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}};
    Matrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = -a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j).add_mul(f, a(r, j));
        }
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix k(m.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], f) = -r.reduced(i, free[f]);
    }
    return k;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Singular("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw Singular("matrix has rank below its size");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

bool solve(const Matrix& m, const std::vector<Rational>& b, std::vector<Rational>& x) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    x.assign(m.cols(), Rational());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return false;
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return true;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(R), v = IntMatrix::identity(C);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < C; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < R; ++k) std::swap(u(i, k), u(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < R; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < C; ++k) std::swap(v(k, i), v(k, j));
    };
    // row_i -= q * row_j
    auto row_op = [&](std::size_t i, std::size_t j, const mpz_class& q) {
        for (std::size_t k = 0; k < C; ++k) a(i, k) -= q * a(j, k);
        for (std::size_t k = 0; k < R; ++k) u(i, k) -= q * u(j, k);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const mpz_class& q) {
        for (std::size_t k = 0; k < R; ++k) a(k, i) -= q * a(k, j);
        for (std::size_t k = 0; k < C; ++k) v(k, i) -= q * v(k, j);
    };

    std::size_t t = 0;
    for (; t < std::min(R, C); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block as pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
                        found = true;
                        pi = i;
                        pj = j;
                    }
            if (!found) goto done;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (a(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_op(i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (a(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_op(j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        row_op(t, i, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t k = 0; k < C; ++k) a(t, k) = -a(t, k);
            for (std::size_t k = 0; k < R; ++k) u(t, k) = -u(t, k);
        }
    }
done:
    SmithResult res;
    for (std::size_t i = 0; i < std::min(R, C); ++i) res.diagonal.push_back(a(i, i));
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

}  // namespace hart
