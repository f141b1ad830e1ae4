#pragma once

#include "hart/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hart {

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> column(std::size_t j) const;
    std::vector<Rational> row(std::size_t i) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Rational& c) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Integer power; negative exponents go through inverse().
    Matrix pow(long e) const;
    Matrix kron(const Matrix& o) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<mpz_class> operator*(const std::vector<mpz_class>& v) const;
    bool operator==(const IntMatrix& o) const;

    mpz_class determinant() const;
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns span the null space; one column per free variable.
Matrix kernel_basis(const Matrix& m);
// Throws Singular.
Matrix inverse(const Matrix& m);
// Solves m x = b; returns false if inconsistent.
bool solve(const Matrix& m, const std::vector<Rational>& b, std::vector<Rational>& x);

struct SmithResult {
    std::vector<mpz_class> diagonal;  // d_1 | d_2 | ...; zeros last
    IntMatrix u, v;                   // u * m * v = diag
};

SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace hart
