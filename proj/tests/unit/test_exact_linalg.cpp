#include "doctest.h"

#include "hart/errors.hpp"
#include "hart/matrix.hpp"
#include "hart/rational.hpp"
#include "hart/sparse.hpp"

#include <random>

using namespace hart;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct) {
    std::uniform_int_distribution<int> val(-3, 3), pct(0, 99), den(1, 3);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pct(rng) < density_pct) m(i, j) = Rational(val(rng), den(rng));
    return m;
}

bool in_row_space(const Matrix& m, const std::vector<Rational>& v) {
    // v in rowspace(m) iff m^T x = v is consistent
    std::vector<Rational> x;
    return solve(m.transpose(), v, x);
}

}  // namespace

TEST_SUITE("exact_linalg") {

TEST_CASE("rational arithmetic is reduced and exact") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK((Rational(1, 3) * Rational(3)).is_one());
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));

    Rational big(INT64_MAX);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK(sq / big == big);
    CHECK((sq / big).is_small());
    Rational m(static_cast<long>(INT64_MIN));
    CHECK(m.sign() == -1);
    CHECK((-m - Rational(1)) == big);
    CHECK(Rational(1, 3) < Rational(1, 2));
    Rational acc(5);
    acc.add_mul(Rational(2), Rational(3));
    CHECK(acc == Rational(11));
}

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto r = rref(Matrix{{2, 4}, {1, 2}});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(r.pivots == std::vector<std::size_t>{0});

    auto z = rref(Matrix(2, 2));
    CHECK(z.reduced == Matrix(2, 2));
    CHECK(z.pivots.empty());
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(2)).cols() == 0);
    Matrix k = kernel_basis(Matrix{{1, 1}});
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(!k(0, 0).is_zero());
    CHECK(kernel_basis(Matrix(1, 3)).cols() == 3);
}

TEST_CASE("inverse examples") {
    CHECK(inverse(Matrix::identity(4)) == Matrix::identity(4));
    Matrix c{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}};
    Matrix ci{{1, -3, 3}, {0, 1, -3}, {0, 0, 1}};
    CHECK(inverse(c) == ci);
    CHECK(c * ci == Matrix::identity(3));
    CHECK_THROWS_AS(inverse(Matrix(2, 2)), Singular);
}

TEST_CASE("smith normal form examples") {
    auto s = smith_normal_form(IntMatrix::identity(3));
    for (auto& d : s.diagonal) CHECK(d == 1);
    auto s2 = smith_normal_form(IntMatrix{{2, 0}, {0, 6}});
    CHECK(s2.diagonal == std::vector<mpz_class>{2, 6});
    auto s3 = smith_normal_form(IntMatrix{{3, 0}, {0, 3}});
    CHECK(s3.diagonal == std::vector<mpz_class>{3, 3});
    CHECK(abs(IntMatrix({{3, 0}, {0, 3}}).determinant()) == 9);
}

TEST_CASE("rref preserves row space") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, 1 + t % 5, 1 + (t * 7) % 6, 60);
        RrefResult r = rref(m);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) CHECK(in_row_space(m, r.reduced.row(i)));
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(in_row_space(r.reduced, m.row(i)));
        for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
    }
}

TEST_CASE("rank plus nullity equals columns") {
    std::mt19937 rng(12);
    for (int t = 0; t < 40; ++t) {
        Matrix m = random_matrix(rng, 1 + t % 6, 1 + (t * 5) % 7, 50);
        Matrix k = kernel_basis(m);
        CHECK(rank(m) + k.cols() == m.cols());
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("inverse is two-sided") {
    std::mt19937 rng(13);
    int inverted = 0;
    for (int t = 0; t < 40; ++t) {
        Matrix m = random_matrix(rng, 4, 4, 70);
        try {
            Matrix i = inverse(m);
            CHECK(i * m == Matrix::identity(4));
            CHECK(m * i == Matrix::identity(4));
            ++inverted;
        } catch (const Singular&) {
            CHECK(rank(m) < 4);
        }
    }
    CHECK(inverted > 10);
}

TEST_CASE("smith normal form properties") {
    std::mt19937 rng(14);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + t % 3, c = 1 + (t / 3) % 3;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = val(rng);
        SmithResult s = smith_normal_form(m);
        IntMatrix d(r, c);
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) d(i, i) = s.diagonal[i];
        CHECK(s.u * m * s.v == d);
        CHECK(abs(s.u.determinant()) == 1);
        CHECK(abs(s.v.determinant()) == 1);
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            if (s.diagonal[i] == 0) CHECK(s.diagonal[i + 1] == 0);
            else CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        if (r == c) {
            mpz_class prod = 1;
            for (auto& x : s.diagonal) prod *= x;
            CHECK(abs(m.determinant()) == prod);
        }
    }
}

TEST_CASE("sparse echelon agrees with dense elimination") {
    std::mt19937 rng(15);
    for (int t = 0; t < 40; ++t) {
        Matrix m = random_matrix(rng, 2 + t % 7, 1 + (t * 3) % 8, 40);
        SparseMatrix s = SparseMatrix::from_dense(m);
        CHECK(sparse_rank(s) == rank(m));
        auto ker = sparse_kernel(s);
        CHECK(ker.size() == m.cols() - rank(m));
        for (const auto& k : ker) CHECK(s.apply(k).empty());
        CHECK(s.transpose().to_dense() == m.transpose());

        Echelon e(m.rows());
        for (std::size_t j = 0; j < m.cols(); ++j) e.insert(s.column(j));
        for (std::size_t j = 0; j < m.cols(); ++j) CHECK(e.contains(s.column(j)));
        // remainders are canonical: v and v + (span element) reduce equally
        std::vector<Rational> v(m.rows());
        for (auto& x : v) x = Rational(static_cast<int>(rng() % 5) - 2);
        SparseVec sv = sparse_from_dense(v);
        SparseVec shifted = sv;
        for (std::size_t j = 0; j < m.cols(); ++j) shifted = sparse_add(shifted, s.column(j), Rational(static_cast<int>(j) + 1));
        SparseVec a = e.reduce(sv), b = e.reduce(shifted);
        CHECK(sparse_to_dense(a, m.rows()) == sparse_to_dense(b, m.rows()));
        for (const auto& entry : a) CHECK_FALSE(e.is_pivot(entry.idx));
    }
}

TEST_CASE("sparse products match dense") {
    std::mt19937 rng(16);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(rng, 3, 4, 50), b = random_matrix(rng, 4, 2, 50);
        CHECK((SparseMatrix::from_dense(a) * SparseMatrix::from_dense(b)).to_dense() == a * b);
        CHECK((SparseMatrix::from_dense(a) + SparseMatrix::from_dense(a)).to_dense() == a * Rational(2));
    }
}

}  // TEST_SUITE
