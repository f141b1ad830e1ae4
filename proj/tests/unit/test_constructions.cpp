#include "doctest.h"
#include "test_util.hpp"

#include "hart/classify.hpp"
#include "hart/constructions.hpp"

#include <map>

using namespace hart;
using namespace hart::testing;

namespace {

AlgebraPtr kk() {
    auto k = load_algebra(data_path("kronecker.alg"));
    return Algebra::create(tensor_product(k, k));
}

Rational trace(const Matrix& m) {
    Rational t;
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
    return t;
}

std::map<std::pair<int, int>, int> arrow_multiset(const Quiver& q) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& a : q.arrows) ++out[{a.source, a.target}];
    return out;
}

std::vector<long> kron_vec(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out;
    for (long x : a)
        for (long y : b) out.push_back(x * y);
    return out;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("Kronecker squared") {
    auto t = kk();
    CHECK(t->num_vertices() == 4);
    CHECK(t->num_arrows() == 8);
    CHECK(t->presentation().relations.size() == 4);
    CHECK(t->quiver().vertices == std::vector<std::string>{"1_1", "1_2", "2_1", "2_2"});
    CHECK(t->quiver().arrows[0].name == "a1_0_1");
    CHECK(t->quiver().arrows[4].name == "1_a1_0");
    CHECK(t->total_dim() == 16);
    CHECK(global_dimension(t, 4) == 2);
    auto round = Algebra::create(parse_algebra(print_algebra(t->presentation())));
    CHECK(round->cartan() == t->cartan());
}

TEST_CASE("tensor with a semisimple factor") {
    AlgebraPresentation k2;
    k2.name = "k2";
    k2.quiver.vertices = {"p", "q"};
    auto t = Algebra::create(tensor_product(k2, load_algebra(data_path("a2.alg"))));
    CHECK(t->num_vertices() == 4);
    CHECK(t->num_arrows() == 2);
    CHECK(t->presentation().relations.empty());
    CHECK(t->quiver().arrows[0].name == "p_a");
    CHECK(t->quiver().arrows[1].name == "q_a");
}

TEST_CASE("tensor name collision") {
    AlgebraPresentation a, b;
    a.name = "a";
    a.quiver.vertices = {"1", "1_1"};
    b.name = "b";
    b.quiver.vertices = {"1_1", "1"};
    CHECK_THROWS_AS(tensor_product(a, b), ParseError);
}

TEST_CASE("Cartan and Coxeter matrices of a tensor product") {
    std::mt19937 rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_algebra(rng, 3, 6);
        auto b = random_algebra(rng, 3, 6);
        auto t = Algebra::create(tensor_product(a->presentation(), b->presentation()));
        CHECK(t->cartan() == a->cartan().kron(b->cartan()));
        int na = global_dimension(a), nb = global_dimension(b);
        CHECK(coxeter_matrix(t->cartan(), na + nb).phi ==
              coxeter_matrix(a->cartan(), na).phi.kron(coxeter_matrix(b->cartan(), nb).phi));
    }
}

TEST_CASE("τ₂⁻ on Kronecker squared factors through τ⁻ on each side") {
    auto k = load("kronecker.alg");
    auto t = kk();
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
            auto left = tau_n_minus(projective_rep(k, u), 1).dimvec();
            auto right = tau_n_minus(projective_rep(k, v), 1).dimvec();
            auto nu = nu_inverse(projective_rep(t, 2 * u + v), 2, true);
            CHECK(nu.profile[0] == 0);
            CHECK(nu.profile[1] == 0);
            CHECK(nu.module->dimvec() == kron_vec(left, right));
        }
}

TEST_CASE("2-APR tilt of Kronecker squared") {
    auto t = kk();
    auto d = n_apr_tilt(t, 2, 0);
    auto tilted = Algebra::create(d.presentation);
    std::size_t hom_total = 0;
    for (const auto& row : d.hom_dims)
        for (auto x : row) hom_total += x;
    CHECK(tilted->total_dim() == hom_total);
    CHECK(arrow_multiset(tilted->quiver()) == std::map<std::pair<int, int>, int>{{{1, 3}, 2}, {{2, 3}, 2}, {{3, 0}, 4}});
    CHECK(tilted->presentation().relations.size() == 4);
    CHECK(global_dimension(tilted, 4) == 2);
    CHECK(classify(tilted, 2, 4).overall == Overall::NRepresentationInfiniteToDepth);
    // Derived equivalence preserves the Coxeter spectrum.
    auto phi_t = coxeter_matrix(t->cartan(), 2).phi, phi_d = coxeter_matrix(tilted->cartan(), 2).phi;
    for (long e = 1; e <= 4; ++e) CHECK(trace(phi_t.pow(e)) == trace(phi_d.pow(e)));
}

TEST_CASE("1-APR tilt of A2 reverses the arrow") {
    auto a2 = load("a2.alg");
    auto d = n_apr_tilt(a2, 1, 0);
    CHECK(d.presentation.quiver.vertices == a2->quiver().vertices);
    REQUIRE(d.presentation.quiver.num_arrows() == 1);
    CHECK(d.presentation.quiver.arrows[0].source == 1);
    CHECK(d.presentation.quiver.arrows[0].target == 0);
    CHECK(d.presentation.relations.empty());
    CHECK(d.loewy_length == 2);
}

TEST_CASE("APR preconditions") {
    auto a2 = load("a2.alg");
    CHECK_THROWS_AS(n_apr_tilt(a2, 1, 1), PreconditionFailed);
    CHECK_THROWS_AS(n_apr_tilt(a2, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(n_apr_tilt(load("beilinson2.alg"), 1, 0), PreconditionFailed);
    // A3 with n = 2: ν₂⁻¹ of the simple projective has cohomology in degree 1.
    CHECK_THROWS_AS(n_apr_tilt(load("a3.alg"), 2, 0), PreconditionFailed);
}

TEST_CASE("endomorphism algebra of the regular module") {
    for (const char* name : {"a3_rad2.alg", "beilinson2.alg", "kronecker.alg"}) {
        auto alg = load(name);
        std::vector<Representation> ps;
        for (int v = 0; v < alg->num_vertices(); ++v) ps.push_back(projective_rep(alg, v));
        auto d = endomorphism_algebra(ps, alg->quiver().vertices, "end");
        auto e = Algebra::create(d.presentation);
        CAPTURE(name);
        CHECK(e->total_dim() == alg->total_dim());
        CHECK(arrow_multiset(e->quiver()) == arrow_multiset(alg->quiver()));
        CHECK(e->presentation().relations.size() == alg->presentation().relations.size());
        CHECK(e->cartan() == alg->cartan());
    }
}

TEST_CASE("APR tilt of Beilinson") {
    auto b = load("beilinson2.alg");
    auto d = n_apr_tilt(b, 2, 0);
    auto tilted = Algebra::create(d.presentation);
    std::size_t hom_total = 0;
    for (const auto& row : d.hom_dims)
        for (auto x : row) hom_total += x;
    CHECK(tilted->total_dim() == hom_total);
    CHECK(arrow_multiset(tilted->quiver()) == std::map<std::pair<int, int>, int>{{{1, 2}, 3}, {{2, 0}, 3}});
    CHECK(classify(tilted, 2, 4).overall == Overall::NRepresentationInfiniteToDepth);
    auto phi_b = coxeter_matrix(b->cartan(), 2).phi, phi_d = coxeter_matrix(tilted->cartan(), 2).phi;
    for (long e = 1; e <= 3; ++e) CHECK(trace(phi_b.pow(e)) == trace(phi_d.pow(e)));
}

TEST_CASE("graded dimensions of the preprojective algebra") {
    auto b = load("beilinson2.alg");
    auto g = preprojective_algebra_dims(b, 2, 2);
    REQUIRE(g.degrees.size() == 3);
    CHECK(g.degrees[0] == b->cartan());
    CHECK(g.degrees[1] == Matrix{{10, 15, 21}, {6, 10, 15}, {3, 6, 10}});
    CHECK(g.degrees[2] == dimvec_predict(b, 2, 2).preprojective);
    std::size_t total = 0;
    for (const auto& row : g.new_arrows)
        for (auto x : row) total += x;
    CHECK(total == 3);
    CHECK(g.new_arrows[2][0] == 3);

    auto k = load("kronecker.alg");
    auto gk = preprojective_algebra_dims(k, 1, 3);
    CHECK(gk.degrees[3] == dimvec_predict(k, 1, 3).preprojective);
    CHECK(gk.new_arrows == std::vector<std::vector<std::size_t>>{{0, 0}, {2, 0}});
    CHECK_THROWS_AS(preprojective_algebra_dims(load("a2.alg"), 1, 2), StoppedEarly);
}

}  // TEST_SUITE
