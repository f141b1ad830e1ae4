#include "doctest.h"
#include "test_util.hpp"

#include "hart/classify.hpp"
#include "hart/errors.hpp"

#include <algorithm>
#include <set>

using namespace hart;
using namespace hart::testing;

namespace {

std::vector<long> column(const Matrix& m, std::size_t j) {
    std::vector<long> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        REQUIRE(m(i, j).is_integer());
        out.push_back(std::stol(m(i, j).str()));
    }
    return out;
}

long tri(long i) { return i * (i + 1) / 2; }

// Tits form q(x) = Σ x_v² - Σ_{a: s -> t} x_s x_t; its positive roots in a
// box count indecomposables of a Dynkin quiver, and a nonzero x with q(x) <= 0
// shows the quiver is not of finite type.
struct TitsCount {
    std::size_t roots = 0;
    bool finite_type = true;
};

TitsCount tits_enumeration(const Quiver& q, int box) {
    TitsCount out;
    const int nv = q.num_vertices();
    std::vector<int> x(nv, 0);
    for (;;) {
        int k = 0;
        while (k < nv && x[k] == box) x[k++] = 0;
        if (k == nv) break;
        ++x[k];
        long val = 0;
        for (int v = 0; v < nv; ++v) val += static_cast<long>(x[v]) * x[v];
        for (const auto& a : q.arrows) val -= static_cast<long>(x[a.source]) * x[a.target];
        if (val <= 0) out.finite_type = false;
        if (val == 1) ++out.roots;
    }
    return out;
}

AlgebraPtr oriented(const std::vector<std::pair<int, int>>& edges, int nv, std::mt19937& rng, const std::string& name) {
    std::vector<int> order(nv);
    for (int v = 0; v < nv; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    AlgebraPresentation p;
    p.name = name;
    for (int v = 0; v < nv; ++v) p.quiver.vertices.push_back(std::to_string(v + 1));
    int k = 0;
    for (auto [a, b] : edges) {
        auto s = order[a] < order[b] ? a : b, t = order[a] < order[b] ? b : a;
        p.quiver.arrows.push_back({"e" + std::to_string(k++), s, t});
    }
    return Algebra::create(p);
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("A2 is representation finite") {
    auto v = classify(load("a2.alg"), 1, 10);
    CHECK(v.overall == Overall::NRepresentationFinite);
    CHECK(v.trajectories[0].ell == 1);
    CHECK(v.trajectories[1].ell == 0);
    CHECK(v.injectives_distinct);
    CHECK(verdict_exit_code(v) == 0);
}

TEST_CASE("Beilinson is 2-representation infinite to depth 10") {
    auto alg = load("beilinson2.alg");
    auto v = classify(alg, 2, 10);
    CHECK(v.overall == Overall::NRepresentationInfiniteToDepth);
    CHECK(v.global_dimension == 2);
    auto cox = coxeter_matrix(alg->cartan(), 2);
    for (const auto& t : v.trajectories) {
        CHECK(t.outcome == Outcome::ModuleToDepth);
        CHECK(t.steps.size() == 11);
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto& s = t.steps[i];
            if (i + 1 < t.steps.size()) {
                REQUIRE(s.profile.size() == 3);
                CHECK(s.profile[0] == 0);
                CHECK(s.profile[1] == 0);
                CHECK(s.profile[2] == t.steps[i + 1].module.total_dim());
            }
            CHECK(s.module.dimvec() == column(cox.phi.pow(-static_cast<long>(i)) * alg->cartan(), t.vertex));
            long k = 3 * static_cast<long>(i) + t.vertex + 1;
            CHECK(s.module.dimvec() == std::vector<long>{tri(k), tri(k - 1), tri(k - 2)});
        }
    }
}

TEST_CASE("gl.dim above n") {
    auto v = classify(load("beilinson2.alg"), 1, 3);
    CHECK(v.overall == Overall::GlobalDimensionExceedsN);
    CHECK(verdict_exit_code(v) == 3);
}

TEST_CASE("A3 trajectories cover the six indecomposables") {
    auto alg = load("a3.alg");
    auto v = classify(alg, 1, 10);
    CHECK(v.overall == Overall::NRepresentationFinite);
    CHECK(v.injectives_distinct);
    std::set<std::vector<long>> seen;
    std::size_t steps = 0;
    for (const auto& t : v.trajectories) {
        steps += t.ell + 1;
        for (const auto& s : t.steps) seen.insert(s.module.dimvec());
    }
    auto oracle = tits_enumeration(alg->quiver(), 3);
    CHECK(oracle.finite_type);
    CHECK(oracle.roots == 6);
    CHECK(seen.size() == 6);
    CHECK(steps == 6);
}

TEST_CASE("A3 modulo the square of the radical is 2-representation finite") {
    auto v = classify(load("a3_rad2.alg"), 2, 10);
    CHECK(v.overall == Overall::NRepresentationFinite);
    CHECK(v.injectives_distinct);
}

TEST_CASE("hereditary quivers: finite type exactly for Dynkin graphs") {
    std::mt19937 rng(2024);
    const std::vector<std::pair<std::string, std::pair<int, std::vector<std::pair<int, int>>>>> graphs = {
        {"A2", {2, {{0, 1}}}},
        {"A3", {3, {{0, 1}, {1, 2}}}},
        {"A4", {4, {{0, 1}, {1, 2}, {2, 3}}}},
        {"D4", {4, {{0, 1}, {0, 2}, {0, 3}}}},
        {"A1~", {2, {{0, 1}, {0, 1}}}},
        {"A2~", {3, {{0, 1}, {1, 2}, {2, 0}}}},
        {"A3~", {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}},
    };
    for (const auto& [name, g] : graphs)
        for (int rep = 0; rep < 3; ++rep) {
            auto alg = oriented(g.second, g.first, rng, name);
            auto oracle = tits_enumeration(alg->quiver(), 4);
            auto v = classify(alg, 1, 12);
            CAPTURE(name);
            if (oracle.finite_type) {
                CHECK(v.overall == Overall::NRepresentationFinite);
                std::size_t steps = 0;
                for (const auto& t : v.trajectories) steps += t.ell + 1;
                CHECK(steps == oracle.roots);
            } else {
                CHECK(v.overall == Overall::NRepresentationInfiniteToDepth);
            }
        }
}

TEST_CASE("verdicts agree for an algebra and its opposite") {
    for (auto [name, n] : std::vector<std::pair<std::string, int>>{
             {"a2.alg", 1}, {"a3.alg", 1}, {"a3_rad2.alg", 2}, {"kronecker.alg", 1}, {"beilinson2.alg", 2}}) {
        auto alg = load(name);
        CHECK(classify(alg, n, 6).overall == classify(alg->opposite(), n, 6).overall);
    }
}

TEST_CASE("not n-hereditary") {
    // The path algebra of A3 has global dimension 1, so with n = 2 some
    // ν_2⁻¹(P) has cohomology in degree 1.
    auto v = classify(load("a3.alg"), 2, 6);
    CHECK(v.overall == Overall::NotNHereditary);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->dim > 0);
    CHECK(verdict_exit_code(v) == 2);
}

TEST_CASE("concurrent trajectories match serial ones") {
    auto alg = load("beilinson2.alg");
    auto serial = classify(alg, 2, 4, 1);
    auto parallel = classify(alg, 2, 4, 3);
    CHECK(verdict_json(serial) == verdict_json(parallel));
}

TEST_CASE("preprojective and preinjective families") {
    auto k = load("kronecker.alg");
    auto pp = preprojectives(k, 1, 3);
    std::vector<std::vector<long>> dims;
    for (const auto& m : pp) dims.push_back(m.module.dimvec());
    CHECK(dims == std::vector<std::vector<long>>{{1, 0}, {3, 2}, {5, 4}, {7, 6}, {2, 1}, {4, 3}, {6, 5}, {8, 7}});
    auto pi = preinjectives(k, 1, 2);
    dims.clear();
    for (const auto& m : pi) {
        CHECK(m.module.algebra().get() == k.get());
        dims.push_back(m.module.dimvec());
    }
    CHECK(dims == std::vector<std::vector<long>>{{1, 2}, {3, 4}, {5, 6}, {0, 1}, {2, 3}, {4, 5}});

    auto b = load("beilinson2.alg");
    auto bi = preinjectives(b, 2, 2);
    for (const auto& m : bi) {
        long k3 = 3 * m.step + (2 - m.vertex) + 1;
        CHECK(m.module.dimvec() == std::vector<long>{tri(k3 - 2), tri(k3 - 1), tri(k3)});
    }
    auto zero = preprojectives(b, 2, 0);
    CHECK(zero.size() == 3);
    CHECK_THROWS_AS(preprojectives(load("a2.alg"), 1, 3), StoppedEarly);
    CHECK(preprojectives(load("a2.alg"), 1, 3, true).size() == 3);
}

TEST_CASE("dimension vector prediction") {
    auto b = load("beilinson2.alg");
    CHECK(dimvec_predict(b, 2, 0).preprojective == b->cartan());
    CHECK(column(dimvec_predict(b, 2, 1).preprojective, 0) == std::vector<long>{10, 6, 3});
    auto k = load("kronecker.alg");
    CHECK(column(dimvec_predict(k, 1, 2).preprojective, 0) == std::vector<long>{5, 4});
    CHECK(column(dimvec_predict(k, 1, 1).preinjective, 1) == std::vector<long>{2, 3});
}

TEST_CASE("Ext-orthogonality of Beilinson preprojectives") {
    auto b = load("beilinson2.alg");
    auto fam = preprojectives(b, 2, 3);
    std::vector<Representation> mods;
    for (const auto& m : fam) mods.push_back(m.module);
    auto r = ext_orthogonality_report(mods, 2);
    CHECK(r.all_orthogonal);
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
            if (fam[j].step < fam[i].step) CHECK(r.hom[i][j] == 0);
    auto p = projective_rep(b, 1);
    CHECK(ext_orthogonality_report({p}, 2).ext[0][0] == std::vector<std::size_t>{0});
}

TEST_CASE("verdict json") {
    auto v = classify(load("a2.alg"), 1, 4);
    auto text = verdict_json(v);
    CHECK(text.find("\"overall\": \"NRepresentationFinite\"") != std::string::npos);
    CHECK(text.find("\"dim_vectors\"") != std::string::npos);
}

}  // TEST_SUITE
