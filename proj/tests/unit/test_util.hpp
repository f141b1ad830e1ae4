#pragma once

#include "hart/algebra.hpp"
#include "hart/errors.hpp"
#include "hart/homological.hpp"
#include "hart/quiver.hpp"

#include <random>
#include <string>

namespace hart::testing {

inline std::string data_path(const std::string& name) { return std::string(HART_DATA_DIR) + "/" + name; }

inline AlgebraPtr load(const std::string& name) { return Algebra::create(load_algebra(data_path(name))); }

inline Matrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) { return Matrix(rows); }

// Quotient of a sum of one or two indecomposable projectives or injectives by
// a few random elements; relations hold by construction.
inline Representation random_module(const AlgebraPtr& alg, std::mt19937& rng) {
    const int nv = alg->num_vertices();
    std::uniform_int_distribution<int> vert(0, nv - 1), coin(0, 1), val(-2, 2), count(0, 2);
    std::vector<Representation> parts;
    int k = 1 + coin(rng);
    for (int i = 0; i < k; ++i) parts.push_back(coin(rng) ? projective_rep(alg, vert(rng)) : injective_rep(alg, vert(rng)));
    Representation x = direct_sum(parts);
    std::vector<std::pair<int, SparseVec>> gens;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
        int v = vert(rng);
        if (x.dim(v) == 0) continue;
        std::vector<Rational> d(x.dim(v));
        for (auto& e : d) e = Rational(val(rng));
        gens.push_back({v, sparse_from_dense(d)});
    }
    return quotient_module(x, gens);
}

// Random acyclic quiver on vertices 1..nv with arrows i -> j for i < j and
// occasionally a zero or commutativity relation; retried until admissible
// with total dimension at most max_dim.
inline AlgebraPtr random_algebra(std::mt19937& rng, int max_vertices, std::size_t max_dim) {
    std::uniform_int_distribution<int> pct(0, 99);
    for (;;) {
        int nv = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices - 1));
        AlgebraPresentation p;
        p.name = "random";
        for (int v = 0; v < nv; ++v) p.quiver.vertices.push_back(std::to_string(v + 1));
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) {
                int mult = pct(rng) < 45 ? 1 : (pct(rng) < 15 ? 2 : 0);
                for (int m = 0; m < mult; ++m)
                    p.quiver.arrows.push_back({"x" + std::to_string(p.quiver.arrows.size()), i, j});
            }
        const auto& arrows = p.quiver.arrows;
        for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
            for (int b = 0; b < static_cast<int>(arrows.size()); ++b)
                if (arrows[a].target == arrows[b].source && pct(rng) < 35)
                    p.relations.push_back({{{Rational(1), make_path(p.quiver, {a, b})}}});
        if (arrows.size() >= 4 && pct(rng) < 50) {
            // a commutativity square when two length-2 routes are parallel
            for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
                for (int b = 0; b < static_cast<int>(arrows.size()); ++b)
                    for (int c = 0; c < static_cast<int>(arrows.size()); ++c)
                        for (int d = 0; d < static_cast<int>(arrows.size()); ++d) {
                            if (a == c || arrows[a].target != arrows[b].source || arrows[c].target != arrows[d].source) continue;
                            if (arrows[a].source != arrows[c].source || arrows[b].target != arrows[d].target) continue;
                            if (pct(rng) < 70) continue;
                            p.relations.push_back({{{Rational(1), make_path(p.quiver, {a, b})},
                                                    {Rational(-1), make_path(p.quiver, {c, d})}}});
                        }
        }
        try {
            auto alg = Algebra::create(p);
            if (alg->total_dim() <= max_dim) return alg;
        } catch (const Error&) {
        }
    }
}

}  // namespace hart::testing
