#include "hart/homological.hpp"

#include "hart/errors.hpp"
#include "homological_cache.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hart {

namespace {

// Coordinates of P = ⊕_g Λe_{gens[g]} at each vertex.
struct Layout {
    std::vector<int> gens;
    std::vector<std::vector<std::uint32_t>> off;  // off[i][g], off[i][G] = dim P_i

    Layout() = default;
    Layout(const Algebra& alg, std::vector<int> g) : gens(std::move(g)) {
        int nv = alg.num_vertices();
        off.assign(nv, {});
        for (int i = 0; i < nv; ++i) {
            std::uint32_t o = 0;
            off[i].push_back(0);
            for (int v : gens) off[i].push_back(o += static_cast<std::uint32_t>(alg.dim(i, v)));
        }
    }
    std::size_t dim(int i) const { return off[i].back(); }
    std::pair<int, std::uint32_t> locate(int i, std::uint32_t c) const {
        auto it = std::upper_bound(off[i].begin(), off[i].end(), c);
        int g = static_cast<int>(it - off[i].begin()) - 1;
        return {g, c - off[i][g]};
    }
    std::vector<SparseVec> split(int i, const SparseVec& v) const {
        std::vector<SparseVec> blocks(gens.size());
        for (const auto& e : v) {
            auto [g, b] = locate(i, e.idx);
            blocks[g].push_back({b, e.val});
        }
        return blocks;
    }
};

// Same for ⊕_g Y_{gens[g]}.
std::vector<std::uint32_t> module_offsets(const Representation& y, const std::vector<int>& gens) {
    std::vector<std::uint32_t> off{0};
    std::uint32_t o = 0;
    for (int v : gens) off.push_back(o += static_cast<std::uint32_t>(y.dim(v)));
    return off;
}

std::pair<int, std::uint32_t> locate(const std::vector<std::uint32_t>& off, std::uint32_t c) {
    auto it = std::upper_bound(off.begin(), off.end(), c);
    int g = static_cast<int>(it - off.begin()) - 1;
    return {g, c - off[g]};
}

// Generators of the top: unit vectors at the non-pivot columns of rad X_v.
std::vector<std::pair<int, std::uint32_t>> top_generators(const Representation& x) {
    const Quiver& q = x.algebra()->quiver();
    std::vector<std::pair<int, std::uint32_t>> out;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (x.dim(v) == 0) continue;
        Echelon e(x.dim(v));
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrows[a].source != v) continue;
            const auto& m = x.arrow_map(a);
            for (std::size_t c = 0; c < m.cols() && e.rank() < x.dim(v); ++c)
                if (!m.column(c).empty()) e.insert(m.column(c));
        }
        for (auto c : e.free_columns()) out.push_back({v, c});
    }
    return out;
}

struct CoverStep {
    Layout layout;
    std::vector<std::uint32_t> gen_col;
    Representation kernel;
    std::vector<std::vector<SparseVec>> kernel_basis;  // [i][c] in P_i coordinates
};

CoverStep cover_step(const Representation& m) {
    const AlgebraPtr& alg = m.algebra();
    const int nv = alg->num_vertices();
    auto top = top_generators(m);
    std::vector<int> gens;
    CoverStep s;
    for (auto [v, c] : top) {
        gens.push_back(v);
        s.gen_col.push_back(c);
    }
    s.layout = Layout(*alg, gens);
    const Layout& L = s.layout;

    s.kernel_basis.assign(nv, {});
    std::vector<std::vector<std::int32_t>> key(nv);
    for (int i = 0; i < nv; ++i) {
        key[i].assign(L.dim(i), -1);
        Echelon e(m.dim(i), L.dim(i));
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::uint32_t b = 0; b < alg->dim(i, gens[g]); ++b) {
                std::uint32_t c = L.off[i][g] + b;
                SparseVec ker;
                if (!e.insert(m.path_map(i, gens[g], b).column(s.gen_col[g]), unit_vector(c), &ker)) {
                    key[i][c] = static_cast<std::int32_t>(s.kernel_basis[i].size());
                    s.kernel_basis[i].push_back(std::move(ker));
                }
            }
    }

    const Quiver& q = alg->quiver();
    std::vector<std::size_t> kd(nv);
    for (int i = 0; i < nv; ++i) kd[i] = s.kernel_basis[i].size();
    std::vector<SparseMatrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrows[a].source, j = q.arrows[a].target;
        SparseMatrix km(kd[i], kd[j]);
        Accumulator acc(L.dim(i));
        for (std::size_t c = 0; c < kd[j]; ++c) {
            for (const auto& e : s.kernel_basis[j][c]) {
                auto [g, b] = L.locate(j, e.idx);
                acc.add(sparse_shift(alg->left_arrow(a, gens[g]).column(b), L.off[i][g]), e.val);
            }
            SparseVec col;
            for (auto& e : acc.take())
                if (key[i][e.idx] >= 0) col.push_back({static_cast<std::uint32_t>(key[i][e.idx]), std::move(e.val)});
            km.set_column(c, std::move(col));
        }
        maps.push_back(std::move(km));
    }
    s.kernel = Representation(alg, kd, std::move(maps), false);
    return s;
}

// Hom(P_•, Y) for a projective resolution P_• given by generators and λ's.
struct HomComplex {
    const Resolution& r;
    const Representation& y;
    std::vector<std::vector<std::uint32_t>> off;

    HomComplex(const Resolution& res, const Representation& mod) : r(res), y(mod) {
        for (const auto& g : r.gens) off.push_back(module_offsets(y, g));
    }
    std::size_t dim(int k) const { return k < r.num_terms() ? off[k].back() : 0; }

    // Columns of δ_k: C^k -> C^{k+1}.
    template <class F>
    void for_each_column(int k, F&& fn) const {
        if (k + 1 >= r.num_terms()) return;
        std::vector<std::vector<std::pair<int, const SparseVec*>>> rev(r.gens[k].size());
        for (std::size_t g = 0; g < r.gens[k + 1].size(); ++g)
            for (const auto& [h, lam] : r.diff[k + 1][g]) rev[h].push_back({static_cast<int>(g), &lam});
        for (std::size_t h = 0; h < r.gens[k].size(); ++h) {
            int vh = r.gens[k][h];
            for (std::uint32_t x = 0; x < y.dim(vh); ++x) {
                SparseVec col;
                for (const auto& [g, lam] : rev[h]) {
                    SparseVec part = y.act(r.gens[k + 1][g], vh, *lam, unit_vector(x));
                    for (auto& e : part) col.push_back({e.idx + off[k + 1][g], std::move(e.val)});
                }
                fn(off[k][h] + x, col);
            }
        }
    }
    std::size_t rank(int k) const {
        if (k < 0 || k + 1 >= r.num_terms()) return 0;
        Echelon e(dim(k + 1));
        for_each_column(k, [&](std::uint32_t, const SparseVec& col) {
            if (!col.empty() && e.rank() < e.dim()) e.insert(col);
        });
        return e.rank();
    }
    Echelon image(int k) const {
        Echelon e(dim(k + 1));
        for_each_column(k, [&](std::uint32_t, const SparseVec& col) {
            if (!col.empty() && e.rank() < e.dim()) e.insert(col);
        });
        return e;
    }
};

// Tagged echelons that solve d_k z = y at each vertex (π for k = 0).
class LiftSolver {
public:
    LiftSolver(const Resolution& r, const Representation& n) : r_(r), n_(n) {
        for (const auto& g : r.gens) layouts_.emplace_back(*r.algebra, g);
        ech_.resize(r.num_terms());
        for (auto& v : ech_) v.resize(r.algebra->num_vertices());
    }
    const Layout& layout(int k) const { return layouts_[k]; }

    // Returns z in (P_k)_v coordinates; throws if y is not in the image.
    SparseVec solve(int k, int v, const SparseVec& y) {
        if (y.empty()) return {};
        if (k >= r_.num_terms()) throw std::logic_error("chain lift: target outside the image");
        Echelon& e = echelon(k, v);
        SparseVec combo;
        if (!e.reduce_tagged(y, &combo).empty()) throw std::logic_error("chain lift: target outside the image");
        return combo;
    }

private:
    Echelon& echelon(int k, int v) {
        auto& slot = ech_[k][v];
        if (slot) return *slot;
        const AlgebraPtr& alg = r_.algebra;
        const Layout& L = layouts_[k];
        std::size_t target_dim = k == 0 ? n_.dim(v) : layouts_[k - 1].dim(v);
        slot = std::make_unique<Echelon>(target_dim, L.dim(v));
        for (std::size_t h = 0; h < L.gens.size(); ++h) {
            int vh = L.gens[h];
            for (std::uint32_t b = 0; b < alg->dim(v, vh); ++b) {
                SparseVec col;
                if (k == 0) {
                    col = n_.act(v, vh, unit_vector(b), r_.augmentation[h]);
                } else {
                    Accumulator acc(target_dim);
                    for (const auto& [h2, lam] : r_.diff[k][h])
                        acc.add(sparse_shift(alg->multiply(v, vh, r_.gens[k - 1][h2], unit_vector(b), lam),
                                             layouts_[k - 1].off[v][h2]),
                                Rational(1));
                    col = acc.take();
                }
                slot->insert(col, unit_vector(L.off[v][h] + b));
            }
        }
        return *slot;
    }

    const Resolution& r_;
    const Representation& n_;
    std::vector<Layout> layouts_;
    std::vector<std::vector<std::unique_ptr<Echelon>>> ech_;
};

// Chain map between resolutions over φ: M -> N, through degree upto.
ChainLift lift_map(const Resolution& rm, const Resolution& rn, LiftSolver& solver, const ModuleMap& phi, int upto) {
    const AlgebraPtr& alg = rm.algebra;
    ChainLift f;
    int top = std::min(upto, rm.num_terms() - 1);
    for (int k = 0; k <= top; ++k) {
        std::size_t nh = k < rn.num_terms() ? rn.gens[k].size() : 0;
        f.emplace_back(rm.gens[k].size(), std::vector<SparseVec>(nh));
        for (std::size_t g = 0; g < rm.gens[k].size(); ++g) {
            int v = rm.gens[k][g];
            SparseVec y;
            if (k == 0) {
                y = phi.blocks[v].apply(rm.augmentation[g]);
            } else if (k - 1 < rn.num_terms()) {
                const Layout& Lp = solver.layout(k - 1);
                Accumulator acc(Lp.dim(v));
                for (const auto& [h, lam] : rm.diff[k][g]) {
                    int vh = rm.gens[k - 1][h];
                    for (std::size_t h2 = 0; h2 < f[k - 1][h].size(); ++h2) {
                        const SparseVec& fh = f[k - 1][h][h2];
                        if (fh.empty()) continue;
                        acc.add(sparse_shift(alg->multiply(v, vh, rn.gens[k - 1][h2], lam, fh), Lp.off[v][h2]), Rational(1));
                    }
                }
                y = acc.take();
            }
            if (y.empty()) continue;
            SparseVec z = solver.solve(k, v, y);
            auto blocks = solver.layout(k).split(v, z);
            for (std::size_t h = 0; h < nh; ++h) f[k][g][h] = std::move(blocks[h]);
        }
    }
    return f;
}

std::shared_ptr<const InjectiveData> injective_data(const AlgebraPtr& alg, int n) {
    HomologicalCache& cache = alg->cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (auto it = cache.injective.find(n); it != cache.injective.end()) return it->second;
    auto data = std::make_shared<InjectiveData>();
    const int nv = alg->num_vertices();
    std::vector<Representation> injectives;
    for (int u = 0; u < nv; ++u) {
        injectives.push_back(injective_rep(alg, u));
        data->resolutions.push_back(partial_resolution(injectives.back(), n + 1));
        if (!data->resolutions.back().complete)
            throw PreconditionFailed("injective at vertex " + alg->quiver().vertices[u] +
                                     " has projective dimension above " + std::to_string(n));
    }
    AlgebraPtr op = alg->opposite();
    std::vector<std::unique_ptr<LiftSolver>> solvers;
    for (int u = 0; u < nv; ++u) solvers.push_back(std::make_unique<LiftSolver>(data->resolutions[u], injectives[u]));
    const Quiver& q = alg->quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrows[a].source, j = q.arrows[a].target;
        ModuleMap rho = dual_map(right_multiplication(op, a));
        data->lifts.push_back(lift_map(data->resolutions[i], data->resolutions[j], *solvers[j], rho, n));
    }
    solvers.clear();
    for (auto& r : data->resolutions) r.algebra.reset();
    cache.injective.emplace(n, data);
    return data;
}

// Hom equations f_u X_a - Y_a f_v = 0; variable f_v[r][c] at base_v + r*dim X_v + c.
SparseMatrix intertwiner_system(const Representation& x, const Representation& y, std::vector<std::size_t>& base) {
    const Quiver& q = x.algebra()->quiver();
    const int nv = q.num_vertices();
    base.assign(nv + 1, 0);
    for (int v = 0; v < nv; ++v) base[v + 1] = base[v] + y.dim(v) * x.dim(v);
    std::vector<std::size_t> eq(q.num_arrows() + 1, 0);
    for (int a = 0; a < q.num_arrows(); ++a) eq[a + 1] = eq[a] + y.dim(q.arrows[a].source) * x.dim(q.arrows[a].target);

    std::vector<SparseMatrix> xt;
    for (int a = 0; a < q.num_arrows(); ++a) xt.push_back(x.arrow_map(a).transpose());

    SparseMatrix sys(eq.back(), base.back());
    for (int u = 0; u < nv; ++u) {
        std::size_t dx = x.dim(u);
        for (std::size_t r = 0; r < y.dim(u); ++r)
            for (std::size_t k = 0; k < dx; ++k) {
                SparseVec col;
                for (int a = 0; a < q.num_arrows(); ++a) {
                    const Arrow& ar = q.arrows[a];
                    if (ar.source == u) {
                        // (f_u X_a)[r][c] += f_u[r][k] X_a[k][c]
                        std::size_t w = x.dim(ar.target);
                        for (const auto& e : xt[a].column(k)) col.push_back({static_cast<std::uint32_t>(eq[a] + r * w + e.idx), e.val});
                    }
                    if (ar.target == u) {
                        // (Y_a f_u)[r'][k] += Y_a[r'][r] f_u[r][k]
                        for (const auto& e : y.arrow_map(a).column(r))
                            col.push_back({static_cast<std::uint32_t>(eq[a] + e.idx * dx + k), -e.val});
                    }
                }
                std::sort(col.begin(), col.end(), [](const SparseEntry& p, const SparseEntry& s) { return p.idx < s.idx; });
                SparseVec merged;
                for (auto& e : col) {
                    if (!merged.empty() && merged.back().idx == e.idx)
                        merged.back().val = merged.back().val + e.val;
                    else
                        merged.push_back(std::move(e));
                }
                std::erase_if(merged, [](const SparseEntry& e) { return e.val.is_zero(); });
                sys.set_column(base[u] + r * dx + k, std::move(merged));
            }
    }
    return sys;
}

bool is_isomorphism(const ModuleMap& f, const Representation& x) {
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        if (sparse_rank(f.blocks[v]) != x.dim(v)) return false;
    return true;
}

}  // namespace

Representation projective_rep(const AlgebraPtr& alg, int v) {
    std::vector<std::size_t> dims;
    for (int i = 0; i < alg->num_vertices(); ++i) dims.push_back(alg->dim(i, v));
    std::vector<SparseMatrix> maps;
    for (int a = 0; a < alg->num_arrows(); ++a) maps.push_back(alg->left_arrow(a, v));
    return Representation(alg, std::move(dims), std::move(maps), false);
}

Representation injective_rep(const AlgebraPtr& alg, int v) { return dual(projective_rep(alg->opposite(), v)); }

Representation simple_rep(const AlgebraPtr& alg, int v) {
    std::vector<std::size_t> dims(alg->num_vertices(), 0);
    dims[v] = 1;
    std::vector<SparseMatrix> maps;
    for (const auto& a : alg->quiver().arrows) maps.emplace_back(dims[a.source], dims[a.target]);
    return Representation(alg, std::move(dims), std::move(maps), false);
}

Representation direct_sum(const std::vector<Representation>& xs) {
    if (xs.empty()) throw std::invalid_argument("direct_sum of no modules");
    const AlgebraPtr& alg = xs[0].algebra();
    const Quiver& q = alg->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    for (const auto& x : xs)
        for (int v = 0; v < q.num_vertices(); ++v) dims[v] += x.dim(v);
    std::vector<SparseMatrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        SparseMatrix m(dims[s], dims[t]);
        std::uint32_t rs = 0, ct = 0;
        for (const auto& x : xs) {
            const auto& xm = x.arrow_map(a);
            for (std::size_t c = 0; c < xm.cols(); ++c) m.set_column(ct + c, sparse_shift(xm.column(c), rs));
            rs += static_cast<std::uint32_t>(x.dim(s));
            ct += static_cast<std::uint32_t>(x.dim(t));
        }
        maps.push_back(std::move(m));
    }
    return Representation(alg, std::move(dims), std::move(maps), false);
}

Representation dual(const Representation& x) {
    AlgebraPtr op = x.algebra()->opposite();
    std::vector<SparseMatrix> maps;
    for (const auto& m : x.arrow_maps()) maps.push_back(m.transpose());
    return Representation(op, x.dims(), std::move(maps), false);
}

ModuleMap dual_map(const ModuleMap& f) {
    ModuleMap d;
    for (const auto& b : f.blocks) d.blocks.push_back(b.transpose());
    return d;
}

ModuleMap right_multiplication(const AlgebraPtr& alg, int arrow) {
    ModuleMap f;
    for (int w = 0; w < alg->num_vertices(); ++w) f.blocks.push_back(alg->right_arrow(arrow, w));
    return f;
}

std::vector<ModuleMap> hom_space(const Representation& x, const Representation& y) {
    std::vector<std::size_t> base;
    SparseMatrix sys = intertwiner_system(x, y, base);
    std::vector<ModuleMap> out;
    const int nv = x.algebra()->num_vertices();
    for (const auto& k : sparse_kernel(sys)) {
        ModuleMap f = zero_map(x, y);
        for (const auto& e : k) {
            int v = static_cast<int>(std::upper_bound(base.begin(), base.end(), e.idx) - base.begin()) - 1;
            std::size_t local = e.idx - base[v], dx = x.dim(v);
            f.blocks[v].column(local % dx).push_back({static_cast<std::uint32_t>(local / dx), e.val});
        }
        (void)nv;
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
    std::vector<std::size_t> base;
    SparseMatrix sys = intertwiner_system(x, y, base);
    return sys.cols() - sparse_rank(sys);
}

bool are_isomorphic(const Representation& x, const Representation& y) {
    if (x.dims() != y.dims()) return false;
    if (x.is_zero()) return true;
    auto basis = hom_space(x, y);
    if (basis.empty()) return false;
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Rational> coeffs(basis.size());
    for (int attempt = 0; attempt < 20; ++attempt) {
        for (auto& c : coeffs) c = Rational(dist(rng));
        if (is_isomorphism(linear_combination(basis, coeffs, x, y), x)) return true;
    }
    if (basis.size() > 8) return false;
    std::size_t total = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (auto& co : coeffs) {
            co = Rational(static_cast<long>(c % 3) - 1);
            c /= 3;
        }
        if (is_isomorphism(linear_combination(basis, coeffs, x, y), x)) return true;
    }
    return false;
}

Representation quotient_module(const Representation& x, const std::vector<std::pair<int, SparseVec>>& gens) {
    const AlgebraPtr& alg = x.algebra();
    const Quiver& q = alg->quiver();
    const int nv = q.num_vertices();
    std::vector<Echelon> sub;
    for (int v = 0; v < nv; ++v) sub.emplace_back(x.dim(v));
    std::vector<std::pair<int, SparseVec>> queue;
    for (const auto& [v, g] : gens)
        if (sub[v].insert(g)) queue.push_back({v, g});
    while (!queue.empty()) {
        auto [j, u] = std::move(queue.back());
        queue.pop_back();
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrows[a].target != j) continue;
            int i = q.arrows[a].source;
            SparseVec w = x.arrow_map(a).apply(u);
            if (!w.empty() && sub[i].insert(w)) queue.push_back({i, std::move(w)});
        }
    }
    std::vector<std::vector<std::uint32_t>> free(nv);
    std::vector<std::vector<std::int32_t>> index(nv);
    std::vector<std::size_t> dims(nv);
    for (int v = 0; v < nv; ++v) {
        free[v] = sub[v].free_columns();
        index[v].assign(x.dim(v), -1);
        for (std::size_t k = 0; k < free[v].size(); ++k) index[v][free[v][k]] = static_cast<std::int32_t>(k);
        dims[v] = free[v].size();
    }
    std::vector<SparseMatrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrows[a].source, j = q.arrows[a].target;
        SparseMatrix m(dims[i], dims[j]);
        for (std::size_t k = 0; k < free[j].size(); ++k) {
            SparseVec col;
            for (auto& e : sub[i].reduce(x.arrow_map(a).column(free[j][k])))
                col.push_back({static_cast<std::uint32_t>(index[i][e.idx]), std::move(e.val)});
            m.set_column(k, std::move(col));
        }
        maps.push_back(std::move(m));
    }
    return Representation(alg, std::move(dims), std::move(maps), false);
}

ProjectiveCover projective_cover(const Representation& x) {
    const AlgebraPtr& alg = x.algebra();
    auto top = top_generators(x);
    ProjectiveCover pc;
    std::vector<Representation> summands;
    for (auto [v, c] : top) {
        pc.generators.push_back(v);
        summands.push_back(projective_rep(alg, v));
    }
    pc.projective = summands.empty() ? Representation::zero(alg) : direct_sum(summands);
    Layout L(*alg, pc.generators);
    for (int i = 0; i < alg->num_vertices(); ++i) {
        SparseMatrix m(x.dim(i), L.dim(i));
        for (std::size_t g = 0; g < top.size(); ++g)
            for (std::uint32_t b = 0; b < alg->dim(i, top[g].first); ++b)
                m.set_column(L.off[i][g] + b, x.path_map(i, top[g].first, b).column(top[g].second));
        pc.epi.blocks.push_back(std::move(m));
    }
    return pc;
}

int Resolution::length() const {
    int n = num_terms();
    while (n > 0 && gens[n - 1].empty()) --n;
    return n - 1;
}

Representation Resolution::term(int k) const {
    if (k >= num_terms() || gens[k].empty()) return Representation::zero(algebra);
    std::vector<Representation> s;
    for (int v : gens[k]) s.push_back(projective_rep(algebra, v));
    return direct_sum(s);
}

ModuleMap Resolution::differential(int k) const {
    Layout src(*algebra, k < num_terms() ? gens[k] : std::vector<int>{});
    Layout dst(*algebra, k - 1 < num_terms() ? gens[k - 1] : std::vector<int>{});
    ModuleMap f;
    for (int i = 0; i < algebra->num_vertices(); ++i) {
        SparseMatrix m(dst.dim(i), src.dim(i));
        for (std::size_t g = 0; g < src.gens.size(); ++g) {
            int vg = src.gens[g];
            for (std::uint32_t b = 0; b < algebra->dim(i, vg); ++b) {
                Accumulator acc(dst.dim(i));
                for (const auto& [h, lam] : diff[k][g])
                    acc.add(sparse_shift(algebra->multiply(i, vg, dst.gens[h], unit_vector(b), lam), dst.off[i][h]), Rational(1));
                m.set_column(src.off[i][g] + b, acc.take());
            }
        }
        f.blocks.push_back(std::move(m));
    }
    return f;
}

bool Resolution::is_minimal() const {
    for (int k = 1; k < num_terms(); ++k)
        for (std::size_t g = 0; g < gens[k].size(); ++g)
            for (const auto& [h, lam] : diff[k][g])
                if (gens[k][g] == gens[k - 1][h] && !lam.empty() && lam[0].idx == 0) return false;
    return true;
}

Resolution partial_resolution(const Representation& x, int max_terms) {
    Resolution r;
    r.algebra = x.algebra();
    Representation m = x;
    CoverStep prev;
    for (int k = 0;; ++k) {
        if (m.is_zero()) {
            r.complete = true;
            break;
        }
        if (k >= max_terms) break;
        CoverStep s = cover_step(m);
        r.gens.push_back(s.layout.gens);
        r.diff.emplace_back();
        if (k == 0) {
            for (auto c : s.gen_col) r.augmentation.push_back(unit_vector(c));
        } else {
            for (std::size_t g = 0; g < s.gen_col.size(); ++g) {
                int v = s.layout.gens[g];
                auto blocks = prev.layout.split(v, prev.kernel_basis[v][s.gen_col[g]]);
                std::vector<std::pair<int, SparseVec>> row;
                for (std::size_t h = 0; h < blocks.size(); ++h)
                    if (!blocks[h].empty()) row.push_back({static_cast<int>(h), std::move(blocks[h])});
                r.diff.back().push_back(std::move(row));
            }
        }
        m = s.kernel;
        prev = std::move(s);
    }
    return r;
}

Resolution min_proj_resolution(const Representation& x, int max_len) {
    Resolution r = partial_resolution(x, max_len + 1);
    if (!r.complete) throw CapExceeded("projective resolution longer than " + std::to_string(max_len));
    return r;
}

ExtProfile ext_profile(const Resolution& rx, const Representation& y, int cap) {
    if (!rx.complete && cap + 1 >= rx.num_terms()) throw std::logic_error("ext_profile: resolution too short");
    HomComplex hc(rx, y);
    std::vector<std::size_t> rk(cap + 1);
    for (int k = 0; k <= cap; ++k) rk[k] = hc.rank(k);
    ExtProfile out;
    for (int j = 0; j <= cap; ++j) out.push_back(hc.dim(j) - rk[j] - (j > 0 ? rk[j - 1] : 0));
    return out;
}

ExtProfile ext_profile(const Representation& x, const Representation& y, int cap) {
    return ext_profile(partial_resolution(x, cap + 2), y, cap);
}

int global_dimension(const AlgebraPtr& alg, int cap) {
    int gd = 0;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        Resolution r = partial_resolution(simple_rep(alg, v), cap + 1);
        if (!r.complete) throw AboveCap("global dimension exceeds " + std::to_string(cap));
        gd = std::max(gd, r.length());
    }
    return gd;
}

bool is_injective(const Representation& x) {
    const AlgebraPtr& alg = x.algebra();
    const Quiver& q = alg->quiver();
    std::size_t envelope = 0;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (x.dim(v) == 0) continue;
        std::vector<int> in;
        std::size_t rows = 0;
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrows[a].target == v) {
                in.push_back(a);
                rows += x.dim(q.arrows[a].source);
            }
        SparseMatrix stacked(rows, x.dim(v));
        for (std::size_t c = 0; c < x.dim(v); ++c) {
            SparseVec col;
            std::uint32_t o = 0;
            for (int a : in) {
                for (const auto& e : x.arrow_map(a).column(c)) col.push_back({e.idx + o, e.val});
                o += static_cast<std::uint32_t>(x.dim(q.arrows[a].source));
            }
            stacked.set_column(c, std::move(col));
        }
        std::size_t soc = x.dim(v) - sparse_rank(stacked);
        std::size_t iv = 0;
        for (int w = 0; w < q.num_vertices(); ++w) iv += alg->dim(v, w);
        envelope += soc * iv;
    }
    return envelope == x.total_dim();
}

Representation ext_into_regular(const Representation& y, int n) {
    const AlgebraPtr& alg = y.algebra();
    AlgebraPtr op = alg->opposite();
    const int nv = alg->num_vertices();
    Resolution r = partial_resolution(y, n + 1);
    if (!r.complete) throw PreconditionFailed("projective dimension exceeds " + std::to_string(n));
    if (n >= r.num_terms()) return Representation::zero(op);

    // C^n at w is ⊕_g e_{v_g}Λe_w, which is the projective layout over Λ^op.
    const Layout Ln(*op, r.gens[n]);
    std::vector<Echelon> im;
    for (int w = 0; w < nv; ++w) {
        Echelon e(Ln.dim(w));
        if (n >= 1) {
            std::vector<std::vector<std::pair<int, const SparseVec*>>> rev(r.gens[n - 1].size());
            for (std::size_t g = 0; g < r.gens[n].size(); ++g)
                for (const auto& [h, lam] : r.diff[n][g]) rev[h].push_back({static_cast<int>(g), &lam});
            for (std::size_t h = 0; h < rev.size(); ++h) {
                int vh = r.gens[n - 1][h];
                for (std::uint32_t b = 0; b < alg->dim(vh, w); ++b) {
                    SparseVec col;
                    for (const auto& [g, lam] : rev[h]) {
                        auto part = alg->multiply(r.gens[n][g], vh, w, *lam, unit_vector(b));
                        for (auto& en : part) col.push_back({en.idx + Ln.off[w][g], std::move(en.val)});
                    }
                    if (!col.empty()) e.insert(col);
                }
            }
        }
        im.push_back(std::move(e));
    }
    std::vector<std::vector<std::uint32_t>> free(nv);
    std::vector<std::vector<std::int32_t>> index(nv);
    std::vector<std::size_t> dims(nv);
    for (int w = 0; w < nv; ++w) {
        free[w] = im[w].free_columns();
        index[w].assign(Ln.dim(w), -1);
        for (std::size_t k = 0; k < free[w].size(); ++k) index[w][free[w][k]] = static_cast<std::int32_t>(k);
        dims[w] = free[w].size();
    }
    const Quiver& q = alg->quiver();
    std::vector<SparseMatrix> maps;
    for (int b = 0; b < q.num_arrows(); ++b) {
        int s = q.arrows[b].source, t = q.arrows[b].target;
        SparseMatrix m(dims[t], dims[s]);
        for (std::size_t k = 0; k < free[s].size(); ++k) {
            auto [g, x] = Ln.locate(s, free[s][k]);
            SparseVec img = sparse_shift(alg->right_arrow(b, r.gens[n][g]).column(x), Ln.off[t][g]);
            SparseVec col;
            for (auto& e : im[t].reduce(img)) col.push_back({static_cast<std::uint32_t>(index[t][e.idx]), std::move(e.val)});
            m.set_column(k, std::move(col));
        }
        maps.push_back(std::move(m));
    }
    return Representation(op, std::move(dims), std::move(maps), false);
}

Representation tau_n(const Representation& x, int n) { return dual(ext_into_regular(x, n)); }

Representation tau_n_minus_via_opposite(const Representation& x, int n) { return ext_into_regular(dual(x), n); }

namespace {

struct NuState {
    ExtProfile profile;
    std::vector<std::unique_ptr<HomComplex>> complexes;
    std::vector<Echelon> image;  // im δ_{n-1} in C_u^n
    std::vector<std::vector<std::uint32_t>> free;
    std::vector<std::vector<std::int32_t>> index;
};

NuState nu_state(const InjectiveData& data, const Representation& x, int n, bool want_module) {
    const int nv = x.algebra()->num_vertices();
    NuState st;
    st.profile.assign(n + 1, 0);
    for (int u = 0; u < nv; ++u) {
        st.complexes.push_back(std::make_unique<HomComplex>(data.resolutions[u], x));
        const HomComplex& hc = *st.complexes.back();
        std::vector<std::size_t> rk(n + 1, 0);
        Echelon last(hc.dim(n));
        for (int k = 0; k < n; ++k) {
            if (k == n - 1 && want_module) {
                last = hc.image(k);
                rk[k] = last.rank();
            } else {
                rk[k] = hc.rank(k);
            }
        }
        for (int j = 0; j <= n; ++j) st.profile[j] += hc.dim(j) - rk[j] - (j > 0 ? rk[j - 1] : 0);
        if (want_module) {
            st.free.push_back(last.free_columns());
            std::vector<std::int32_t> idx(hc.dim(n), -1);
            for (std::size_t k = 0; k < st.free.back().size(); ++k) idx[st.free.back()[k]] = static_cast<std::int32_t>(k);
            st.index.push_back(std::move(idx));
            st.image.push_back(std::move(last));
        }
    }
    return st;
}

}  // namespace

NuInverse nu_inverse(const Representation& x, int n, bool want_module) {
    const AlgebraPtr& alg = x.algebra();
    auto data = injective_data(alg, n);
    NuState st = nu_state(*data, x, n, want_module);
    NuInverse out;
    out.profile = st.profile;
    if (!want_module) return out;

    const Quiver& q = alg->quiver();
    const int nv = q.num_vertices();
    std::vector<std::size_t> dims(nv);
    for (int u = 0; u < nv; ++u) dims[u] = st.free[u].size();
    std::vector<SparseMatrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrows[a].source, j = q.arrows[a].target;
        SparseMatrix m(dims[i], dims[j]);
        const Resolution& ri = data->resolutions[i];
        const Resolution& rj = data->resolutions[j];
        const ChainLift& f = data->lifts[a];
        if (dims[i] > 0 && dims[j] > 0 && n < static_cast<int>(f.size())) {
            std::vector<std::vector<std::pair<int, const SparseVec*>>> rev(rj.gens[n].size());
            for (std::size_t g = 0; g < f[n].size(); ++g)
                for (std::size_t h = 0; h < f[n][g].size(); ++h)
                    if (!f[n][g][h].empty()) rev[h].push_back({static_cast<int>(g), &f[n][g][h]});
            const auto& offj = st.complexes[j]->off[n];
            const auto& offi = st.complexes[i]->off[n];
            for (std::size_t k = 0; k < st.free[j].size(); ++k) {
                auto [h, xc] = locate(offj, st.free[j][k]);
                SparseVec img;
                for (const auto& [g, lam] : rev[h]) {
                    auto part = x.act(ri.gens[n][g], rj.gens[n][h], *lam, unit_vector(xc));
                    for (auto& e : part) img.push_back({e.idx + offi[g], std::move(e.val)});
                }
                SparseVec col;
                for (auto& e : st.image[i].reduce(img)) col.push_back({static_cast<std::uint32_t>(st.index[i][e.idx]), std::move(e.val)});
                m.set_column(k, std::move(col));
            }
        }
        maps.push_back(std::move(m));
    }
    out.module = Representation(alg, std::move(dims), std::move(maps), false);
    return out;
}

ExtProfile nu_inverse_profile(const Representation& x, int n) { return nu_inverse(x, n, false).profile; }

Representation tau_n_minus(const Representation& x, int n) { return *nu_inverse(x, n, true).module; }

ModuleMap tau_n_minus_map(const Representation& x, const Representation& y, const ModuleMap& f, int n) {
    const AlgebraPtr& alg = x.algebra();
    auto data = injective_data(alg, n);
    NuState sx = nu_state(*data, x, n, true);
    NuState sy = nu_state(*data, y, n, true);
    ModuleMap out;
    for (int u = 0; u < alg->num_vertices(); ++u) {
        SparseMatrix m(sy.free[u].size(), sx.free[u].size());
        if (n < data->resolutions[u].num_terms()) {
            const auto& gens = data->resolutions[u].gens[n];
            const auto& offx = sx.complexes[u]->off[n];
            const auto& offy = sy.complexes[u]->off[n];
            for (std::size_t k = 0; k < sx.free[u].size(); ++k) {
                auto [h, xc] = locate(offx, sx.free[u][k]);
                SparseVec img = sparse_shift(f.blocks[gens[h]].column(xc), offy[h]);
                SparseVec col;
                for (auto& e : sy.image[u].reduce(img)) col.push_back({static_cast<std::uint32_t>(sy.index[u][e.idx]), std::move(e.val)});
                m.set_column(k, std::move(col));
            }
        }
        out.blocks.push_back(std::move(m));
    }
    return out;
}

}  // namespace hart
