#include "hart/constructions.hpp"

#include "hart/errors.hpp"

#include <set>
#include <unordered_map>

namespace hart {

AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    const Quiver& qa = a.quiver;
    const Quiver& qb = b.quiver;
    const int nb = qb.num_vertices();
    auto vid = [nb](int u, int v) { return u * nb + v; };

    AlgebraPresentation t;
    t.name = a.name + "_x_" + b.name;
    for (const auto& u : qa.vertices)
        for (const auto& v : qb.vertices) t.quiver.vertices.push_back(u + "_" + v);
    // lift_a[x][v]: arrow x of A at vertex v of B; lift_b[u][y] likewise.
    std::vector<std::vector<int>> lift_a(qa.num_arrows(), std::vector<int>(nb));
    std::vector<std::vector<int>> lift_b(qa.num_vertices(), std::vector<int>(qb.num_arrows()));
    for (int x = 0; x < qa.num_arrows(); ++x)
        for (int v = 0; v < nb; ++v) {
            lift_a[x][v] = t.quiver.num_arrows();
            t.quiver.arrows.push_back({qa.arrows[x].name + "_" + qb.vertices[v], vid(qa.arrows[x].source, v), vid(qa.arrows[x].target, v)});
        }
    for (int u = 0; u < qa.num_vertices(); ++u)
        for (int y = 0; y < qb.num_arrows(); ++y) {
            lift_b[u][y] = t.quiver.num_arrows();
            t.quiver.arrows.push_back({qa.vertices[u] + "_" + qb.arrows[y].name, vid(u, qb.arrows[y].source), vid(u, qb.arrows[y].target)});
        }
    std::set<std::string> seen;
    for (const auto& v : t.quiver.vertices)
        if (!seen.insert("v:" + v).second) throw ParseError("tensor product: duplicate vertex name " + v);
    for (const auto& ar : t.quiver.arrows)
        if (!seen.insert("a:" + ar.name).second) throw ParseError("tensor product: duplicate arrow name " + ar.name);

    for (const auto& r : a.relations)
        for (int v = 0; v < nb; ++v) {
            Relation lr;
            for (const auto& term : r.terms) {
                std::vector<int> arrows;
                for (int x : term.path.arrows) arrows.push_back(lift_a[x][v]);
                lr.terms.push_back({term.coeff, make_path(t.quiver, arrows)});
            }
            t.relations.push_back(std::move(lr));
        }
    for (int u = 0; u < qa.num_vertices(); ++u)
        for (const auto& r : b.relations) {
            Relation lr;
            for (const auto& term : r.terms) {
                std::vector<int> arrows;
                for (int y : term.path.arrows) arrows.push_back(lift_b[u][y]);
                lr.terms.push_back({term.coeff, make_path(t.quiver, arrows)});
            }
            t.relations.push_back(std::move(lr));
        }
    for (int x = 0; x < qa.num_arrows(); ++x)
        for (int y = 0; y < qb.num_arrows(); ++y) {
            int u = qa.arrows[x].source, u2 = qa.arrows[x].target;
            int v = qb.arrows[y].source, v2 = qb.arrows[y].target;
            Relation sq;
            sq.terms.push_back({Rational(1), make_path(t.quiver, {lift_a[x][v], lift_b[u2][y]})});
            sq.terms.push_back({Rational(-1), make_path(t.quiver, {lift_b[u][y], lift_a[x][v2]})});
            t.relations.push_back(std::move(sq));
        }
    return t;
}

namespace {

SparseVec flatten(const ModuleMap& f) {
    SparseVec out;
    std::uint32_t base = 0;
    for (const auto& b : f.blocks) {
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (const auto& e : b.column(c)) out.push_back({static_cast<std::uint32_t>(base + c * b.rows() + e.idx), e.val});
        base += static_cast<std::uint32_t>(b.rows() * b.cols());
    }
    return out;
}

std::size_t flat_dim(const Representation& x, const Representation& y) {
    std::size_t d = 0;
    for (std::size_t v = 0; v < x.dims().size(); ++v) d += x.dim(static_cast<int>(v)) * y.dim(static_cast<int>(v));
    return d;
}

struct Span {
    Echelon ech;
    std::vector<SparseVec> basis;
    explicit Span(std::size_t dim = 0) : ech(dim) {}
    bool add(const SparseVec& v) {
        if (v.empty() || !ech.insert(v)) return false;
        basis.push_back(v);
        return true;
    }
};

struct PathRec {
    int source, target;
    std::vector<int> arrows;
    SparseVec value;
};

}  // namespace

const SparseVec& EndAlgebraData::product(int i, int j, int k, std::uint32_t f, std::uint32_t g) const {
    const std::size_t m = summands.size();
    return structure[(i * m + j) * m + k][f * hom_dims[j][k] + g];
}

SparseVec EndAlgebraData::multiply(int i, int j, int k, const SparseVec& f, const SparseVec& g) const {
    if (f.empty() || g.empty()) return {};
    Accumulator acc(hom_dims[i][k]);
    for (const auto& ef : f)
        for (const auto& eg : g) acc.add(product(i, j, k, ef.idx, eg.idx), ef.val * eg.val);
    return acc.take();
}

EndAlgebraData endomorphism_algebra(const std::vector<Representation>& summands, const std::vector<std::string>& names,
                                    const std::string& name, std::size_t path_budget) {
    EndAlgebraData d;
    d.summands = summands;
    const int m = static_cast<int>(summands.size());
    d.hom.assign(m, std::vector<std::vector<ModuleMap>>(m));
    d.hom_dims.assign(m, std::vector<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            d.hom[i][j] = hom_space(summands[i], summands[j]);
            d.hom_dims[i][j] = d.hom[i][j].size();
        }

    std::vector<std::vector<Echelon>> coords(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            coords[i].emplace_back(flat_dim(summands[i], summands[k]), d.hom_dims[i][k]);
            for (std::uint32_t t = 0; t < d.hom_dims[i][k]; ++t) coords[i][k].insert(flatten(d.hom[i][k][t]), unit_vector(t));
        }
    d.structure.assign(static_cast<std::size_t>(m) * m * m, {});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                auto& tab = d.structure[(static_cast<std::size_t>(i) * m + j) * m + k];
                for (const auto& f : d.hom[i][j])
                    for (const auto& g : d.hom[j][k]) {
                        SparseVec combo;
                        if (!coords[i][k].reduce_tagged(flatten(compose(f, g)), &combo).empty())
                            throw std::logic_error("composition outside the Hom basis");
                        tab.push_back(std::move(combo));
                    }
            }

    // Radical: everything between distinct summands, the trace-form kernel on End(T_i).
    std::vector<std::vector<Span>> rad(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            rad[i].emplace_back(d.hom_dims[i][j]);
            if (i != j) {
                for (std::uint32_t t = 0; t < d.hom_dims[i][j]; ++t) rad[i][j].add(unit_vector(t));
                continue;
            }
            std::size_t e = d.hom_dims[i][i];
            std::vector<Rational> tr(e);
            for (std::uint32_t t = 0; t < e; ++t)
                for (std::uint32_t c = 0; c < e; ++c)
                    for (const auto& en : d.product(i, i, i, t, c))
                        if (en.idx == c) tr[t] = tr[t] + en.val;
            Matrix form(e, e);
            for (std::uint32_t a = 0; a < e; ++a)
                for (std::uint32_t b = 0; b < e; ++b)
                    for (const auto& en : d.product(i, i, i, a, b)) form(a, b) = form(a, b) + en.val * tr[en.idx];
            Matrix k = kernel_basis(form);
            for (std::size_t c = 0; c < k.cols(); ++c) rad[i][j].add(sparse_from_dense(k.column(c)));
        }

    // Powers of the radical; rad2 is kept for the arrow choice.
    std::vector<std::vector<Span>> power = rad, rad2;
    d.loewy_length = 1;
    for (int p = 1;; ++p) {
        bool nonzero = false;
        for (int i = 0; i < m && !nonzero; ++i)
            for (int j = 0; j < m && !nonzero; ++j) nonzero = !power[i][j].basis.empty();
        if (!nonzero) break;
        d.loewy_length = p + 1;
        std::vector<std::vector<Span>> next(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                next[i].emplace_back(d.hom_dims[i][j]);
                for (int k = 0; k < m; ++k)
                    for (const auto& x : power[i][k].basis)
                        for (const auto& y : rad[k][j].basis) next[i][j].add(d.multiply(i, k, j, x, y));
            }
        power = std::move(next);
        if (p == 1) rad2 = power;
    }
    if (rad2.empty()) {
        rad2.resize(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) rad2[i].emplace_back(d.hom_dims[i][j]);
    }

    AlgebraPresentation& pres = d.presentation;
    pres.name = name;
    pres.quiver.vertices = names;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Span s = rad2[i][j];
            for (const auto& x : rad[i][j].basis)
                if (s.add(x)) {
                    pres.quiver.arrows.push_back({"t" + std::to_string(pres.quiver.num_arrows()), i, j});
                    d.arrow_elements.push_back(x);
                }
        }

    // Relations, degreewise: complements of the generated ideal inside the
    // kernel of the evaluation on paths of length 2..L.
    const Quiver& q = pres.quiver;
    const int cap = std::max(2, d.loewy_length);
    std::vector<std::vector<std::vector<std::vector<int>>>> all_paths(m, std::vector<std::vector<std::vector<int>>>(m));
    std::vector<std::vector<std::unordered_map<std::vector<int>, std::uint32_t, VecHash>>> col_index(
        m, std::vector<std::unordered_map<std::vector<int>, std::uint32_t, VecHash>>(m));
    std::vector<std::vector<std::vector<SparseVec>>> col_value(m, std::vector<std::vector<SparseVec>>(m));
    for (int i = 0; i < m; ++i) all_paths[i][i].push_back({});
    std::vector<PathRec> level;
    for (int a = 0; a < q.num_arrows(); ++a) {
        level.push_back({q.arrows[a].source, q.arrows[a].target, {a}, d.arrow_elements[a]});
        all_paths[q.arrows[a].source][q.arrows[a].target].push_back({a});
    }
    std::size_t path_count = level.size();
    struct Chosen {
        int source, target;
        std::size_t max_len;
        std::vector<std::pair<Rational, std::vector<int>>> terms;
    };
    std::vector<Chosen> chosen;
    for (int len = 2; len <= cap; ++len) {
        std::vector<PathRec> next;
        for (const auto& p : level)
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrows[a].source != p.target) continue;
                PathRec r{p.source, q.arrows[a].target, p.arrows, {}};
                r.arrows.push_back(a);
                r.value = d.multiply(p.source, p.target, r.target, p.value, d.arrow_elements[a]);
                next.push_back(std::move(r));
            }
        path_count += next.size();
        if (path_count > path_budget) throw DimensionTooLarge("path enumeration for the endomorphism algebra exceeds the budget");
        level = std::move(next);
        for (auto& p : level) {
            col_index[p.source][p.target].emplace(p.arrows, static_cast<std::uint32_t>(col_value[p.source][p.target].size()));
            col_value[p.source][p.target].push_back(p.value);
            all_paths[p.source][p.target].push_back(p.arrows);
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const auto& cols = col_value[i][j];
                if (cols.empty()) continue;
                Echelon generated(cols.size());
                for (const auto& r : chosen)
                    for (const auto& p : all_paths[i][r.source])
                        for (const auto& s : all_paths[r.target][j]) {
                            if (p.size() + s.size() + r.max_len > static_cast<std::size_t>(len)) continue;
                            Accumulator acc(cols.size());
                            for (const auto& [c, path] : r.terms) {
                                std::vector<int> full = p;
                                full.insert(full.end(), path.begin(), path.end());
                                full.insert(full.end(), s.begin(), s.end());
                                acc.add_entry(col_index[i][j].at(full), c);
                            }
                            auto v = acc.take();
                            if (!v.empty()) generated.insert(v);
                        }
                Echelon eval(d.hom_dims[i][j], cols.size());
                for (std::uint32_t c = 0; c < cols.size(); ++c) {
                    SparseVec ker;
                    if (eval.insert(cols[c], unit_vector(c), &ker) || !generated.insert(ker)) continue;
                    Chosen ch{i, j, 0, {}};
                    for (const auto& e : ker) {
                        std::vector<int> path;
                        for (const auto& [arrows, idx] : col_index[i][j])
                            if (idx == e.idx) path = arrows;
                        ch.max_len = std::max(ch.max_len, path.size());
                        ch.terms.push_back({e.val, std::move(path)});
                    }
                    chosen.push_back(std::move(ch));
                }
            }
    }
    for (const auto& ch : chosen) {
        Relation r;
        for (const auto& [c, arrows] : ch.terms) r.terms.push_back({c, make_path(q, arrows)});
        pres.relations.push_back(std::move(r));
    }
    return d;
}

EndAlgebraData n_apr_tilt(const AlgebraPtr& alg, int n, int vertex) {
    if (vertex < 0 || vertex >= alg->num_vertices()) throw std::invalid_argument("vertex out of range");
    const std::string& vname = alg->quiver().vertices[vertex];
    Representation p = projective_rep(alg, vertex);
    if (p.total_dim() != 1) throw PreconditionFailed("projective at vertex " + vname + " is not simple");
    if (is_injective(p)) throw PreconditionFailed("projective at vertex " + vname + " is injective");
    try {
        global_dimension(alg, n);
    } catch (const AboveCap&) {
        throw PreconditionFailed("global dimension exceeds " + std::to_string(n));
    }
    ExtProfile prof = nu_inverse_profile(p, n);
    for (int i = 1; i < n; ++i)
        if (prof[i] != 0)
            throw PreconditionFailed("Ext^" + std::to_string(i) + "(DΛ, P) is nonzero at vertex " + vname);
    std::vector<Representation> summands;
    for (int u = 0; u < alg->num_vertices(); ++u) summands.push_back(u == vertex ? tau_n_minus(p, n) : projective_rep(alg, u));
    return endomorphism_algebra(summands, alg->quiver().vertices, alg->name() + "_apr" + std::to_string(vertex + 1));
}

GradedDims preprojective_algebra_dims(const AlgebraPtr& alg, int n, int maxdeg) {
    const int nv = alg->num_vertices();
    GradedDims g;
    g.degrees.push_back(alg->cartan());
    std::vector<Representation> cur, first;
    for (int v = 0; v < nv; ++v) cur.push_back(projective_rep(alg, v));
    for (int i = 1; i <= maxdeg; ++i) {
        Matrix m(nv, nv);
        for (int v = 0; v < nv; ++v) {
            NuInverse nu = nu_inverse(cur[v], n, true);
            for (int j = 0; j < n; ++j)
                if (nu.profile[j] != 0)
                    throw StoppedEarly("degree " + std::to_string(i) + " at vertex " + alg->quiver().vertices[v] + " is not a module");
            cur[v] = std::move(*nu.module);
            for (int u = 0; u < nv; ++u) m(u, v) = Rational(static_cast<long>(cur[v].dim(u)));
        }
        if (i == 1) first = cur;
        g.degrees.push_back(std::move(m));
    }
    if (maxdeg < 1) return g;

    const Quiver& q = alg->quiver();
    std::vector<std::vector<ModuleMap>> right(q.num_arrows());
    std::vector<ModuleMap> rho;
    for (int b = 0; b < q.num_arrows(); ++b)
        rho.push_back(tau_n_minus_map(projective_rep(alg, q.arrows[b].source), projective_rep(alg, q.arrows[b].target),
                                      right_multiplication(alg, b), n));
    g.new_arrows.assign(nv, std::vector<std::size_t>(nv, 0));
    for (int u = 0; u < nv; ++u)
        for (int w = 0; w < nv; ++w) {
            std::size_t dim = first[w].dim(u);
            if (dim == 0) continue;
            Echelon e(dim);
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrows[a].source != u) continue;
                const auto& mat = first[w].arrow_map(a);
                for (std::size_t c = 0; c < mat.cols(); ++c)
                    if (!mat.column(c).empty()) e.insert(mat.column(c));
            }
            for (int b = 0; b < q.num_arrows(); ++b) {
                if (q.arrows[b].target != w) continue;
                const auto& mat = rho[b].blocks[u];
                for (std::size_t c = 0; c < mat.cols(); ++c)
                    if (!mat.column(c).empty()) e.insert(mat.column(c));
            }
            g.new_arrows[u][w] = dim - e.rank();
        }
    return g;
}

}  // namespace hart
