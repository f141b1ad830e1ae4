#include "hart/atilde.hpp"

#include "hart/algebra.hpp"
#include "hart/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hart {

LatticeVector alpha(int n, int i) {
    LatticeVector v(n, 0);
    if (i == 0)
        std::fill(v.begin(), v.end(), -1);
    else
        v[i - 1] = 1;
    return v;
}

std::vector<long> e_coordinates(const LatticeVector& m) {
    const int n = static_cast<int>(m.size());
    std::vector<long> e(n + 1, 0);
    if (n == 0) return e;
    e[0] = -m[0];
    for (int j = 1; j < n; ++j) e[j] = m[j - 1] - m[j];
    e[n] = m[n - 1];
    return e;
}

LatticeVector from_e_coordinates(const std::vector<long>& e) {
    const int n = static_cast<int>(e.size()) - 1;
    LatticeVector m(n, 0);
    long acc = 0;
    for (int j = n; j >= 1; --j) {
        acc += e[j];
        m[j - 1] = acc;
    }
    return m;
}

long omega(const LatticeVector& v) {
    const long mod = static_cast<long>(v.size()) + 1;
    long s = std::accumulate(v.begin(), v.end(), 0L);
    return ((s % mod) + mod) % mod;
}

namespace {

LatticeVector add(const LatticeVector& a, const LatticeVector& b, long c = 1) {
    LatticeVector r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += c * b[k];
    return r;
}

// Linear map swapping α_a and α_b.
LatticeVector swap_alphas(const LatticeVector& v, int a, int b) {
    const int n = static_cast<int>(v.size());
    std::vector<long> c(n + 1, 0);
    for (int k = 1; k <= n; ++k) c[k] = v[k - 1];
    std::swap(c[a], c[b]);
    LatticeVector out(n);
    for (int k = 1; k <= n; ++k) out[k - 1] = c[k] - c[0];
    return out;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw DimensionTooLarge("lattice coordinate out of range");
    return z.get_si();
}

}  // namespace

SubgroupBasis::SubgroupBasis(int n, IntMatrix generators, std::size_t max_index) : n_(n), gens_(std::move(generators)) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (gens_.rows() != static_cast<std::size_t>(n)) throw std::invalid_argument("generators must have n rows");
    if (gens_.cols() < static_cast<std::size_t>(n)) throw NotCofinite("fewer than n generators");
    SmithResult snf = smith_normal_form(gens_);
    u_ = snf.u;
    mpz_class index = 1;
    for (int t = 0; t < n; ++t) {
        mpz_class d = abs(snf.diagonal[t]);
        if (d == 0) throw NotCofinite("subgroup has rank below n");
        index *= d;
        if (index > max_index) throw DimensionTooLarge("subgroup index exceeds " + std::to_string(max_index));
        moduli_.push_back(d.get_si());
    }
    key_to_coset_.assign(index.get_ui(), -1);
    LatticeVector zero(n, 0);
    key_to_coset_[key(zero)] = 0;
    reps_.push_back(zero);
    for (std::size_t head = 0; head < reps_.size(); ++head)
        for (int i = 0; i <= n; ++i) {
            LatticeVector w = add(reps_[head], alpha(n, i));
            std::size_t k = key(w);
            if (key_to_coset_[k] >= 0) continue;
            key_to_coset_[k] = static_cast<long>(reps_.size());
            reps_.push_back(std::move(w));
        }
}

SubgroupBasis SubgroupBasis::ker_omega(int n) {
    IntMatrix g(n, n);
    g(0, 0) = n + 1;
    for (int k = 1; k < n; ++k) {
        g(k, k) = 1;
        g(0, k) = -1;
    }
    return SubgroupBasis(n, g);
}

SubgroupBasis SubgroupBasis::scaled_lattice(int n, long k) {
    IntMatrix g(n, n);
    for (int t = 0; t < n; ++t) g(t, t) = k;
    return SubgroupBasis(n, g);
}

SubgroupBasis SubgroupBasis::parse(int n, const std::string& spec) {
    if (spec == "ker-omega") return ker_omega(n);
    std::vector<std::vector<long>> cols;
    std::stringstream outer(spec);
    std::string part;
    while (std::getline(outer, part, ';')) {
        std::replace(part.begin(), part.end(), ',', ' ');
        std::stringstream inner(part);
        std::vector<long> col;
        long x;
        while (inner >> x) col.push_back(x);
        if (!inner.eof()) throw ParseError("bad subgroup generator '" + part + "'");
        if (col.empty()) continue;
        if (col.size() != static_cast<std::size_t>(n))
            throw ParseError("subgroup generator '" + part + "' needs " + std::to_string(n) + " entries");
        cols.push_back(std::move(col));
    }
    IntMatrix g(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < n; ++r) g(r, c) = cols[c][r];
    return SubgroupBasis(n, g);
}

std::size_t SubgroupBasis::key(const LatticeVector& v) const {
    std::size_t k = 0;
    for (int t = n_ - 1; t >= 0; --t) {
        mpz_class w = 0;
        for (int j = 0; j < n_; ++j) w += u_(t, j) * v[j];
        mpz_class r = w % moduli_[t];
        if (r < 0) r += moduli_[t];
        k = k * static_cast<std::size_t>(moduli_[t]) + r.get_ui();
    }
    return k;
}

std::size_t SubgroupBasis::coset(const LatticeVector& v) const { return static_cast<std::size_t>(key_to_coset_[key(v)]); }

bool SubgroupBasis::contains(const LatticeVector& v) const { return key(v) == 0; }

OrbitQuiverWithCut orbit_quiver(const SubgroupBasis& b) {
    OrbitQuiverWithCut q;
    q.subgroup = b;
    const int n = b.n();
    q.target.assign(b.index(), std::vector<std::size_t>(n + 1));
    q.cut.assign(b.index(), std::vector<char>(n + 1, 0));
    for (std::size_t c = 0; c < b.index(); ++c)
        for (int i = 0; i <= n; ++i) q.target[c][i] = b.coset(add(b.representative(c), alpha(n, i)));
    return q;
}

OrbitQuiverWithCut cut_from_omega(const SubgroupBasis& b, long k) {
    const int n = b.n();
    const IntMatrix& g = b.generators();
    for (std::size_t c = 0; c < g.cols(); ++c) {
        LatticeVector col(n);
        for (int r = 0; r < n; ++r) col[r] = to_long(g(r, c));
        if (omega(col) != 0) throw OmegaNotConstantOnB("generator " + std::to_string(c + 1) + " has nonzero ω");
    }
    const long mod = n + 1;
    k = ((k % mod) + mod) % mod;
    OrbitQuiverWithCut q = orbit_quiver(b);
    for (std::size_t c = 0; c < q.num_vertices(); ++c)
        if (omega(b.representative(c)) == k) std::fill(q.cut[c].begin(), q.cut[c].end(), 1);
    return q;
}

CutValidation validate_cut(const OrbitQuiverWithCut& q, std::size_t budget) {
    const int n = q.n();
    std::size_t perms = 1;
    for (int k = 2; k <= n + 1; ++k) perms *= static_cast<std::size_t>(k);
    if (perms > budget / std::max<std::size_t>(1, q.num_vertices()))
        throw DimensionTooLarge("small cycle enumeration exceeds the budget");
    CutValidation out;
    out.valid = true;
    for (std::size_t c = 0; c < q.num_vertices() && out.valid; ++c) {
        std::vector<int> order(n + 1);
        std::iota(order.begin(), order.end(), 0);
        do {
            std::size_t v = c;
            int deg = 0;
            for (int i : order) {
                deg += q.cut[v][i];
                v = q.target[v][i];
            }
            if (deg != 1) {
                out.valid = false;
                out.witness = SmallCycle{c, order, deg};
                break;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    out.homogeneous = true;
    for (std::size_t c = 0; c < q.num_vertices(); ++c)
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (q.cut[c][i] + q.cut[q.target[c][i]][j] != q.cut[c][j] + q.cut[q.target[c][j]][i]) out.homogeneous = false;
    return out;
}

namespace {

// Kahn's algorithm on the degree-0 subquiver; empty optional on a cycle.
std::optional<std::vector<std::size_t>> topological(const OrbitQuiverWithCut& q) {
    const std::size_t nv = q.num_vertices();
    std::vector<std::size_t> indeg(nv, 0);
    for (std::size_t c = 0; c < nv; ++c)
        for (int i = 0; i <= q.n(); ++i)
            if (!q.cut[c][i]) ++indeg[q.target[c][i]];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t c = 0; c < nv; ++c)
        if (indeg[c] == 0) ready.push(c);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t c = ready.top();
        ready.pop();
        order.push_back(c);
        for (int i = 0; i <= q.n(); ++i)
            if (!q.cut[c][i] && --indeg[q.target[c][i]] == 0) ready.push(q.target[c][i]);
    }
    if (order.size() != nv) return std::nullopt;
    return order;
}

}  // namespace

BoundingReport is_bounding(const OrbitQuiverWithCut& q) {
    BoundingReport r;
    auto order = topological(q);
    if (!order) return r;
    r.bounding = true;
    std::vector<int> longest(q.num_vertices(), 0);
    for (std::size_t c : *order)
        for (int i = 0; i <= q.n(); ++i)
            if (!q.cut[c][i]) {
                auto t = q.target[c][i];
                longest[t] = std::max(longest[t], longest[c] + 1);
                r.longest_path = std::max(r.longest_path, longest[t]);
            }
    return r;
}

std::vector<std::size_t> degree_zero_order(const OrbitQuiverWithCut& q) {
    auto order = topological(q);
    if (!order) throw NotBounding("the degree-0 subquiver has a cycle");
    return *order;
}

AlgebraPresentation degree_zero_algebra(const OrbitQuiverWithCut& q, const std::string& name) {
    const int n = q.n();
    auto order = degree_zero_order(q);
    std::vector<std::size_t> pos(q.num_vertices());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    AlgebraPresentation p;
    p.name = name;
    for (std::size_t k = 0; k < order.size(); ++k) p.quiver.vertices.push_back(std::to_string(k + 1));
    std::vector<std::vector<int>> id(q.num_vertices(), std::vector<int>(n + 1, -1));
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int i = 0; i <= n; ++i) {
            std::size_t c = order[k];
            if (q.cut[c][i]) continue;
            id[c][i] = p.quiver.num_arrows();
            p.quiver.arrows.push_back({"a" + std::to_string(k + 1) + "_" + std::to_string(i), static_cast<int>(k),
                                       static_cast<int>(pos[q.target[c][i]])});
        }
    for (std::size_t c : order)
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                int x1 = id[c][i], y1 = id[q.target[c][i]][j];
                int x2 = id[c][j], y2 = id[q.target[c][j]][i];
                if (x1 < 0 || y1 < 0 || x2 < 0 || y2 < 0) continue;
                Relation r;
                r.terms.push_back({Rational(1), make_path(p.quiver, {x1, y1})});
                r.terms.push_back({Rational(-1), make_path(p.quiver, {x2, y2})});
                p.relations.push_back(std::move(r));
            }
    return p;
}

std::vector<Matrix> graded_orbit_dims(const OrbitQuiverWithCut& q, int maxdeg) {
    const int n = q.n();
    BoundingReport b = is_bounding(q);
    if (!b.bounding) throw NotBounding("the degree-0 subquiver has a cycle");
    const std::size_t nv = q.num_vertices();
    const int max_len = (maxdeg + 1) * b.longest_path + maxdeg;
    std::vector<Matrix> counts(maxdeg + 1, Matrix(nv, nv));
    std::vector<int> c(n + 1, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n) {
            c[n] = 0;
            for (int last = 0; last <= left; ++last) {
                c[n] = last;
                for (std::size_t u = 0; u < nv; ++u) {
                    std::size_t v = u;
                    int deg = 0;
                    for (int i = 0; i <= n && deg <= maxdeg; ++i)
                        for (int t = 0; t < c[i]; ++t) {
                            deg += q.cut[v][i];
                            v = q.target[v][i];
                        }
                    if (deg <= maxdeg) counts[deg](u, v) = counts[deg](u, v) + Rational(1);
                }
            }
            return;
        }
        for (int x = 0; x <= left; ++x) {
            c[k] = x;
            rec(k + 1, left - x);
        }
    };
    rec(0, max_len);
    return counts;
}

std::vector<LatticeVector> simplex_points(int n, long s) {
    std::vector<LatticeVector> out;
    std::vector<long> e(n + 1, 0);
    std::function<void(int, long)> rec = [&](int k, long left) {
        if (k == n) {
            e[n] = -(s - left);
            out.push_back(from_e_coordinates(e));
            return;
        }
        for (long x = 0; x <= left; ++x) {
            e[k] = x;
            rec(k + 1, left - x);
        }
    };
    rec(0, s);
    return out;
}

RestrictedCut parse_restricted_cut(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("restricted cut: ") + e.what());
    }
    RestrictedCut rc;
    try {
        rc.n = j.at("n").get<int>();
        rc.s = j.at("s").get<long>();
        for (const auto& a : j.at("cut")) {
            auto e = a.at("e").get<std::vector<long>>();
            int i = a.at("arrow").get<int>();
            if (static_cast<int>(e.size()) != rc.n + 1 || std::accumulate(e.begin(), e.end(), 0L) != 0)
                throw InvalidRestrictedCut("e-coordinates must have n+1 entries summing to 0");
            if (i < 0 || i > rc.n) throw InvalidRestrictedCut("arrow index out of range");
            rc.arrows.push_back({from_e_coordinates(e), i});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("restricted cut: ") + e.what());
    }
    return rc;
}

namespace {

bool in_simplex(const LatticeVector& v, long s) {
    auto e = e_coordinates(v);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (e[i] < 0) return false;
    return e[n] >= -s;
}

std::string e_str(const LatticeVector& v) {
    std::string out = "(";
    auto e = e_coordinates(v);
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
    return out + ")";
}

// Degree-0 part of Γ restricted to a finite vertex set; next(v, i) gives the
// target index or -1 outside the set.
AlgebraPresentation restricted_presentation(std::size_t nv, int n, const std::function<long(std::size_t, int)>& next,
                                            const std::function<bool(std::size_t, int)>& is_cut,
                                            const std::string& name) {
    AlgebraPresentation p;
    p.name = name;
    for (std::size_t v = 0; v < nv; ++v) p.quiver.vertices.push_back("v" + std::to_string(v + 1));
    std::vector<std::vector<int>> id(nv, std::vector<int>(n + 1, -1));
    for (std::size_t v = 0; v < nv; ++v)
        for (int i = 0; i <= n; ++i) {
            long t = next(v, i);
            if (t < 0 || is_cut(v, i)) continue;
            id[v][i] = p.quiver.num_arrows();
            p.quiver.arrows.push_back({"b" + std::to_string(v + 1) + "_" + std::to_string(i), static_cast<int>(v), static_cast<int>(t)});
        }
    auto route = [&](std::size_t v, int i, int j) -> std::vector<int> {
        int x = id[v][i];
        if (x < 0) return {};
        int y = id[static_cast<std::size_t>(next(v, i))][j];
        if (y < 0) return {};
        return {x, y};
    };
    for (std::size_t v = 0; v < nv; ++v)
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto r1 = route(v, i, j), r2 = route(v, j, i);
                Relation r;
                if (!r1.empty()) r.terms.push_back({Rational(1), make_path(p.quiver, r1)});
                if (!r2.empty()) r.terms.push_back({Rational(-1), make_path(p.quiver, r2)});
                if (!r.terms.empty()) p.relations.push_back(std::move(r));
            }
    return p;
}

}  // namespace

void validate_restricted_cut(const RestrictedCut& rc) {
    if (rc.n < 1 || rc.s < 1) throw InvalidRestrictedCut("need n >= 1 and s >= 1");
    const int n = rc.n;
    std::set<std::pair<LatticeVector, int>> cut;
    for (const auto& a : rc.arrows) {
        if (static_cast<int>(a.first.size()) != n || a.second < 0 || a.second > n)
            throw InvalidRestrictedCut("malformed arrow");
        if (!in_simplex(a.first, rc.s) || !in_simplex(add(a.first, alpha(n, a.second)), rc.s))
            throw InvalidRestrictedCut("arrow a" + std::to_string(a.second) + " at " + e_str(a.first) + " leaves the simplex");
        if (!cut.insert(a).second) throw InvalidRestrictedCut("duplicate arrow at " + e_str(a.first));
    }
    for (const auto& v : simplex_points(n, rc.s)) {
        std::vector<int> order(n + 1);
        std::iota(order.begin(), order.end(), 0);
        do {
            LatticeVector w = v;
            int deg = 0;
            bool inside = true;
            for (int i : order) {
                deg += cut.count({w, i}) ? 1 : 0;
                w = add(w, alpha(n, i));
                if (!in_simplex(w, rc.s)) {
                    inside = false;
                    break;
                }
            }
            if (inside && deg != 1) {
                std::string ord;
                for (int i : order) ord += std::to_string(i);
                throw InvalidRestrictedCut("small cycle " + ord + " at " + e_str(v) + " has " + std::to_string(deg) + " cut arrows");
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

AlgebraPresentation restricted_algebra(const RestrictedCut& rc, const std::string& name) {
    const int n = rc.n;
    auto pts = simplex_points(n, rc.s);
    std::map<LatticeVector, long> index;
    for (std::size_t k = 0; k < pts.size(); ++k) index[pts[k]] = static_cast<long>(k);
    std::set<std::pair<LatticeVector, int>> cut(rc.arrows.begin(), rc.arrows.end());
    return restricted_presentation(
        pts.size(), n,
        [&](std::size_t v, int i) {
            auto it = index.find(add(pts[v], alpha(n, i)));
            return it == index.end() ? -1L : it->second;
        },
        [&](std::size_t v, int i) { return cut.count({pts[v], i}) > 0; }, name);
}

namespace {

// Quotient of (Γ/B)_C by the idempotents outside the cosets of L°.
AlgebraPresentation quotient_presentation(const OrbitQuiverWithCut& q, const std::vector<LatticeVector>& pts,
                                          std::vector<std::size_t>& cosets) {
    cosets.clear();
    std::map<std::size_t, long> index;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        cosets.push_back(q.subgroup.coset(pts[k]));
        index.emplace(cosets.back(), static_cast<long>(k));
    }
    return restricted_presentation(
        pts.size(), q.n(),
        [&](std::size_t v, int i) {
            auto it = index.find(q.target[cosets[v]][i]);
            return it == index.end() ? -1L : it->second;
        },
        [&](std::size_t v, int i) { return q.cut[cosets[v]][i] != 0; }, "quotient");
}

bool separated(const SubgroupBasis& b, const std::vector<LatticeVector>& pts, long s) {
    const int n = b.n();
    std::set<std::size_t> cosets;
    for (const auto& p : pts) cosets.insert(b.coset(p));
    if (cosets.size() != pts.size()) return false;
    for (const auto& p : pts)
        for (int i = 0; i <= n; ++i) {
            LatticeVector t = add(p, alpha(n, i));
            if (!in_simplex(t, s) && cosets.count(b.coset(t))) return false;
        }
    return true;
}

}  // namespace

OrbitQuiverWithCut restricted_cut_extend(const RestrictedCut& rc, std::size_t budget) {
    validate_restricted_cut(rc);
    const int n = rc.n;
    auto pts = simplex_points(n, rc.s);
    SubgroupBasis b;
    for (long m = 1;; ++m) {
        long k = m * rc.s * (n + 1);
        double idx = std::pow(static_cast<double>(k), n);
        if (idx * (n + 1) > static_cast<double>(budget)) throw DimensionTooLarge("orbit quiver exceeds the budget");
        b = SubgroupBasis::scaled_lattice(n, k);
        if (separated(b, pts, rc.s)) break;
    }
    OrbitQuiverWithCut q = orbit_quiver(b);
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<char> seen(q.num_vertices() * width, 0);
    std::deque<std::size_t> queue;
    auto visit = [&](const LatticeVector& v, int i) {
        std::size_t id = b.coset(v) * width + static_cast<std::size_t>(i);
        if (seen[id]) return;
        seen[id] = 1;
        queue.push_back(id);
    };
    for (const auto& a : rc.arrows) visit(a.first, a.second);
    while (!queue.empty()) {
        std::size_t id = queue.front();
        queue.pop_front();
        const LatticeVector& v = b.representative(id / width);
        const int i = static_cast<int>(id % width);
        for (int t = 0; t <= n; ++t) {
            int u = (t + 1) % (n + 1);
            int j = i == t ? u : (i == u ? t : i);
            visit(swap_alphas(v, t, u), j);
            visit(add(v, add(alpha(n, t), alpha(n, u), -1), rc.s), i);
        }
    }
    for (std::size_t c = 0; c < q.num_vertices(); ++c)
        for (std::size_t i = 0; i < width; ++i) q.cut[c][i] = seen[c * width + i];
    return q;
}

bool idempotent_quotient_check(const OrbitQuiverWithCut& q, const RestrictedCut& rc) {
    auto pts = simplex_points(rc.n, rc.s);
    std::vector<std::size_t> cosets;
    AlgebraPresentation lhs = quotient_presentation(q, pts, cosets);
    if (std::set<std::size_t>(cosets.begin(), cosets.end()).size() != pts.size()) return false;
    AlgebraPresentation rhs = restricted_algebra(rc);
    auto pairs = [](const Quiver& qq) {
        std::map<std::pair<int, int>, int> m;
        for (const auto& a : qq.arrows) ++m[{a.source, a.target}];
        return m;
    };
    if (lhs.quiver.num_vertices() != rhs.quiver.num_vertices() || pairs(lhs.quiver) != pairs(rhs.quiver)) return false;
    try {
        return Algebra::create(lhs)->total_dim() == Algebra::create(rhs)->total_dim();
    } catch (const Error&) {
        return false;
    }
}

std::string orbit_quiver_dot(const OrbitQuiverWithCut& q) {
    std::ostringstream out;
    out << "digraph Q {\n";
    for (std::size_t c = 0; c < q.num_vertices(); ++c)
        out << "  c" << c << " [label=\"" << c << "\\n" << e_str(q.subgroup.representative(c)) << "\"];\n";
    for (std::size_t c = 0; c < q.num_vertices(); ++c)
        for (int i = 0; i <= q.n(); ++i) {
            out << "  c" << c << " -> c" << q.target[c][i] << " [label=\"a" << i << "\"";
            if (q.cut[c][i]) out << ", style=bold";
            out << "];\n";
        }
    out << "}\n";
    return out.str();
}

std::string cut_json(const OrbitQuiverWithCut& q) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t c = 0; c < q.num_vertices(); ++c)
        for (int i = 0; i <= q.n(); ++i)
            if (q.cut[c][i]) j.push_back({c, i});
    return j.dump();
}

OrbitQuiverWithCut cut_from_json(const SubgroupBasis& b, const std::string& json_text) {
    OrbitQuiverWithCut q = orbit_quiver(b);
    try {
        for (const auto& a : nlohmann::json::parse(json_text)) {
            auto c = a.at(0).get<std::size_t>();
            auto i = a.at(1).get<int>();
            if (c >= q.num_vertices() || i < 0 || i > b.n()) throw ParseError("cut arrow out of range");
            q.cut[c][i] = 1;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cut: ") + e.what());
    }
    return q;
}

}  // namespace hart
