#include "hart/quiver.hpp"

#include "hart/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hart {

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i] == name) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].name == name) return i;
    return -1;
}

bool path_less(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return std::make_pair(a.source, a.target) < std::make_pair(b.source, b.target);
}

Path concat(const Quiver& q, const Path& a, const Path& b) {
    (void)q;
    if (a.target != b.source) throw std::invalid_argument("paths do not compose");
    Path p{a.source, b.target, a.arrows};
    p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
    return p;
}

Path make_path(const Quiver& q, const std::vector<int>& arrows) {
    if (arrows.empty()) throw std::invalid_argument("make_path needs at least one arrow");
    for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
        if (q.arrows[arrows[k]].target != q.arrows[arrows[k + 1]].source)
            throw std::invalid_argument("arrows do not compose");
    return Path{q.arrows[arrows.front()].source, q.arrows[arrows.back()].target, arrows};
}

std::string path_str(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertices[p.source];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += ".";
        s += q.arrows[p.arrows[k]].name;
    }
    return s;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || std::string(":.*+-/#").find(c) != std::string::npos)
            return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Relation parse_relation(const Quiver& q, const std::string& body, int line) {
    std::string s;
    for (char c : body)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) parse_fail(line, "empty relation");
    Relation rel;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (!rel.terms.empty()) {
            parse_fail(line, "expected '+' or '-' between terms");
        }
        std::size_t end = s.find_first_of("+-", pos);
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) parse_fail(line, "empty term");
        Rational coeff(1);
        std::string path_text = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            try {
                coeff = Rational::parse(term.substr(0, star));
            } catch (const std::exception&) {
                parse_fail(line, "bad coefficient '" + term.substr(0, star) + "'");
            }
            path_text = term.substr(star + 1);
        }
        if (neg) coeff = -coeff;
        std::vector<int> arrows;
        std::size_t p = 0;
        while (p <= path_text.size()) {
            std::size_t dot = path_text.find('.', p);
            std::string name = path_text.substr(p, dot == std::string::npos ? std::string::npos : dot - p);
            int a = q.arrow_index(name);
            if (a < 0) parse_fail(line, "unknown arrow '" + name + "'");
            arrows.push_back(a);
            if (dot == std::string::npos) break;
            p = dot + 1;
        }
        Path path;
        try {
            path = make_path(q, arrows);
        } catch (const std::exception&) {
            parse_fail(line, "path '" + path_text + "' does not compose");
        }
        rel.terms.push_back({coeff, path});
    }
    return rel;
}

}  // namespace

void validate_presentation(const AlgebraPresentation& p) {
    const Quiver& q = p.quiver;
    std::set<std::string> names;
    for (const auto& v : q.vertices)
        if (!valid_name(v) || !names.insert(v).second) throw ParseError("bad or duplicate vertex name '" + v + "'");
    names.clear();
    for (const auto& a : q.arrows) {
        if (!valid_name(a.name) || !names.insert(a.name).second)
            throw ParseError("bad or duplicate arrow name '" + a.name + "'");
        if (a.source < 0 || a.source >= q.num_vertices() || a.target < 0 || a.target >= q.num_vertices())
            throw UnknownVertex("arrow '" + a.name + "' has an undeclared endpoint");
    }
    for (const auto& r : p.relations) {
        if (r.terms.empty()) throw ParseError("empty relation");
        for (const auto& t : r.terms) {
            if (t.path.length() < 2) throw NotAdmissible("relation term of length < 2: " + path_str(q, t.path));
            if (t.path.source != r.terms[0].path.source || t.path.target != r.terms[0].path.target)
                throw NonParallelRelation("terms " + path_str(q, r.terms[0].path) + " and " + path_str(q, t.path));
        }
    }
}

AlgebraPresentation parse_algebra(const std::string& text) {
    AlgebraPresentation p;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    bool have_name = false, have_vertices = false;
    while (std::getline(is, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (!have_name) {
            auto tok = split_ws(s);
            if (tok.size() != 2 || tok[0] != "algebra") parse_fail(line, "expected 'algebra <name>'");
            p.name = tok[1];
            have_name = true;
            continue;
        }
        if (s.rfind("vertices:", 0) == 0) {
            if (have_vertices) parse_fail(line, "duplicate vertices line");
            for (const auto& v : split_ws(s.substr(9))) {
                if (!valid_name(v)) parse_fail(line, "bad vertex name '" + v + "'");
                if (p.quiver.vertex_index(v) >= 0) parse_fail(line, "duplicate vertex '" + v + "'");
                p.quiver.vertices.push_back(v);
            }
            have_vertices = true;
        } else if (s.rfind("arrow", 0) == 0 && s.size() > 5 && std::isspace(static_cast<unsigned char>(s[5]))) {
            if (!have_vertices) parse_fail(line, "arrow before vertices line");
            auto tok = split_ws(s.substr(5));
            if (tok.size() != 5 || tok[1] != ":" || tok[3] != "->") parse_fail(line, "expected 'arrow <name> : <u> -> <v>'");
            if (!valid_name(tok[0])) parse_fail(line, "bad arrow name '" + tok[0] + "'");
            if (p.quiver.arrow_index(tok[0]) >= 0) parse_fail(line, "duplicate arrow '" + tok[0] + "'");
            int u = p.quiver.vertex_index(tok[2]), v = p.quiver.vertex_index(tok[4]);
            if (u < 0) throw UnknownVertex("line " + std::to_string(line) + ": '" + tok[2] + "'");
            if (v < 0) throw UnknownVertex("line " + std::to_string(line) + ": '" + tok[4] + "'");
            p.quiver.arrows.push_back({tok[0], u, v});
        } else if (s.rfind("relation:", 0) == 0) {
            Relation r = parse_relation(p.quiver, s.substr(9), line);
            for (const auto& t : r.terms) {
                if (t.path.length() < 2)
                    throw NotAdmissible("line " + std::to_string(line) + ": relation term of length < 2");
                if (t.path.source != r.terms[0].path.source || t.path.target != r.terms[0].path.target)
                    throw NonParallelRelation("line " + std::to_string(line));
            }
            p.relations.push_back(std::move(r));
        } else {
            parse_fail(line, "unrecognized line '" + s + "'");
        }
    }
    if (!have_name) throw ParseError("missing 'algebra <name>' line");
    if (!have_vertices) throw ParseError("missing 'vertices:' line");
    return p;
}

AlgebraPresentation load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

std::string print_algebra(const AlgebraPresentation& p) {
    const Quiver& q = p.quiver;
    std::ostringstream os;
    os << "algebra " << p.name << "\n";
    os << "vertices:";
    for (const auto& v : q.vertices) os << " " << v;
    os << "\n";
    for (const auto& a : q.arrows) os << "arrow " << a.name << " : " << q.vertices[a.source] << " -> " << q.vertices[a.target] << "\n";
    for (const auto& r : p.relations) {
        os << "relation:";
        for (std::size_t k = 0; k < r.terms.size(); ++k) {
            const Term& t = r.terms[k];
            if (k == 0) {
                os << " " << t.coeff.str();
            } else {
                os << (t.coeff.sign() < 0 ? " - " : " + ") << (t.coeff.sign() < 0 ? (-t.coeff).str() : t.coeff.str());
            }
            os << "*" << path_str(q, t.path);
        }
        os << "\n";
    }
    return os.str();
}

AlgebraPresentation opposite_algebra(const AlgebraPresentation& p) {
    AlgebraPresentation o;
    const std::string suffix = "_op";
    if (p.name.size() > suffix.size() && p.name.compare(p.name.size() - suffix.size(), suffix.size(), suffix) == 0)
        o.name = p.name.substr(0, p.name.size() - suffix.size());
    else
        o.name = p.name + suffix;
    o.quiver.vertices = p.quiver.vertices;
    for (const auto& a : p.quiver.arrows) o.quiver.arrows.push_back({a.name, a.target, a.source});
    for (const auto& r : p.relations) {
        Relation rr;
        for (const auto& t : r.terms) {
            Path rp{t.path.target, t.path.source, std::vector<int>(t.path.arrows.rbegin(), t.path.arrows.rend())};
            rr.terms.push_back({t.coeff, rp});
        }
        o.relations.push_back(std::move(rr));
    }
    return o;
}

std::size_t AlgebraBasis::total_dim() const {
    std::size_t d = 0;
    for (const auto& row : basis)
        for (const auto& cell : row) d += cell.size();
    return d;
}

SparseVec AlgebraBasis::reduce(const Path& p) const {
    if (p.arrows.empty()) return unit_vector(0);
    if (static_cast<int>(p.arrows.size()) >= vanish_length) return {};
    auto it = expansion.find(p.arrows);
    if (it == expansion.end()) throw std::logic_error("path without recorded expansion");
    return it->second;
}

namespace {

constexpr std::size_t kPathBudget = 4000000;

// Column order inside one (source, target) block: longer first, then
// lexicographically larger first. Pivots then land on long/large paths and the
// surviving (non-pivot) paths are short and lexicographically small.
bool column_before(const Path* a, const Path* b) {
    if (a->arrows.size() != b->arrows.size()) return a->arrows.size() > b->arrows.size();
    return a->arrows > b->arrows;
}

}  // namespace

AlgebraBasis compute_basis(const AlgebraPresentation& p, int length_cap) {
    validate_presentation(p);
    if (length_cap < 1) throw std::invalid_argument("length_cap must be at least 1");
    const Quiver& q = p.quiver;
    const int nv = q.num_vertices();

    std::vector<std::vector<int>> out(nv);
    for (int a = 0; a < q.num_arrows(); ++a) out[q.arrows[a].source].push_back(a);

    // level[l] = all paths of length l; by_target / by_source index them.
    std::vector<std::vector<Path>> level(1);
    for (int v = 0; v < nv; ++v) level[0].push_back(Path::trivial(v));
    std::size_t path_count = level[0].size();

    std::size_t prev_dim = static_cast<std::size_t>(nv);
    for (int L = 1; L <= length_cap; ++L) {
        std::vector<Path> next;
        for (const Path& pa : level[L - 1])
            for (int a : out[pa.target]) {
                Path np{pa.source, q.arrows[a].target, pa.arrows};
                np.arrows.push_back(a);
                next.push_back(std::move(np));
            }
        path_count += next.size();
        if (path_count > kPathBudget)
            throw NotAdmissible("path enumeration exceeded " + std::to_string(kPathBudget) + " paths at length " +
                                std::to_string(L));
        level.push_back(std::move(next));

        // Columns per endpoint pair.
        std::vector<std::vector<const Path*>> cols(static_cast<std::size_t>(nv) * nv);
        for (int l = 0; l <= L; ++l)
            for (const Path& pa : level[l]) cols[pa.source * nv + pa.target].push_back(&pa);
        std::unordered_map<std::vector<int>, std::uint32_t, VecHash> col_of;
        for (auto& c : cols) {
            std::sort(c.begin(), c.end(), column_before);
            for (std::uint32_t k = 0; k < c.size(); ++k)
                if (!c[k]->arrows.empty()) col_of[c[k]->arrows] = k;
        }
        std::vector<Echelon> ech;
        ech.reserve(cols.size());
        for (auto& c : cols) ech.emplace_back(c.size());

        std::vector<std::vector<std::vector<const Path*>>> by_len_target(L + 1, std::vector<std::vector<const Path*>>(nv));
        std::vector<std::vector<std::vector<const Path*>>> by_len_source(L + 1, std::vector<std::vector<const Path*>>(nv));
        for (int l = 0; l <= L; ++l)
            for (const Path& pa : level[l]) {
                by_len_target[l][pa.target].push_back(&pa);
                by_len_source[l][pa.source].push_back(&pa);
            }

        std::vector<int> seq;
        for (const Relation& r : p.relations) {
            int s = r.terms[0].path.source, t = r.terms[0].path.target;
            int m = static_cast<int>(r.terms[0].path.length());
            for (const Term& term : r.terms) m = std::min(m, static_cast<int>(term.path.length()));
            for (int lp = 0; lp + m <= L; ++lp)
                for (const Path* left : by_len_target[lp][s])
                    for (int lq = 0; lp + m + lq <= L; ++lq)
                        for (const Path* right : by_len_source[lq][t]) {
                            SparseVec v;
                            for (const Term& term : r.terms) {
                                int len = lp + static_cast<int>(term.path.length()) + lq;
                                if (len > L) continue;
                                seq = left->arrows;
                                seq.insert(seq.end(), term.path.arrows.begin(), term.path.arrows.end());
                                seq.insert(seq.end(), right->arrows.begin(), right->arrows.end());
                                v.push_back({col_of.at(seq), term.coeff});
                            }
                            std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.idx < b.idx; });
                            SparseVec merged;
                            for (auto& e : v) {
                                if (!merged.empty() && merged.back().idx == e.idx) merged.back().val += e.val;
                                else merged.push_back(e);
                            }
                            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                                        [](const SparseEntry& e) { return e.val.is_zero(); }),
                                         merged.end());
                            if (!merged.empty()) ech[left->source * nv + right->target].insert(merged);
                        }
        }

        std::size_t dim = 0;
        for (std::size_t k = 0; k < cols.size(); ++k) dim += cols[k].size() - ech[k].rank();
        if (dim != prev_dim) {
            prev_dim = dim;
            continue;
        }

        AlgebraBasis b;
        b.num_vertices = nv;
        b.vanish_length = L;
        b.basis.assign(nv, std::vector<std::vector<Path>>(nv));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) {
                const auto& c = cols[i * nv + j];
                Echelon& e = ech[i * nv + j];
                std::vector<std::uint32_t> free = e.free_columns();
                // free columns come in column order (long/large first); basis order is the reverse
                std::vector<std::uint32_t> local(c.size(), 0);
                std::size_t nb = free.size();
                for (std::size_t k = 0; k < nb; ++k) {
                    b.basis[i][j].push_back(*c[free[nb - 1 - k]]);
                    local[free[nb - 1 - k]] = static_cast<std::uint32_t>(k);
                }
                for (const Path& bp : b.basis[i][j]) b.nilpotency = std::max(b.nilpotency, static_cast<int>(bp.length()));
                for (std::uint32_t k = 0; k < c.size(); ++k) {
                    if (c[k]->arrows.empty() || static_cast<int>(c[k]->arrows.size()) >= L) continue;
                    SparseVec rem = e.reduce(unit_vector(k));
                    SparseVec x;
                    for (auto& en : rem) x.push_back({local[en.idx], en.val});
                    std::sort(x.begin(), x.end(), [](const SparseEntry& a, const SparseEntry& b2) { return a.idx < b2.idx; });
                    b.expansion.emplace(c[k]->arrows, std::move(x));
                }
            }
        return b;
    }
    throw NotAdmissible("nonzero path classes survive at length cap " + std::to_string(length_cap));
}

Matrix cartan_matrix(const AlgebraBasis& b) {
    Matrix c(b.num_vertices, b.num_vertices);
    for (int i = 0; i < b.num_vertices; ++i)
        for (int j = 0; j < b.num_vertices; ++j) c(i, j) = Rational(static_cast<long>(b.dim(i, j)));
    return c;
}

CoxeterResult coxeter_matrix(const Matrix& c, int n) {
    Matrix phi = c.transpose() * inverse(c);
    if (n % 2 != 0) phi = phi * Rational(-1);
    return {phi, inverse(phi)};
}

}  // namespace hart
