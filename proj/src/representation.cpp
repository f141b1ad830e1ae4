#include "hart/representation.hpp"

#include "json.hpp"

#include <numeric>
#include <stdexcept>

namespace hart {

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<SparseMatrix> maps, bool check_now)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)), paths_(std::make_shared<PathCache>()) {
    if (check_now) check();
}

Representation Representation::zero(AlgebraPtr alg) {
    std::vector<std::size_t> dims(alg->num_vertices(), 0);
    std::vector<SparseMatrix> maps(alg->num_arrows());
    return Representation(std::move(alg), std::move(dims), std::move(maps), false);
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

void Representation::check() const {
    const Quiver& q = alg_->quiver();
    if (static_cast<int>(dims_.size()) != q.num_vertices()) throw std::logic_error("dimension vector has wrong length");
    if (static_cast<int>(maps_.size()) != q.num_arrows()) throw std::logic_error("wrong number of arrow maps");
    for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& m = maps_[a];
        if (m.rows() != dims_[q.arrows[a].source] || m.cols() != dims_[q.arrows[a].target])
            throw std::logic_error("arrow map for '" + q.arrows[a].name + "' has wrong shape");
    }
    for (const auto& r : alg_->presentation().relations) {
        int s = r.terms[0].path.source, t = r.terms[0].path.target;
        SparseMatrix sum(dims_[s], dims_[t]);
        for (const auto& term : r.terms) {
            SparseMatrix m = maps_[term.path.arrows[0]];
            for (std::size_t k = 1; k < term.path.arrows.size(); ++k) m = m * maps_[term.path.arrows[k]];
            sum = sum + m.scaled(term.coeff);
        }
        if (!sum.is_zero()) throw std::logic_error("representation violates a relation");
    }
}

void Representation::build_paths() const {
    std::call_once(paths_->once, [this] {
        const auto& B = alg_->basis();
        int nv = alg_->num_vertices();
        paths_->maps.assign(nv, std::vector<std::vector<SparseMatrix>>(nv));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j)
                for (const Path& p : B.basis[i][j]) {
                    if (p.arrows.empty()) {
                        paths_->maps[i][j].push_back(SparseMatrix::identity(dims_[i]));
                        continue;
                    }
                    SparseMatrix m = maps_[p.arrows[0]];
                    for (std::size_t k = 1; k < p.arrows.size(); ++k) m = m * maps_[p.arrows[k]];
                    paths_->maps[i][j].push_back(std::move(m));
                }
    });
}

const SparseMatrix& Representation::path_map(int i, int j, std::uint32_t b) const {
    build_paths();
    return paths_->maps[i][j][b];
}

SparseVec Representation::act(int i, int j, const SparseVec& lambda, const SparseVec& x) const {
    if (lambda.empty() || x.empty()) return {};
    build_paths();
    if (lambda.size() == 1) return sparse_scale(paths_->maps[i][j][lambda[0].idx].apply(x), lambda[0].val);
    Accumulator acc(dims_[i]);
    for (const auto& e : lambda) acc.add(paths_->maps[i][j][e.idx].apply(x), e.val);
    return acc.take();
}

bool is_module_map(const Representation& x, const Representation& y, const ModuleMap& f) {
    const Quiver& q = x.algebra()->quiver();
    if (static_cast<int>(f.blocks.size()) != q.num_vertices()) return false;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (f.blocks[v].rows() != y.dim(v) || f.blocks[v].cols() != x.dim(v)) return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, v = q.arrows[a].target;
        if (!(f.blocks[u] * x.arrow_map(a) == y.arrow_map(a) * f.blocks[v])) return false;
    }
    return true;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

ModuleMap identity_map(const Representation& x) {
    ModuleMap f;
    for (auto d : x.dims()) f.blocks.push_back(SparseMatrix::identity(d));
    return f;
}

ModuleMap zero_map(const Representation& x, const Representation& y) {
    ModuleMap f;
    for (std::size_t v = 0; v < x.dims().size(); ++v) f.blocks.emplace_back(y.dim(v), x.dim(v));
    return f;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coeffs,
                             const Representation& x, const Representation& y) {
    ModuleMap f = zero_map(x, y);
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        for (std::size_t v = 0; v < f.blocks.size(); ++v) f.blocks[v] = f.blocks[v] + maps[k].blocks[v].scaled(coeffs[k]);
    }
    return f;
}

bool is_zero_map(const ModuleMap& f) {
    for (const auto& b : f.blocks)
        if (!b.is_zero()) return false;
    return true;
}

std::string representation_json(const Representation& x) {
    nlohmann::ordered_json j;
    j["dims"] = x.dims();
    nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
    const Quiver& q = x.algebra()->quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
        Matrix d = x.arrow_map(a).to_dense();
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c).str());
            rows.push_back(row);
        }
        arrows[q.arrows[a].name] = rows;
    }
    j["arrows"] = arrows;
    return j.dump();
}

}  // namespace hart
