#pragma once

#include "hart/algebra.hpp"
#include "hart/sparse.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hart {

// Finite-dimensional left module. Arrow a: u -> v acts X_v -> X_u, so its
// matrix has shape dims(u) x dims(v) and the path a1.a2...ak acts as
// M_a1 * M_a2 * ... * M_ak.
class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<SparseMatrix> maps, bool check = true);

    static Representation zero(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(int v) const { return dims_[v]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    std::vector<long> dimvec() const { return std::vector<long>(dims_.begin(), dims_.end()); }

    const SparseMatrix& arrow_map(int a) const { return maps_[a]; }
    const std::vector<SparseMatrix>& arrow_maps() const { return maps_; }

    // Action of basis element b of e_iΛe_j: X_j -> X_i.
    const SparseMatrix& path_map(int i, int j, std::uint32_t b) const;
    // X(λ) x for λ in e_iΛe_j and x in X_j.
    SparseVec act(int i, int j, const SparseVec& lambda, const SparseVec& x) const;

    // Throws std::logic_error unless shapes match and every relation acts as zero.
    void check() const;

private:
    struct PathCache {
        std::once_flag once;
        std::vector<std::vector<std::vector<SparseMatrix>>> maps;
    };
    void build_paths() const;

    AlgebraPtr alg_;
    std::vector<std::size_t> dims_;
    std::vector<SparseMatrix> maps_;
    std::shared_ptr<PathCache> paths_;
};

// blocks[v]: X_v -> Y_v, shape dims_Y(v) x dims_X(v).
struct ModuleMap {
    std::vector<SparseMatrix> blocks;
};

bool is_module_map(const Representation& x, const Representation& y, const ModuleMap& f);
// g ∘ f
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
ModuleMap identity_map(const Representation& x);
ModuleMap zero_map(const Representation& x, const Representation& y);
ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coeffs,
                             const Representation& x, const Representation& y);
bool is_zero_map(const ModuleMap& f);

// JSON text: {"dims": [...], "arrows": {"a": [["p/q", ...], ...]}}
std::string representation_json(const Representation& x);

}  // namespace hart
