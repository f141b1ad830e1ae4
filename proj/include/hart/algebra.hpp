#pragma once

#include "hart/quiver.hpp"
#include "hart/sparse.hpp"

#include <memory>
#include <mutex>

namespace hart {

struct HomologicalCache;

// A presentation together with its certified basis, structure constants and
// arrow multiplication tables. Shared and immutable apart from internal memo
// tables, which are guarded.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static std::shared_ptr<const Algebra> create(AlgebraPresentation p, int length_cap = 64);
    ~Algebra();

    const AlgebraPresentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver; }
    const AlgebraBasis& basis() const { return basis_; }
    const std::string& name() const { return pres_.name; }
    int num_vertices() const { return pres_.quiver.num_vertices(); }
    int num_arrows() const { return pres_.quiver.num_arrows(); }
    std::size_t dim(int i, int j) const { return basis_.dim(i, j); }
    std::size_t total_dim() const { return basis_.total_dim(); }
    const Matrix& cartan() const { return cartan_; }
    int length_cap() const { return length_cap_; }

    // Product of basis element a of e_iΛe_j with basis element b of e_jΛe_k.
    const SparseVec& basis_product(int i, int j, int k, std::uint32_t a, std::uint32_t b) const;
    SparseVec multiply(int i, int j, int k, const SparseVec& x, const SparseVec& y) const;
    // Coordinates of arrow a in e_sΛe_t.
    const SparseVec& arrow_element(int a) const { return arrow_elem_[a]; }

    // For arrow a: i -> j, left multiplication e_jΛe_w -> e_iΛe_w.
    const SparseMatrix& left_arrow(int a, int w) const { return left_[a][w]; }
    // For arrow b: s -> t, right multiplication e_wΛe_s -> e_wΛe_t.
    const SparseMatrix& right_arrow(int b, int w) const { return right_[b][w]; }

    // Λ^op; opposite()->opposite() is this object.
    std::shared_ptr<const Algebra> opposite() const;

    HomologicalCache& cache() const { return *cache_; }

private:
    Algebra() = default;

    AlgebraPresentation pres_;
    AlgebraBasis basis_;
    Matrix cartan_;
    int length_cap_ = 64;
    // products_[(i*nv + j)*nv + k][a * dim(j,k) + b]
    std::vector<std::vector<SparseVec>> products_;
    std::vector<SparseVec> arrow_elem_;
    std::vector<std::vector<SparseMatrix>> left_, right_;

    mutable std::mutex op_mutex_;
    mutable std::shared_ptr<const Algebra> op_strong_;
    mutable std::weak_ptr<const Algebra> op_weak_;
    std::unique_ptr<HomologicalCache> cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace hart
