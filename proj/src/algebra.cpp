#include "hart/algebra.hpp"

#include "hart/errors.hpp"
#include "homological_cache.hpp"

namespace hart {

Algebra::~Algebra() = default;

std::shared_ptr<const Algebra> Algebra::create(AlgebraPresentation p, int length_cap) {
    std::shared_ptr<Algebra> a(new Algebra());
    a->basis_ = compute_basis(p, length_cap);
    a->pres_ = std::move(p);
    a->length_cap_ = length_cap;
    a->cartan_ = cartan_matrix(a->basis_);
    a->cache_ = std::make_unique<HomologicalCache>();

    const int nv = a->num_vertices();
    const auto& B = a->basis_;
    const Quiver& q = a->pres_.quiver;
    a->products_.assign(static_cast<std::size_t>(nv) * nv * nv, {});
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            for (int k = 0; k < nv; ++k) {
                auto& tab = a->products_[(static_cast<std::size_t>(i) * nv + j) * nv + k];
                std::size_t dij = B.dim(i, j), djk = B.dim(j, k);
                tab.resize(dij * djk);
                for (std::size_t x = 0; x < dij; ++x)
                    for (std::size_t y = 0; y < djk; ++y)
                        tab[x * djk + y] = B.reduce(concat(q, B.basis[i][j][x], B.basis[j][k][y]));
            }

    for (int ar = 0; ar < q.num_arrows(); ++ar) a->arrow_elem_.push_back(B.reduce(make_path(q, {ar})));

    a->left_.assign(q.num_arrows(), std::vector<SparseMatrix>(nv));
    a->right_.assign(q.num_arrows(), std::vector<SparseMatrix>(nv));
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].source, t = q.arrows[ar].target;
        for (int w = 0; w < nv; ++w) {
            SparseMatrix L(B.dim(s, w), B.dim(t, w));
            for (std::uint32_t y = 0; y < B.dim(t, w); ++y)
                L.set_column(y, a->multiply(s, t, w, a->arrow_elem_[ar], unit_vector(y)));
            a->left_[ar][w] = std::move(L);
            SparseMatrix R(B.dim(w, t), B.dim(w, s));
            for (std::uint32_t x = 0; x < B.dim(w, s); ++x)
                R.set_column(x, a->multiply(w, s, t, unit_vector(x), a->arrow_elem_[ar]));
            a->right_[ar][w] = std::move(R);
        }
    }
    return a;
}

const SparseVec& Algebra::basis_product(int i, int j, int k, std::uint32_t a, std::uint32_t b) const {
    const int nv = num_vertices();
    return products_[(static_cast<std::size_t>(i) * nv + j) * nv + k][a * basis_.dim(j, k) + b];
}

SparseVec Algebra::multiply(int i, int j, int k, const SparseVec& x, const SparseVec& y) const {
    if (x.empty() || y.empty()) return {};
    if (x.size() == 1 && y.size() == 1) return sparse_scale(basis_product(i, j, k, x[0].idx, y[0].idx), x[0].val * y[0].val);
    Accumulator acc(basis_.dim(i, k));
    for (const auto& ex : x)
        for (const auto& ey : y) acc.add(basis_product(i, j, k, ex.idx, ey.idx), ex.val * ey.val);
    return acc.take();
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (op_strong_) return op_strong_;
    if (auto w = op_weak_.lock()) return w;
    auto op = create(opposite_algebra(pres_), length_cap_);
    {
        std::lock_guard<std::mutex> lock2(op->op_mutex_);
        op->op_weak_ = shared_from_this();
    }
    op_strong_ = op;
    return op;
}

}  // namespace hart
