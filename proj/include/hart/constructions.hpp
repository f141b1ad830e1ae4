#pragma once

#include "hart/homological.hpp"

#include <string>
#include <vector>

namespace hart {

// Vertices "u_v" in lexicographic pair order, arrows "{a}_{v}" (a ⊗ e_v) then
// "{u}_{b}" (e_u ⊗ b); factor relations lifted at every vertex of the other
// factor, plus one commutativity square per pair of arrows. Throws ParseError
// on a name collision.
AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b);

// End_Λ(T_0 ⊕ ... ⊕ T_{m-1}) for pairwise non-isomorphic indecomposables T_i,
// presented by a quiver with vertex i for T_i. An arrow i -> j is a map
// T_i -> T_j, and the product f·g of f: T_i -> T_j, g: T_j -> T_k is g∘f.
struct EndAlgebraData {
    std::vector<Representation> summands;
    std::vector<std::vector<std::vector<ModuleMap>>> hom;  // hom[i][j]: basis of Hom(T_i, T_j)
    std::vector<std::vector<std::size_t>> hom_dims;
    std::vector<SparseVec> arrow_elements;                 // per new arrow, in hom[src][tgt] coordinates
    int loewy_length = 0;
    AlgebraPresentation presentation;

    // f·g for basis elements f of hom[i][j] and g of hom[j][k], in hom[i][k] coordinates.
    const SparseVec& product(int i, int j, int k, std::uint32_t f, std::uint32_t g) const;
    SparseVec multiply(int i, int j, int k, const SparseVec& f, const SparseVec& g) const;

    std::vector<std::vector<SparseVec>> structure;  // [(i*m + j)*m + k][f * dim(j,k) + g]
};

EndAlgebraData endomorphism_algebra(const std::vector<Representation>& summands, const std::vector<std::string>& names,
                                    const std::string& name, std::size_t path_budget = 200000);

// T = τ_n⁻(Λe_v) ⊕ ⨁_{u≠v} Λe_u; summand v sits at vertex v.
EndAlgebraData n_apr_tilt(const AlgebraPtr& alg, int n, int vertex);

struct GradedDims {
    std::vector<Matrix> degrees;                       // degrees[i](u, v) = dim e_u Π_i e_v
    std::vector<std::vector<std::size_t>> new_arrows;  // degree-1 generators of Π between u and v
};

GradedDims preprojective_algebra_dims(const AlgebraPtr& alg, int n, int maxdeg);

}  // namespace hart
