#pragma once

#include "hart/algebra.hpp"
#include "hart/representation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hart {

Representation projective_rep(const AlgebraPtr& alg, int v);
// D(e_vΛ), built as the dual of the projective of Λ^op at v.
Representation injective_rep(const AlgebraPtr& alg, int v);
Representation simple_rep(const AlgebraPtr& alg, int v);
Representation direct_sum(const std::vector<Representation>& xs);

// DX over Λ^op: same dims, transposed maps on the reversed arrows.
Representation dual(const Representation& x);
// For f: X -> Y, Df: DY -> DX.
ModuleMap dual_map(const ModuleMap& f);
// x |-> x b from Λe_s to Λe_t for the arrow b: s -> t.
ModuleMap right_multiplication(const AlgebraPtr& alg, int arrow);

// Basis of Hom_Λ(X, Y) from the intertwiner equations.
std::vector<ModuleMap> hom_space(const Representation& x, const Representation& y);
bool are_isomorphic(const Representation& x, const Representation& y);

// Submodule generated by the given elements (vertex, vector) and the quotient by it.
Representation quotient_module(const Representation& x, const std::vector<std::pair<int, SparseVec>>& gens);

struct ProjectiveCover {
    std::vector<int> generators;  // vertex of each indecomposable summand
    Representation projective;
    ModuleMap epi;
};

ProjectiveCover projective_cover(const Representation& x);

// A term P_k = ⊕_g Λe_{gens[k][g]}. The differential sends generator g of P_k
// to Σ_h λ_{g,h} e_h in P_{k-1}, with λ_{g,h} in e_{v_g}Λe_{v_h}.
struct Resolution {
    AlgebraPtr algebra;
    std::vector<std::vector<int>> gens;
    std::vector<std::vector<std::vector<std::pair<int, SparseVec>>>> diff;  // diff[0] unused
    std::vector<SparseVec> augmentation;  // generator g of P_0 -> element of X_{v_g}
    bool complete = false;                // last computed syzygy is zero

    int num_terms() const { return static_cast<int>(gens.size()); }
    // Index of the last nonzero term; -1 for the zero module.
    int length() const;
    Representation term(int k) const;
    ModuleMap differential(int k) const;  // P_k -> P_{k-1}
    bool is_minimal() const;
};

// P_0..P_max_len; throws CapExceeded if the syzygy after P_max_len is nonzero.
Resolution min_proj_resolution(const Representation& x, int max_len = 64);
// Computes at most max_terms terms without requiring completeness.
Resolution partial_resolution(const Representation& x, int max_terms);

using ExtProfile = std::vector<std::size_t>;

// dim Ext^j(X, Y) for j = 0..cap.
ExtProfile ext_profile(const Representation& x, const Representation& y, int cap);
ExtProfile ext_profile(const Resolution& rx, const Representation& y, int cap);
std::size_t hom_dim(const Representation& x, const Representation& y);

// Throws AboveCap.
int global_dimension(const AlgebraPtr& alg, int cap = 64);
bool is_injective(const Representation& x);

// D Ext^n(X, Λ), with the right module structure from post-composition.
Representation tau_n(const Representation& x, int n);
// Ext^n_Λ(DΛ, X) = Ext^n_{Λ^op}(DX, Λ), computed from resolutions of the
// indecomposable injectives.
Representation tau_n_minus(const Representation& x, int n);
// The same module computed as Ext^n_{Λ^op}(DX, Λ) over Λ^op directly.
Representation tau_n_minus_via_opposite(const Representation& x, int n);
// Ext^n_A(Y, A) as a left A^op-module.
Representation ext_into_regular(const Representation& y, int n);

// Entry j = dim Ext^j_Λ(DΛ, X) = dim Ext^j_{Λ^op}(DX, Λ), j = 0..n.
ExtProfile nu_inverse_profile(const Representation& x, int n);

struct NuInverse {
    ExtProfile profile;
    std::optional<Representation> module;  // H^n, i.e. τ_n⁻(X)
};

NuInverse nu_inverse(const Representation& x, int n, bool want_module);

// τ_n⁻ on morphisms, relative to the bases produced by tau_n_minus(x), tau_n_minus(y).
ModuleMap tau_n_minus_map(const Representation& x, const Representation& y, const ModuleMap& f, int n);

}  // namespace hart
