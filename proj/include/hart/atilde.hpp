#pragma once

#include "hart/matrix.hpp"
#include "hart/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hart {

// Root lattice L of type A_n in α-coordinates: coefficients of α_1..α_n, with
// α_0 = -(α_1 + ... + α_n). e-coordinates use α_i = e_i - e_{i-1}, α_0 = e_0 - e_n.
using LatticeVector = std::vector<long>;

LatticeVector alpha(int n, int i);
std::vector<long> e_coordinates(const LatticeVector& v);
LatticeVector from_e_coordinates(const std::vector<long>& e);
// ω(v) in Z/(n+1), with ω(α_i) = 1.
long omega(const LatticeVector& v);

// Cofinite B ≤ L, generated by the columns of an n x k matrix in α-coordinates.
// Cosets are numbered in breadth-first order from 0 along α_0, ..., α_n.
class SubgroupBasis {
public:
    SubgroupBasis() = default;
    // Throws NotCofinite; DimensionTooLarge if the index exceeds max_index.
    SubgroupBasis(int n, IntMatrix generators, std::size_t max_index = 1000000);
    static SubgroupBasis ker_omega(int n);
    static SubgroupBasis scaled_lattice(int n, long k);  // kL
    // "ker-omega" or "g1;g2;..." with comma- or space-separated entries.
    static SubgroupBasis parse(int n, const std::string& spec);

    int n() const { return n_; }
    const IntMatrix& generators() const { return gens_; }
    std::size_t index() const { return reps_.size(); }
    std::size_t coset(const LatticeVector& v) const;
    const LatticeVector& representative(std::size_t c) const { return reps_[c]; }
    bool contains(const LatticeVector& v) const;

private:
    std::size_t key(const LatticeVector& v) const;

    int n_ = 0;
    IntMatrix gens_;
    IntMatrix u_;
    std::vector<long> moduli_;
    std::vector<long> key_to_coset_;
    std::vector<LatticeVector> reps_;
};

// Q/B: arrow (c, i) runs c -> c + α_i. cut[c][i] marks arrows of degree 1.
struct OrbitQuiverWithCut {
    SubgroupBasis subgroup;
    std::vector<std::vector<std::size_t>> target;
    std::vector<std::vector<char>> cut;

    int n() const { return subgroup.n(); }
    std::size_t num_vertices() const { return target.size(); }
};

OrbitQuiverWithCut orbit_quiver(const SubgroupBasis& b);
// C_k = arrows starting at ω = k. Throws OmegaNotConstantOnB unless B ≤ ker ω.
OrbitQuiverWithCut cut_from_omega(const SubgroupBasis& b, long k);

struct SmallCycle {
    std::size_t vertex = 0;
    std::vector<int> order;  // arrow indices in path order
    int degree = 0;
};

struct CutValidation {
    bool valid = false;
    std::optional<SmallCycle> witness;
    bool homogeneous = false;  // both routes of every commutativity relation have equal degree
};

// Throws DimensionTooLarge if (n+1)! * |Q_0/B| exceeds budget.
CutValidation validate_cut(const OrbitQuiverWithCut& q, std::size_t budget = 10000000);

struct BoundingReport {
    bool bounding = false;
    int longest_path = 0;  // meaningful when bounding
};

BoundingReport is_bounding(const OrbitQuiverWithCut& q);

// Cosets in topological order of the degree-0 subquiver (smallest index first
// among available ones). Throws NotBounding.
std::vector<std::size_t> degree_zero_order(const OrbitQuiverWithCut& q);
// Vertices "1".."N" in degree_zero_order, arrows "a{k}_{i}" out of vertex k,
// and the commutativity relations whose routes both have degree 0.
AlgebraPresentation degree_zero_algebra(const OrbitQuiverWithCut& q, const std::string& name = "atilde");

// counts[d](u, v): paths of degree d from coset u to coset v in Γ/B, i.e.
// monomials x^c with u + Σ c_i α_i = v. Requires a valid bounding cut.
std::vector<Matrix> graded_orbit_dims(const OrbitQuiverWithCut& q, int maxdeg);

struct RestrictedCut {
    int n = 0;
    long s = 0;
    std::vector<std::pair<LatticeVector, int>> arrows;  // (start vertex, arrow index)
};

// L° = {v : v_i >= 0 for i < n, v_n >= -s} in e-coordinates.
std::vector<LatticeVector> simplex_points(int n, long s);
// JSON {"n": .., "s": .., "cut": [{"e": [..], "arrow": i}, ...]}.
RestrictedCut parse_restricted_cut(const std::string& json_text);
// Throws InvalidRestrictedCut.
void validate_restricted_cut(const RestrictedCut& rc);
// Γ°_{C°}: vertices L°, arrows of Q° outside C°, commutativity relations
// restricted to L° (a route leaving L° is zero).
AlgebraPresentation restricted_algebra(const RestrictedCut& rc, const std::string& name = "restricted");

// Orbit of C° under R_Aff, on Q/B with B = m·s(n+1)L for the least m >= 1
// separating the translates of L°.
OrbitQuiverWithCut restricted_cut_extend(const RestrictedCut& rc, std::size_t budget = 10000000);

// (Γ/B)_C / (1 - e) against Γ°_{C°}: vertex counts, arrows per vertex pair
// and total dimension.
bool idempotent_quotient_check(const OrbitQuiverWithCut& q, const RestrictedCut& rc);

std::string orbit_quiver_dot(const OrbitQuiverWithCut& q);
// [[coset, index], ...] for the cut arrows.
std::string cut_json(const OrbitQuiverWithCut& q);
// Inverse of cut_json on the quiver of b.
OrbitQuiverWithCut cut_from_json(const SubgroupBasis& b, const std::string& json_text);

}  // namespace hart
