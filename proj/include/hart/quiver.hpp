#pragma once

#include "hart/matrix.hpp"
#include "hart/rational.hpp"
#include "hart/sparse.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace hart {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
    int vertex_index(const std::string& name) const;  // -1 if absent
    int arrow_index(const std::string& name) const;   // -1 if absent
    bool operator==(const Quiver&) const = default;
};

// Arrow indices composed left to right: target(arrows[k]) = source(arrows[k+1]).
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    static Path trivial(int v) { return Path{v, v, {}}; }
    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

// Shortlex on arrow indices, then endpoints for trivial paths.
bool path_less(const Path& a, const Path& b);
Path concat(const Quiver& q, const Path& a, const Path& b);
Path make_path(const Quiver& q, const std::vector<int>& arrows);
std::string path_str(const Quiver& q, const Path& p);

struct Term {
    Rational coeff;
    Path path;
    bool operator==(const Term&) const = default;
};

struct Relation {
    std::vector<Term> terms;
    bool operator==(const Relation&) const = default;
};

struct AlgebraPresentation {
    std::string name;
    Quiver quiver;
    std::vector<Relation> relations;
    bool operator==(const AlgebraPresentation&) const = default;
};

AlgebraPresentation parse_algebra(const std::string& text);
AlgebraPresentation load_algebra(const std::string& path);
std::string print_algebra(const AlgebraPresentation& p);
AlgebraPresentation opposite_algebra(const AlgebraPresentation& p);
// Checks names, endpoints, parallelism and term lengths; throws on violation.
void validate_presentation(const AlgebraPresentation& p);

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = v.size();
        for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct AlgebraBasis {
    int num_vertices = 0;
    // basis[i][j]: basis paths of e_i Λ e_j in shortlex order; basis[i][i][0] = e_i.
    std::vector<std::vector<std::vector<Path>>> basis;
    // Expansion of every path of length < vanish_length, keyed by arrow sequence.
    // Trivial paths are not stored. Paths of length >= vanish_length are zero.
    std::unordered_map<std::vector<int>, SparseVec, VecHash> expansion;
    int vanish_length = 1;
    int nilpotency = 0;  // maximal basis path length

    std::size_t dim(int i, int j) const { return basis[i][j].size(); }
    std::size_t total_dim() const;
    // Coordinates of a path in basis(source, target).
    SparseVec reduce(const Path& p) const;
};

AlgebraBasis compute_basis(const AlgebraPresentation& p, int length_cap = 64);
Matrix cartan_matrix(const AlgebraBasis& b);

struct CoxeterResult {
    Matrix phi;
    Matrix phi_inv;
};

// Φ = (-1)^n Cᵗ C⁻¹.
CoxeterResult coxeter_matrix(const Matrix& c, int n);

}  // namespace hart
