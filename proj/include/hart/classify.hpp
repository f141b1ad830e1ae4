#pragma once

#include "hart/homological.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hart {

enum class Outcome { ReachedInjective, ModuleToDepth, NonModuleWitness };
enum class Overall { NRepresentationFinite, NRepresentationInfiniteToDepth, NotNHereditary, GlobalDimensionExceedsN };

const char* outcome_name(Outcome o);
const char* overall_name(Overall o);

// ν_n⁻¹ of the module at `step` has nonzero cohomology `dim` in degree `degree` < n.
struct Witness {
    int vertex = 0;
    int step = 0;
    int degree = 0;
    std::size_t dim = 0;
};

struct TrajectoryStep {
    Representation module;  // ν_n^{-i}(Λe_v)
    ExtProfile profile;     // of ν_n⁻¹ applied to module; empty if module is injective or unexplored
    bool injective = false;
};

struct Trajectory {
    int vertex = 0;
    std::vector<TrajectoryStep> steps;
    Outcome outcome = Outcome::ModuleToDepth;
    int ell = 0;  // ℓ_P for ReachedInjective, otherwise the last step index
    std::optional<Witness> witness;
};

struct Verdict {
    std::string algebra;
    int n = 1;
    int depth = 1;
    Overall overall = Overall::NotNHereditary;
    std::optional<int> global_dimension;  // absent when it exceeds n
    std::vector<Trajectory> trajectories;
    std::optional<Witness> witness;
    // For a finite verdict: the endpoints ν_n^{-ℓ_P}(P) are pairwise non-isomorphic.
    bool injectives_distinct = false;
};

// Trajectories run on up to `jobs` threads.
Verdict classify(const AlgebraPtr& alg, int n, int depth, int jobs = 1);
std::string verdict_json(const Verdict& v);
int verdict_exit_code(const Verdict& v);

struct FamilyMember {
    int vertex = 0;
    int step = 0;
    Representation module;
};

// τ_n^{-i}(Λe_v) for 0 <= i <= depth. Throws StoppedEarly when a module test
// fails unless allow_partial, in which case that branch just ends.
std::vector<FamilyMember> preprojectives(const AlgebraPtr& alg, int n, int depth, bool allow_partial = false);
// τ_n^{i}(DΛe_v), computed over Λ^op and dualized.
std::vector<FamilyMember> preinjectives(const AlgebraPtr& alg, int n, int depth, bool allow_partial = false);

struct OrthogonalityReport {
    std::vector<std::vector<std::size_t>> hom;               // hom[i][j] = dim Hom(M_i, M_j)
    std::vector<std::vector<std::vector<std::size_t>>> ext;  // ext[i][j][k-1] = dim Ext^k, 0 < k < n
    bool all_orthogonal = true;
};

OrthogonalityReport ext_orthogonality_report(const std::vector<Representation>& mods, int n);

struct DimvecPrediction {
    Matrix preprojective;  // Φ^{-ℓ} C
    Matrix preinjective;   // Φ^{ℓ} Cᵗ
};

DimvecPrediction dimvec_predict(const AlgebraPtr& alg, int n, int ell);

}  // namespace hart
