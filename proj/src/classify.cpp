#include "hart/classify.hpp"

#include "hart/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hart {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::ReachedInjective: return "ReachedInjective";
        case Outcome::ModuleToDepth: return "ModuleToDepth";
        case Outcome::NonModuleWitness: return "NonModuleWitness";
    }
    return "";
}

const char* overall_name(Overall o) {
    switch (o) {
        case Overall::NRepresentationFinite: return "NRepresentationFinite";
        case Overall::NRepresentationInfiniteToDepth: return "NRepresentationInfiniteToDepth";
        case Overall::NotNHereditary: return "NotNHereditary";
        case Overall::GlobalDimensionExceedsN: return "GlobalDimensionExceedsN";
    }
    return "";
}

namespace {

std::optional<Witness> first_nonzero_below(const ExtProfile& p, int n, int vertex, int step) {
    for (int j = 0; j < n; ++j)
        if (p[j] != 0) return Witness{vertex, step, j, p[j]};
    return std::nullopt;
}

Trajectory run_trajectory(const AlgebraPtr& alg, int v, int n, int depth) {
    Trajectory t;
    t.vertex = v;
    Representation x = projective_rep(alg, v);
    for (int i = 0;; ++i) {
        TrajectoryStep step;
        step.module = x;
        step.injective = is_injective(x);
        if (step.injective) {
            t.steps.push_back(std::move(step));
            t.outcome = Outcome::ReachedInjective;
            t.ell = i;
            return t;
        }
        if (i == depth) {
            t.steps.push_back(std::move(step));
            t.outcome = Outcome::ModuleToDepth;
            t.ell = i;
            return t;
        }
        NuInverse nu = nu_inverse(x, n, true);
        step.profile = nu.profile;
        t.steps.push_back(std::move(step));
        if (auto w = first_nonzero_below(nu.profile, n, v, i)) {
            t.outcome = Outcome::NonModuleWitness;
            t.ell = i;
            t.witness = w;
            return t;
        }
        x = std::move(*nu.module);
    }
}

template <class F>
void parallel_for(int count, int jobs, F&& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

Verdict classify(const AlgebraPtr& alg, int n, int depth, int jobs) {
    if (n < 1 || depth < 1) throw std::invalid_argument("classify needs n >= 1 and depth >= 1");
    Verdict v;
    v.algebra = alg->name();
    v.n = n;
    v.depth = depth;
    try {
        v.global_dimension = global_dimension(alg, n);
    } catch (const AboveCap&) {
        v.overall = Overall::GlobalDimensionExceedsN;
        return v;
    }
    const int nv = alg->num_vertices();
    v.trajectories.resize(nv);
    parallel_for(nv, jobs, [&](int u) { v.trajectories[u] = run_trajectory(alg, u, n, depth); });

    bool all_finite = true, all_infinite = true;
    for (const auto& t : v.trajectories) {
        all_finite = all_finite && t.outcome == Outcome::ReachedInjective;
        all_infinite = all_infinite && t.outcome == Outcome::ModuleToDepth;
        if (t.witness && !v.witness) v.witness = t.witness;
    }
    if (all_finite) {
        v.overall = Overall::NRepresentationFinite;
        v.injectives_distinct = true;
        for (int a = 0; a < nv && v.injectives_distinct; ++a)
            for (int b = a + 1; b < nv; ++b)
                if (are_isomorphic(v.trajectories[a].steps.back().module, v.trajectories[b].steps.back().module)) {
                    v.injectives_distinct = false;
                    break;
                }
    } else if (all_infinite) {
        v.overall = Overall::NRepresentationInfiniteToDepth;
    } else {
        v.overall = Overall::NotNHereditary;
        if (!v.witness) {
            // Mixed finite and surviving branches: ν_n⁻¹ of a reached injective is not a module.
            for (auto& t : v.trajectories) {
                if (t.outcome != Outcome::ReachedInjective) continue;
                auto& last = t.steps.back();
                last.profile = nu_inverse_profile(last.module, n);
                v.witness = first_nonzero_below(last.profile, n, t.vertex, t.ell);
                if (v.witness) break;
            }
        }
    }
    return v;
}

std::string verdict_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["algebra"] = v.algebra;
    j["n"] = v.n;
    j["depth"] = v.depth;
    j["overall"] = overall_name(v.overall);
    if (v.global_dimension) j["global_dimension"] = *v.global_dimension;
    auto witness_json = [](const Witness& w) {
        return nlohmann::ordered_json{{"vertex", w.vertex}, {"step", w.step}, {"degree", w.degree}, {"dim", w.dim}};
    };
    nlohmann::ordered_json trajs = nlohmann::ordered_json::array();
    const Quiver* q = nullptr;
    for (const auto& t : v.trajectories) {
        if (!q) q = &t.steps.front().module.algebra()->quiver();
        nlohmann::ordered_json tj;
        tj["vertex"] = q->vertices[t.vertex];
        tj["outcome"] = outcome_name(t.outcome);
        tj["ell"] = t.ell;
        nlohmann::ordered_json dims = nlohmann::ordered_json::array();
        nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
        for (const auto& s : t.steps) {
            dims.push_back(s.module.dims());
            profiles.push_back(s.profile);
        }
        tj["dim_vectors"] = dims;
        tj["profiles"] = profiles;
        if (t.witness) tj["witness"] = witness_json(*t.witness);
        trajs.push_back(tj);
    }
    j["trajectories"] = trajs;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    if (v.overall == Overall::NRepresentationFinite) j["injectives_distinct"] = v.injectives_distinct;
    return j.dump(2);
}

int verdict_exit_code(const Verdict& v) {
    switch (v.overall) {
        case Overall::NotNHereditary: return 2;
        case Overall::GlobalDimensionExceedsN: return 3;
        default: return 0;
    }
}

std::vector<FamilyMember> preprojectives(const AlgebraPtr& alg, int n, int depth, bool allow_partial) {
    std::vector<FamilyMember> out;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        Representation x = projective_rep(alg, v);
        out.push_back({v, 0, x});
        for (int i = 1; i <= depth; ++i) {
            NuInverse nu = nu_inverse(x, n, true);
            if (auto w = first_nonzero_below(nu.profile, n, v, i - 1)) {
                if (allow_partial) break;
                throw StoppedEarly("nu inverse of step " + std::to_string(i - 1) + " at vertex " +
                                   alg->quiver().vertices[v] + " is not a module");
            }
            x = std::move(*nu.module);
            out.push_back({v, i, x});
        }
    }
    return out;
}

std::vector<FamilyMember> preinjectives(const AlgebraPtr& alg, int n, int depth, bool allow_partial) {
    auto op = preprojectives(alg->opposite(), n, depth, allow_partial);
    for (auto& m : op) m.module = dual(m.module);
    return op;
}

OrthogonalityReport ext_orthogonality_report(const std::vector<Representation>& mods, int n) {
    OrthogonalityReport r;
    const std::size_t m = mods.size();
    r.hom.assign(m, std::vector<std::size_t>(m, 0));
    r.ext.assign(m, std::vector<std::vector<std::size_t>>(m));
    for (std::size_t i = 0; i < m; ++i) {
        Resolution res = partial_resolution(mods[i], n + 1);
        for (std::size_t j = 0; j < m; ++j) {
            ExtProfile p = ext_profile(res, mods[j], n - 1);
            r.hom[i][j] = p[0];
            r.ext[i][j].assign(p.begin() + 1, p.end());
            for (auto e : r.ext[i][j])
                if (e != 0) r.all_orthogonal = false;
        }
    }
    return r;
}

DimvecPrediction dimvec_predict(const AlgebraPtr& alg, int n, int ell) {
    const Matrix& c = alg->cartan();
    Matrix phi = coxeter_matrix(c, n).phi;
    return {phi.pow(-ell) * c, phi.pow(ell) * c.transpose()};
}

}  // namespace hart
