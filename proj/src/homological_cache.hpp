#pragma once

#include "hart/homological.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hart {

// lift[k][g][h]: component of the chain map P_k -> P'_k from generator g to generator h.
using ChainLift = std::vector<std::vector<std::vector<SparseVec>>>;

// Stored resolutions have a null algebra pointer so the cache owns no
// reference back to its algebra.
struct InjectiveData {
    std::vector<Resolution> resolutions;
    std::vector<ChainLift> lifts;  // per arrow a: i -> j, lifting I_i -> I_j, φ |-> φa
};

struct HomologicalCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const InjectiveData>> injective;  // keyed by n
    std::shared_ptr<const std::vector<Resolution>> simple;          // at least three terms each
};

}  // namespace hart
