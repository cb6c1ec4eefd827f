#pragma once

#include "coremine/graph.hpp"
#include "coremine/partite.hpp"

// Definitional reference implementations used to cross-check the fast
// peelers. Deliberately slow: every round rescans degrees from scratch, and
// nothing here shares code with the production path.
namespace coremine::oracle {

/// Repeatedly deletes all vertices whose degree within the surviving set is
/// below k, until a full rescan deletes nothing. Returns the survivor mask.
std::vector<bool> fixpoint_peel(const Graph& g, int k);

/// Same fixpoint with a per-partition threshold.
std::vector<bool> fixpoint_peel_partite(const PartiteGraph& pg,
                                        const ThresholdVector& thresholds);

/// Coreness per vertex: the maximum k such that the vertex belongs to a
/// subgraph of minimum degree k.
struct CoreDecomposition {
    std::vector<int> coreness;

    int max_coreness() const;
};

/// Full decomposition by repeated minimum-degree removal; the coreness of a
/// vertex is the largest minimum degree seen up to its removal. Ties among
/// minimum-degree vertices go to the smallest index.
CoreDecomposition core_decomposition(const Graph& g);

}  // namespace coremine::oracle
