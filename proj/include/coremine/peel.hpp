#pragma once

#include "coremine/graph.hpp"
#include "coremine/partite.hpp"

namespace coremine {

/// Outcome of one peel over a graph.
///
/// active marks the vertices that survive; they are exactly the vertices of
/// the largest subgraph meeting every degree threshold. final_counters holds
/// the per-vertex degree counters at termination: for an active vertex this
/// equals its degree within the surviving subgraph; counters of removed
/// vertices keep absorbing decrements after removal and carry no meaning on
/// their own. removal_order lists removed vertices in dequeue order.
struct PeelResult {
    std::vector<bool> active;
    std::vector<int> final_counters;
    std::vector<VertexId> removal_order;

    /// Vector initializations, status checks, counter updates, and queue
    /// operations performed, for cost accounting. Bounded by a small
    /// constant multiple of |V| + |E|.
    std::uint64_t elementary_ops = 0;

    std::size_t active_count() const;
};

/// Mines the k-degree remainder of g: repeatedly discards vertices whose
/// degree counter drops below k, cascading through a FIFO queue. Survivors
/// form the unique largest subgraph with minimum degree >= k. One scan over
/// the vertices, each edge endpoint visited at most once: O(|V| + |E|).
///
/// k = 0 keeps everything, isolated vertices included; k above the maximum
/// degree yields an empty active set.
PeelResult peel_k(const Graph& g, int k);

/// Per-partition variant: vertex v must keep degree >= thresholds[p(v)].
/// Scans partition by partition; cascades are shared across partitions.
PeelResult peel_partite(const PartiteGraph& pg, const ThresholdVector& thresholds);

/// Connected components of the surviving subgraph, ordered by smallest
/// contained index, members ascending. A component of a single vertex can
/// only occur when its threshold is 0 and is listed like any other.
struct CoreList {
    std::vector<std::vector<VertexId>> cores;
};

CoreList extract_cores(const Graph& g, const PeelResult& result);

}  // namespace coremine
