#pragma once

#include "coremine/graph.hpp"
#include "coremine/partite.hpp"

#include <optional>

// Deterministic in-process simulation of the vertex-centric off-message
// protocol under synchronized phases. Each node holds a degree counter and a
// threshold. In phase 1 every node inspects its starting degree; a node
// below threshold broadcasts one off-message per incident edge and goes
// dormant. Each later phase delivers all messages sent in the previous
// phase: dormant nodes drop incoming messages (the sends still count), an
// active node decrements its counter once per message and, on crossing below
// threshold, broadcasts to all neighbors and goes dormant. The run ends at
// the first phase that sends nothing; that quiescent phase is not counted.
namespace coremine::distsim {

/// Per-run accounting. Entry i of messages_per_phase is the number of
/// messages sent during counted phase i+1.
struct SimReport {
    int phases = 0;
    std::vector<std::uint64_t> messages_per_phase;
    std::uint64_t total_messages = 0;
    std::vector<bool> final_active;

    std::size_t active_count() const;
};

/// Runs the protocol with one threshold per vertex. Mailboxes are delivered
/// in ascending sender index, ties by receiver; the outcome is delivery-order
/// independent either way.
SimReport run_sync(const Graph& g, const std::vector<int>& thresholds);

/// Same run with every phase's delivery order permuted by delivery_seed.
SimReport run_sync_shuffled(const Graph& g, const std::vector<int>& thresholds,
                            std::uint64_t delivery_seed);

std::vector<int> uniform_thresholds(const Graph& g, int k);

/// thresholds[v] = per-partition threshold of v's partition.
std::vector<int> partite_thresholds(const PartiteGraph& pg, const ThresholdVector& thresholds);

/// Phase-count ceilings, defined only while their preconditions hold.

/// |V| - k, requires 0 <= k <= |V|.
std::optional<long> phase_bound_plain(std::size_t vertex_count, int k);

/// (|V_1| - k_2) + (|V_2| - k_1) + 1 for two partitions; each size pairs
/// with the other partition's threshold. Requires k_i <= |V_i|.
std::optional<long> phase_bound_bipartite(const PartiteGraph& pg,
                                          const ThresholdVector& thresholds);

/// sum of |V_i| minus the smallest threshold. Requires k_i <= |V_i| for
/// every i.
std::optional<long> phase_bound_partite(const PartiteGraph& pg,
                                        const ThresholdVector& thresholds);

}  // namespace coremine::distsim
