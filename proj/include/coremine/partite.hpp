#pragma once

#include "coremine/graph.hpp"

namespace coremine {

/// Per-partition degree thresholds (k_1, ..., k_p); entry i applies to
/// partition i. Arity must match the partition count of the graph it is
/// applied to.
using ThresholdVector = std::vector<int>;

class IntraPartitionEdgeError : public GraphError {
public:
    IntraPartitionEdgeError(std::string u, std::string v)
        : GraphError("intra-partition edge '" + u + "' -- '" + v + "'"),
          u_(std::move(u)),
          v_(std::move(v)) {}

    const std::string& u() const noexcept { return u_; }
    const std::string& v() const noexcept { return v_; }

private:
    std::string u_;
    std::string v_;
};

class UnknownPartitionError : public GraphError {
public:
    explicit UnknownPartitionError(std::string label)
        : GraphError("no partition assignment for vertex '" + label + "'"),
          label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class ThresholdArityError : public GraphError {
public:
    ThresholdArityError(std::size_t expected, std::size_t got)
        : GraphError("threshold arity mismatch: expected " + std::to_string(expected) +
                     " values, got " + std::to_string(got)) {}
};

/// A graph whose vertices each carry a partition id in [0, partition_count).
///
/// No edge may join vertices of the same partition; partitions may be
/// empty. whole_graph() wraps an arbitrary graph as a single partition
/// without that restriction, for the degenerate p = 1 case where the one
/// threshold applies to every vertex. Immutable and shareable like Graph.
class PartiteGraph {
public:
    const Graph& graph() const noexcept { return graph_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
    int partition_count() const noexcept { return partition_count_; }
    int partition_of(VertexId v) const { return partition_of_[v]; }
    const std::vector<std::size_t>& partition_sizes() const noexcept { return partition_sizes_; }

    /// Members of one partition in ascending index order.
    std::span<const VertexId> partition_members(int partition) const {
        const auto p = static_cast<std::size_t>(partition);
        return {members_.data() + member_offsets_[p], member_offsets_[p + 1] - member_offsets_[p]};
    }

    /// Wraps an arbitrary graph as the p = 1 case.
    static PartiteGraph whole_graph(Graph g);

    friend PartiteGraph build_partite_graph(
        const std::vector<std::pair<std::string, std::string>>&,
        const std::vector<std::pair<std::string, int>>&, int, const std::vector<std::string>&);

private:
    Graph graph_;
    std::vector<int> partition_of_;
    std::vector<std::size_t> partition_sizes_;
    std::vector<VertexId> members_;
    std::vector<std::size_t> member_offsets_{0};
    int partition_count_ = 1;
};

/// Builds a validated partite graph from labeled edges and
/// (label, partition) assignments. Assignment labels with no incident edge
/// become isolated vertices; every vertex must be assigned exactly once.
PartiteGraph build_partite_graph(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::pair<std::string, int>>& partition_assignments,
    int partition_count,
    const std::vector<std::string>& declared_vertices = {});

}  // namespace coremine
