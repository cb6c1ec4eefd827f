#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace coremine {

/// Dense vertex index. External labels are mapped to indices in first-seen
/// order at build time; all algorithms operate on indices.
using VertexId = std::uint32_t;

/// Base for all graph construction and input errors.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public GraphError {
public:
    explicit SelfLoopError(std::string label)
        : GraphError("self-loop at vertex '" + label + "'"), label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class DuplicateEdgeError : public GraphError {
public:
    DuplicateEdgeError(std::string u, std::string v)
        : GraphError("duplicate edge '" + u + "' -- '" + v + "'"),
          u_(std::move(u)),
          v_(std::move(v)) {}

    const std::string& u() const noexcept { return u_; }
    const std::string& v() const noexcept { return v_; }

private:
    std::string u_;
    std::string v_;
};

/// Immutable simple undirected graph in compact adjacency form.
///
/// Neighbor lists are contiguous and sorted by index. Instances are frozen
/// after construction and safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    int degree(VertexId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    const std::string& label(VertexId v) const { return labels_[v]; }

    std::optional<VertexId> index_of(std::string_view label) const;

    /// All edges as index pairs with first < second, ordered lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    friend class GraphBuilder;

    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::size_t edge_count_ = 0;
};

/// Accumulates labeled vertices and edges, validates, and produces a Graph.
///
/// Self-loops and repeated unordered pairs are hard errors at add time;
/// counter-based peeling assumes simple graphs. A builder is consumed by
/// build().
class GraphBuilder {
public:
    /// Registers a vertex (idempotent) and returns its dense index.
    VertexId add_vertex(std::string_view label);

    void add_edge(std::string_view a, std::string_view b);

    Graph build();

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::pair<VertexId, VertexId>> edge_pairs_;
    std::unordered_set<std::uint64_t> seen_pairs_;
};

/// Builds a graph from labeled edges. Labels in declared_vertices exist even
/// when no edge touches them.
Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& declared_vertices = {});

/// Copy of g restricted to the vertices with keep[v] == true; an edge
/// survives iff both endpoints are kept. Labels carry over; g is untouched.
Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

}  // namespace coremine
