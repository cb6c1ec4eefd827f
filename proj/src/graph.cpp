#include "coremine/graph.hpp"

#include <algorithm>

namespace coremine {

std::optional<VertexId> Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < vertex_count(); ++v) {
        for (VertexId u : neighbors(v)) {
            if (v < u) out.emplace_back(v, u);
        }
    }
    return out;
}

VertexId GraphBuilder::add_vertex(std::string_view label) {
    auto [it, inserted] =
        index_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
    if (a == b) throw SelfLoopError(std::string(a));
    const VertexId u = add_vertex(a);
    const VertexId v = add_vertex(b);
    const std::uint64_t key = u < v ? (std::uint64_t{u} << 32 | v) : (std::uint64_t{v} << 32 | u);
    if (!seen_pairs_.insert(key).second) throw DuplicateEdgeError(std::string(a), std::string(b));
    edge_pairs_.emplace_back(u, v);
}

Graph GraphBuilder::build() {
    Graph g;
    const std::size_t n = labels_.size();
    g.labels_ = std::move(labels_);
    g.index_ = std::move(index_);
    g.edge_count_ = edge_pairs_.size();

    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : edge_pairs_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.adjacency_.resize(2 * edge_pairs_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edge_pairs_) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }

    edge_pairs_.clear();
    seen_pairs_.clear();
    return g;
}

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& declared_vertices) {
    GraphBuilder builder;
    for (const auto& label : declared_vertices) builder.add_vertex(label);
    for (const auto& [a, b] : edges) builder.add_edge(a, b);
    return builder.build();
}

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
    if (keep.size() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: mask length differs from vertex count");
    GraphBuilder builder;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (keep[v]) builder.add_vertex(g.label(v));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!keep[v]) continue;
        for (VertexId u : g.neighbors(v)) {
            if (v < u && keep[u]) builder.add_edge(g.label(v), g.label(u));
        }
    }
    return builder.build();
}

}  // namespace coremine
