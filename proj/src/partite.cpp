#include "coremine/partite.hpp"

namespace coremine {

namespace {

// Groups vertices by partition id, ascending index within each group.
void index_members(const std::vector<int>& partition_of, int p,
                   std::vector<std::size_t>& sizes, std::vector<VertexId>& members,
                   std::vector<std::size_t>& offsets) {
    const std::size_t n = partition_of.size();
    sizes.assign(static_cast<std::size_t>(p), 0);
    for (int part : partition_of) ++sizes[static_cast<std::size_t>(part)];
    offsets.assign(static_cast<std::size_t>(p) + 1, 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i)
        offsets[i + 1] = offsets[i] + sizes[i];
    members.resize(n);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (VertexId v = 0; v < n; ++v)
        members[cursor[static_cast<std::size_t>(partition_of[v])]++] = v;
}

}  // namespace

PartiteGraph PartiteGraph::whole_graph(Graph g) {
    PartiteGraph pg;
    const std::size_t n = g.vertex_count();
    pg.graph_ = std::move(g);
    pg.partition_count_ = 1;
    pg.partition_of_.assign(n, 0);
    index_members(pg.partition_of_, 1, pg.partition_sizes_, pg.members_, pg.member_offsets_);
    return pg;
}

PartiteGraph build_partite_graph(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::pair<std::string, int>>& partition_assignments,
    int partition_count,
    const std::vector<std::string>& declared_vertices) {
    if (partition_count < 1)
        throw std::invalid_argument("build_partite_graph: partition_count must be >= 1");

    std::unordered_map<std::string, int> assignment;
    assignment.reserve(partition_assignments.size());
    for (const auto& [label, part] : partition_assignments) {
        if (part < 0 || part >= partition_count)
            throw GraphError("partition index out of range for vertex '" + label + "'");
        auto [it, inserted] = assignment.try_emplace(label, part);
        if (!inserted && it->second != part)
            throw GraphError("conflicting partition assignment for vertex '" + label + "'");
    }

    GraphBuilder builder;
    for (const auto& label : declared_vertices) builder.add_vertex(label);
    for (const auto& [a, b] : edges) builder.add_edge(a, b);
    for (const auto& [label, part] : partition_assignments) builder.add_vertex(label);

    PartiteGraph pg;
    pg.graph_ = builder.build();
    pg.partition_count_ = partition_count;

    const std::size_t n = pg.graph_.vertex_count();
    pg.partition_of_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        auto it = assignment.find(pg.graph_.label(v));
        if (it == assignment.end()) throw UnknownPartitionError(pg.graph_.label(v));
        pg.partition_of_[v] = it->second;
    }

    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : pg.graph_.neighbors(v)) {
            if (v < u && pg.partition_of_[v] == pg.partition_of_[u])
                throw IntraPartitionEdgeError(pg.graph_.label(v), pg.graph_.label(u));
        }
    }

    index_members(pg.partition_of_, partition_count, pg.partition_sizes_, pg.members_,
                  pg.member_offsets_);
    return pg;
}

}  // namespace coremine
