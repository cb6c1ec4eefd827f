#include "coremine/oracle.hpp"

#include <algorithm>

namespace coremine::oracle {

namespace {

// One deletion round over the whole graph; thresholds are read through a
// callable so both fixpoints share the same literal loop.
template <typename ThresholdOf>
std::vector<bool> fixpoint(const Graph& g, ThresholdOf threshold_of) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> alive(n, true);
    bool deleted = true;
    while (deleted) {
        deleted = false;
        std::vector<VertexId> doomed;
        for (VertexId v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int degree = 0;
            for (VertexId u : g.neighbors(v)) degree += alive[u] ? 1 : 0;
            if (degree < threshold_of(v)) doomed.push_back(v);
        }
        for (VertexId v : doomed) alive[v] = false;
        deleted = !doomed.empty();
    }
    return alive;
}

}  // namespace

std::vector<bool> fixpoint_peel(const Graph& g, int k) {
    return fixpoint(g, [k](VertexId) { return k; });
}

std::vector<bool> fixpoint_peel_partite(const PartiteGraph& pg,
                                        const ThresholdVector& thresholds) {
    const auto p = static_cast<std::size_t>(pg.partition_count());
    if (thresholds.size() != p) throw ThresholdArityError(p, thresholds.size());
    return fixpoint(pg.graph(), [&](VertexId v) {
        return thresholds[static_cast<std::size_t>(pg.partition_of(v))];
    });
}

int CoreDecomposition::max_coreness() const {
    int best = 0;
    for (int c : coreness) best = std::max(best, c);
    return best;
}

CoreDecomposition core_decomposition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    CoreDecomposition out;
    out.coreness.assign(n, 0);

    std::vector<int> degree(n);
    for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> removed(n, false);

    int level = 0;
    for (std::size_t step = 0; step < n; ++step) {
        VertexId target = 0;
        int best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (!removed[v] && (best < 0 || degree[v] < best)) {
                best = degree[v];
                target = v;
            }
        }
        level = std::max(level, best);
        out.coreness[target] = level;
        removed[target] = true;
        for (VertexId u : g.neighbors(target)) {
            if (!removed[u]) --degree[u];
        }
    }
    return out;
}

}  // namespace coremine::oracle
