#include "coremine/peel.hpp"

#include <algorithm>

namespace coremine {

namespace {

// FIFO cascade shared by both peels. Every neighbor visit decrements the
// counter first and checks status second; decrements of already-removed
// vertices land on dead counters.
template <typename ThresholdOf>
void drain(const Graph& g, ThresholdOf threshold_of, PeelResult& r,
           std::vector<VertexId>& queue, std::size_t& head) {
    while (head < queue.size()) {
        const VertexId w = queue[head++];
        r.elementary_ops += 1;  // dequeue
        r.removal_order.push_back(w);
        for (VertexId u : g.neighbors(w)) {
            --r.final_counters[u];
            r.elementary_ops += 2;  // counter update + status check
            if (r.active[u] && r.final_counters[u] < threshold_of(u)) {
                r.active[u] = false;
                queue.push_back(u);
                r.elementary_ops += 1;  // enqueue
            }
        }
    }
}

PeelResult init_result(const Graph& g) {
    const std::size_t n = g.vertex_count();
    PeelResult r;
    r.active.assign(n, true);
    r.final_counters.resize(n);
    for (VertexId v = 0; v < n; ++v) r.final_counters[v] = g.degree(v);
    r.elementary_ops = 2 * n;  // both vector initializations
    return r;
}

}  // namespace

std::size_t PeelResult::active_count() const {
    return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

PeelResult peel_k(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("peel_k: k must be non-negative");
    const std::size_t n = g.vertex_count();
    PeelResult r = init_result(g);
    std::vector<VertexId> queue;
    std::size_t head = 0;
    for (VertexId v = 0; v < n; ++v) {
        r.elementary_ops += 1;  // scan status check
        if (r.active[v] && r.final_counters[v] < k) {
            r.active[v] = false;
            queue.push_back(v);
            r.elementary_ops += 1;
            drain(g, [k](VertexId) { return k; }, r, queue, head);
        }
    }
    return r;
}

PeelResult peel_partite(const PartiteGraph& pg, const ThresholdVector& thresholds) {
    const auto p = static_cast<std::size_t>(pg.partition_count());
    if (thresholds.size() != p) throw ThresholdArityError(p, thresholds.size());
    for (int k : thresholds) {
        if (k < 0) throw std::invalid_argument("peel_partite: thresholds must be non-negative");
    }

    const Graph& g = pg.graph();
    PeelResult r = init_result(g);
    std::vector<VertexId> queue;
    std::size_t head = 0;
    auto threshold_of = [&](VertexId u) {
        return thresholds[static_cast<std::size_t>(pg.partition_of(u))];
    };
    for (int part = 0; part < pg.partition_count(); ++part) {
        const int k = thresholds[static_cast<std::size_t>(part)];
        for (VertexId v : pg.partition_members(part)) {
            r.elementary_ops += 1;
            if (r.active[v] && r.final_counters[v] < k) {
                r.active[v] = false;
                queue.push_back(v);
                r.elementary_ops += 1;
                drain(g, threshold_of, r, queue, head);
            }
        }
    }
    return r;
}

CoreList extract_cores(const Graph& g, const PeelResult& result) {
    if (result.active.size() != g.vertex_count())
        throw std::invalid_argument("extract_cores: result does not match graph");
    const std::size_t n = g.vertex_count();
    CoreList out;
    std::vector<bool> visited(n, false);
    std::vector<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (!result.active[start] || visited[start]) continue;
        std::vector<VertexId> component;
        queue.clear();
        queue.push_back(start);
        visited[start] = true;
        std::size_t head = 0;
        while (head < queue.size()) {
            const VertexId v = queue[head++];
            component.push_back(v);
            for (VertexId u : g.neighbors(v)) {
                if (result.active[u] && !visited[u]) {
                    visited[u] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.cores.push_back(std::move(component));
    }
    return out;
}

}  // namespace coremine
