#include "coremine/distsim.hpp"

#include <algorithm>
#include <random>

namespace coremine::distsim {

namespace {

struct Message {
    VertexId from;
    VertexId to;
};

SimReport run_engine(const Graph& g, const std::vector<int>& thresholds,
                     std::optional<std::uint64_t> shuffle_seed) {
    const std::size_t n = g.vertex_count();
    if (thresholds.size() != n) throw ThresholdArityError(n, thresholds.size());
    for (int k : thresholds) {
        if (k < 0) throw std::invalid_argument("run_sync: thresholds must be non-negative");
    }

    std::vector<int> degree(n);
    for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> active(n, true);

    std::mt19937_64 rng(shuffle_seed.value_or(0));
    std::vector<Message> outbox;
    auto go_off = [&](VertexId v) {
        for (VertexId u : g.neighbors(v)) outbox.push_back({v, u});
        active[v] = false;
    };

    // Phase 1: every node checks its starting degree.
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] < thresholds[v]) go_off(v);
    }

    SimReport report;
    std::vector<Message> inbox;
    std::vector<bool> active_at_phase_start;
    while (!outbox.empty()) {
        report.messages_per_phase.push_back(outbox.size());
        inbox = std::move(outbox);
        outbox.clear();

        if (shuffle_seed) {
            std::shuffle(inbox.begin(), inbox.end(), rng);
        } else {
            std::sort(inbox.begin(), inbox.end(), [](const Message& a, const Message& b) {
                return a.from != b.from ? a.from < b.from : a.to < b.to;
            });
        }

        active_at_phase_start = active;
        for (const Message& m : inbox) {
            if (!active_at_phase_start[m.to]) continue;  // dormant: message dropped
            --degree[m.to];
            if (active[m.to] && degree[m.to] < thresholds[m.to]) go_off(m.to);
        }
    }

    report.phases = static_cast<int>(report.messages_per_phase.size());
    for (std::uint64_t c : report.messages_per_phase) report.total_messages += c;
    report.final_active = std::move(active);
    return report;
}

}  // namespace

std::size_t SimReport::active_count() const {
    return static_cast<std::size_t>(std::count(final_active.begin(), final_active.end(), true));
}

SimReport run_sync(const Graph& g, const std::vector<int>& thresholds) {
    return run_engine(g, thresholds, std::nullopt);
}

SimReport run_sync_shuffled(const Graph& g, const std::vector<int>& thresholds,
                            std::uint64_t delivery_seed) {
    return run_engine(g, thresholds, delivery_seed);
}

std::vector<int> uniform_thresholds(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("uniform_thresholds: k must be non-negative");
    return std::vector<int>(g.vertex_count(), k);
}

std::vector<int> partite_thresholds(const PartiteGraph& pg, const ThresholdVector& thresholds) {
    const auto p = static_cast<std::size_t>(pg.partition_count());
    if (thresholds.size() != p) throw ThresholdArityError(p, thresholds.size());
    std::vector<int> out(pg.vertex_count());
    for (VertexId v = 0; v < pg.vertex_count(); ++v)
        out[v] = thresholds[static_cast<std::size_t>(pg.partition_of(v))];
    return out;
}

std::optional<long> phase_bound_plain(std::size_t vertex_count, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > vertex_count) return std::nullopt;
    return static_cast<long>(vertex_count) - k;
}

std::optional<long> phase_bound_bipartite(const PartiteGraph& pg,
                                          const ThresholdVector& thresholds) {
    if (pg.partition_count() != 2 || thresholds.size() != 2) return std::nullopt;
    const auto& sizes = pg.partition_sizes();
    for (std::size_t i = 0; i < 2; ++i) {
        if (thresholds[i] < 0 || static_cast<std::size_t>(thresholds[i]) > sizes[i])
            return std::nullopt;
    }
    return (static_cast<long>(sizes[0]) - thresholds[1]) +
           (static_cast<long>(sizes[1]) - thresholds[0]) + 1;
}

std::optional<long> phase_bound_partite(const PartiteGraph& pg,
                                        const ThresholdVector& thresholds) {
    const auto p = static_cast<std::size_t>(pg.partition_count());
    if (thresholds.size() != p) return std::nullopt;
    const auto& sizes = pg.partition_sizes();
    long total = 0;
    int min_threshold = thresholds.empty() ? 0 : thresholds[0];
    for (std::size_t i = 0; i < p; ++i) {
        if (thresholds[i] < 0 || static_cast<std::size_t>(thresholds[i]) > sizes[i])
            return std::nullopt;
        total += static_cast<long>(sizes[i]);
        min_threshold = std::min(min_threshold, thresholds[i]);
    }
    return total - min_threshold;
}

}  // namespace coremine::distsim
