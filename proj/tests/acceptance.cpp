// Acceptance suite: every mining guarantee and protocol bound checked at
// desk scale against the independent oracles, plus CLI golden output
// stability. Prints one line per criterion and exits with the number of
// failures. Set COREMINE_UPDATE_GOLDEN=1 to rewrite the golden files.

#include "coremine/distsim.hpp"
#include "coremine/oracle.hpp"
#include "coremine/peel.hpp"

#include "procutil.hpp"
#include "testsupport.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unordered_set>

using namespace coremine;
namespace ts = testsupport;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// ---------------------------------------------------------------- suites

std::vector<Graph> build_plain_suite() {
    const int sizes[] = {10, 50, 200};
    const double probs[] = {0.02, 0.05, 0.2};
    std::vector<Graph> graphs;
    graphs.reserve(100);
    for (int i = 0; i < 100; ++i)
        graphs.push_back(ts::random_graph(9000 + static_cast<std::uint64_t>(i), sizes[i % 3],
                                          probs[(i / 3) % 3]));
    return graphs;
}

struct PartiteInstance {
    PartiteGraph pg;
    std::vector<ThresholdVector> thresholds;
};

std::vector<PartiteInstance> build_partite_suite() {
    std::vector<PartiteInstance> instances;
    instances.reserve(50);
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(7700 + static_cast<std::uint64_t>(i));
        const int parts = 2 + i % 3;
        std::vector<int> sizes;
        for (int p = 0; p < parts; ++p) sizes.push_back(1 + static_cast<int>(rng() % 60));
        PartiteInstance instance{
            ts::random_partite(5500 + static_cast<std::uint64_t>(i), sizes,
                               0.02 + 0.02 * static_cast<double>(i % 5)),
            {}};
        const int spread = ts::max_degree(instance.pg.graph()) + 2;
        for (int t = 0; t < 5; ++t) {
            ThresholdVector tv;
            for (int p = 0; p < parts; ++p)
                tv.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(spread)));
            instance.thresholds.push_back(std::move(tv));
        }
        instances.push_back(std::move(instance));
    }
    return instances;
}

std::vector<int> uniform_ks(const Graph& g) {
    const int top = ts::max_degree(g);
    std::vector<int> ks{0, 1, 2, 3, top, top + 1};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

// ------------------------------------------------------------- criteria

Outcome equivalence_with_fixpoint(const std::vector<Graph>& suite) {
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const Graph& g = suite[i];
        for (int k = 0; k <= ts::max_degree(g) + 1; ++k) {
            if (peel_k(g, k).active != oracle::fixpoint_peel(g, k))
                return {false, "mismatch on graph " + std::to_string(i) + " at k=" +
                                   std::to_string(k)};
        }
    }
    return {true, "100 graphs, every k from 0 to max degree + 1"};
}

Outcome coreness_consistency(const std::vector<Graph>& suite) {
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const Graph& g = suite[i];
        const auto decomposition = oracle::core_decomposition(g);
        for (int k = 0; k <= ts::max_degree(g) + 1; ++k) {
            const PeelResult r = peel_k(g, k);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (r.active[v] != (decomposition.coreness[v] >= k))
                    return {false, "graph " + std::to_string(i) + ", k=" + std::to_string(k) +
                                       ", vertex " + g.label(v)};
            }
        }
    }
    return {true, "survivor sets equal coreness level sets on all 100 graphs"};
}

Outcome partite_equivalence(const std::vector<PartiteInstance>& suite) {
    for (std::size_t i = 0; i < suite.size(); ++i) {
        for (const auto& tv : suite[i].thresholds) {
            if (peel_partite(suite[i].pg, tv).active !=
                oracle::fixpoint_peel_partite(suite[i].pg, tv))
                return {false, "mismatch on instance " + std::to_string(i)};
        }
    }
    return {true, "50 partite graphs x 5 threshold vectors"};
}

Graph random_pair_graph(std::uint64_t seed, int n, std::size_t edges) {
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges * 2);
    std::vector<std::pair<std::string, std::string>> list;
    list.reserve(edges);
    while (list.size() < edges) {
        const auto u = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(n));
        const auto v = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) continue;
        const std::uint64_t key = u < v ? (std::uint64_t{u} << 32 | v) : (std::uint64_t{v} << 32 | u);
        if (!seen.insert(key).second) continue;
        list.emplace_back(ts::vlabel(static_cast<int>(u)), ts::vlabel(static_cast<int>(v)));
    }
    std::vector<std::string> declared;
    declared.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) declared.push_back(ts::vlabel(i));
    return build_graph(list, declared);
}

double median_peel_seconds(const Graph& g, int k, int repetitions) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const PeelResult r = peel_k(g, k);
        const auto stop = std::chrono::steady_clock::now();
        volatile std::size_t sink = r.removal_order.size();
        (void)sink;
        samples.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

Outcome linear_work(const std::vector<Graph>& plain,
                    const std::vector<PartiteInstance>& partite) {
    for (std::size_t i = 0; i < plain.size(); ++i) {
        const Graph& g = plain[i];
        const auto budget = 6 * (g.vertex_count() + g.edge_count());
        for (int k = 0; k <= ts::max_degree(g) + 1; ++k) {
            if (peel_k(g, k).elementary_ops > budget)
                return {false, "work budget exceeded on graph " + std::to_string(i)};
        }
    }
    for (std::size_t i = 0; i < partite.size(); ++i) {
        const Graph& g = partite[i].pg.graph();
        const auto budget = 6 * (g.vertex_count() + g.edge_count());
        for (const auto& tv : partite[i].thresholds) {
            if (peel_partite(partite[i].pg, tv).elementary_ops > budget)
                return {false, "work budget exceeded on partite instance " + std::to_string(i)};
        }
    }

    // Doubling |V| and |E| at fixed density should not triple the wall time.
    const int n = 120000;
    const Graph small = random_pair_graph(61001, n, static_cast<std::size_t>(n) * 5);
    const Graph large = random_pair_graph(61002, 2 * n, static_cast<std::size_t>(n) * 10);
    median_peel_seconds(small, 5, 3);  // warm up
    median_peel_seconds(large, 5, 3);
    const double t_small = median_peel_seconds(small, 5, 15);
    const double t_large = median_peel_seconds(large, 5, 15);
    const double ratio = t_large / t_small;
    std::ostringstream detail;
    detail << "ops within 6(|V|+|E|) everywhere; doubling ratio " << std::fixed
           << std::setprecision(2) << ratio << " (limit 3)";
    if (ratio > 3.0) return {false, detail.str()};
    return {true, detail.str()};
}

Outcome clique_preservation() {
    for (int trial = 0; trial < 100; ++trial) {
        const int c = 4 + trial % 3;
        std::vector<std::string> clique;
        const Graph g =
            ts::plant_clique(3300 + static_cast<std::uint64_t>(trial), 60, 0.05, c, clique);
        const PeelResult r = peel_k(g, c - 1);
        for (const auto& label : clique) {
            if (!r.active[*g.index_of(label)])
                return {false, "trial " + std::to_string(trial) + " lost " + label};
        }
    }
    return {true, "100 planted cliques of size 4..6 all survive at k = size - 1"};
}

template <typename Visit>
void for_each_simulation(const std::vector<Graph>& plain,
                         const std::vector<PartiteInstance>& partite, Visit visit) {
    for (const Graph& g : plain) {
        for (int k : uniform_ks(g))
            visit(g, distsim::uniform_thresholds(g, k), &k, nullptr, nullptr);
    }
    for (const auto& instance : partite) {
        for (const auto& tv : instance.thresholds)
            visit(instance.pg.graph(), distsim::partite_thresholds(instance.pg, tv), nullptr,
                  &instance.pg, &tv);
    }
}

Outcome message_bound(const std::vector<Graph>& plain,
                      const std::vector<PartiteInstance>& partite) {
    std::size_t runs = 0;
    bool ok = true;
    std::string detail;
    for_each_simulation(plain, partite,
                        [&](const Graph& g, const std::vector<int>& thresholds, const int*,
                            const PartiteGraph*, const ThresholdVector*) {
                            if (!ok) return;
                            ++runs;
                            const auto report = distsim::run_sync(g, thresholds);
                            if (report.total_messages > 2 * g.edge_count()) {
                                ok = false;
                                detail = "exceeded 2|E| after " + std::to_string(runs) + " runs";
                            }
                        });
    if (!ok) return {false, detail};
    return {true, std::to_string(runs) + " simulations all within 2|E| messages"};
}

Outcome phase_bounds(const std::vector<Graph>& plain,
                     const std::vector<PartiteInstance>& partite) {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    for_each_simulation(
        plain, partite,
        [&](const Graph& g, const std::vector<int>& thresholds, const int* uniform_k,
            const PartiteGraph* pg, const ThresholdVector* tv) {
            const auto report = distsim::run_sync(g, thresholds);
            if (uniform_k != nullptr) {
                if (const auto bound = distsim::phase_bound_plain(g.vertex_count(), *uniform_k)) {
                    ++checked;
                    if (report.phases > *bound)
                        violations.push_back("uniform k=" + std::to_string(*uniform_k));
                }
                return;
            }
            if (const auto bound = distsim::phase_bound_partite(*pg, *tv)) {
                ++checked;
                if (report.phases > *bound) violations.push_back("partite sum bound");
            }
            if (pg->partition_count() == 2) {
                if (const auto bound = distsim::phase_bound_bipartite(*pg, *tv)) {
                    ++checked;
                    if (report.phases > *bound)
                        violations.push_back("two-partition crossed bound at phases=" +
                                             std::to_string(report.phases) + " bound=" +
                                             std::to_string(*bound));
                }
            }
        });
    if (!violations.empty()) {
        std::string detail = std::to_string(violations.size()) + " violation(s), first: " +
                             violations.front() + " -- reported, formula kept as printed";
        return {false, detail};
    }
    return {true, std::to_string(checked) + " preconditioned bound checks all within ceiling"};
}

Outcome distributed_agreement(const std::vector<Graph>& plain,
                              const std::vector<PartiteInstance>& partite) {
    std::size_t runs = 0;
    bool ok = true;
    std::string detail;
    std::mt19937_64 seeder(2468);
    for_each_simulation(
        plain, partite,
        [&](const Graph& g, const std::vector<int>& thresholds, const int* uniform_k,
            const PartiteGraph* pg, const ThresholdVector* tv) {
            if (!ok) return;
            ++runs;
            const auto report = distsim::run_sync(g, thresholds);
            std::vector<bool> sequential;
            if (uniform_k != nullptr) {
                sequential = peel_k(g, *uniform_k).active;
            } else {
                sequential = peel_partite(*pg, *tv).active;
            }
            if (report.final_active != sequential) {
                ok = false;
                detail = "run " + std::to_string(runs) + " disagrees with sequential peel";
                return;
            }
            for (int s = 0; s < 30; ++s) {
                const auto shuffled = distsim::run_sync_shuffled(g, thresholds, seeder());
                if (shuffled.final_active != report.final_active ||
                    shuffled.messages_per_phase != report.messages_per_phase ||
                    shuffled.total_messages != report.total_messages ||
                    shuffled.phases != report.phases) {
                    ok = false;
                    detail = "run " + std::to_string(runs) + " changed under delivery seed";
                    return;
                }
            }
        });
    if (!ok) return {false, detail};
    return {true, std::to_string(runs) + " runs agree with peeling, stable under 30 seeds each"};
}

struct GoldenCase {
    const char* file;
    std::string args;
};

std::vector<GoldenCase> golden_cases() {
    const std::string f = COREMINE_FIXTURE_DIR;
    auto ppeel = [&](const char* graph, const char* parts, const char* thresholds) {
        return "ppeel --input " + f + "/" + graph + " --partitions " + f + "/" + parts +
               " --thresholds " + thresholds;
    };
    return {
        {"peel_triangle_k2.txt", "peel --input " + f + "/triangle.txt -k 2"},
        {"peel_path4_k2.txt", "peel --input " + f + "/path4.txt -k 2"},
        {"peel_k4_pendant_k3.txt", "peel --input " + f + "/k4_pendant.txt -k 3"},
        {"peel_two_triangles_k2.txt", "peel --input " + f + "/two_triangles.txt -k 2"},
        {"peel_k5_bridge_k4.txt", "peel --input " + f + "/k5_bridge.txt -k 4"},
        {"peel_isolated_k0.txt", "peel --input " + f + "/isolated.txt -k 0"},
        {"peel_random150_k3.txt", "peel --input " + f + "/random150.txt -k 3"},
        {"peel_planted_k5_k4.txt", "peel --input " + f + "/planted_k5.txt -k 4"},
        {"peel_triangle_k2_structured.txt",
         "peel --input " + f + "/triangle.txt -k 2 --format structured"},
        {"ppeel_k23_3_2.txt", ppeel("k23.txt", "k23.parts", "3,2")},
        {"ppeel_k23_3_3.txt", ppeel("k23.txt", "k23.parts", "3,3")},
        {"ppeel_tripartite_2_2_1.txt", ppeel("tripartite.txt", "tripartite.parts", "2,2,1")},
        {"ppeel_tripartite_2_2_2.txt", ppeel("tripartite.txt", "tripartite.parts", "2,2,2")},
        {"sim_star6_k2.txt", "simulate --input " + f + "/star6.txt -k 2"},
        {"sim_k4_k3.txt", "simulate --input " + f + "/k4.txt -k 3"},
        {"sim_path4_k2.txt", "simulate --input " + f + "/path4.txt -k 2"},
        {"sim_k23_3_3.txt", "simulate --input " + f + "/k23.txt --partitions " + f +
                                "/k23.parts --thresholds 3,3"},
        {"sim_k23_2_2.txt", "simulate --input " + f + "/k23.txt --partitions " + f +
                                "/k23.parts --thresholds 2,2"},
        {"sim_random150_k3.txt", "simulate --input " + f + "/random150.txt -k 3"},
        {"sim_triangle_k2_structured.txt",
         "simulate --input " + f + "/triangle.txt -k 2 --format structured"},
    };
}

Outcome golden_outputs() {
    const std::string bin = COREMINE_BIN_PATH;
    const std::string golden_dir = COREMINE_GOLDEN_DIR;
    const bool update = std::getenv("COREMINE_UPDATE_GOLDEN") != nullptr;

    for (const auto& c : golden_cases()) {
        const auto first = procutil::run_command(bin + " " + c.args + " 2>/dev/null");
        const auto second = procutil::run_command(bin + " " + c.args + " 2>/dev/null");
        if (first.exit_code != 0 || second.exit_code != 0)
            return {false, std::string(c.file) + ": command failed"};
        if (first.output != second.output)
            return {false, std::string(c.file) + ": output differs between runs"};

        const std::string golden_path = golden_dir + "/" + c.file;
        if (update) {
            std::ofstream out(golden_path, std::ios::binary);
            out << first.output;
            continue;
        }
        std::ifstream in(golden_path, std::ios::binary);
        if (!in) return {false, std::string(c.file) + ": golden file missing"};
        std::stringstream contents;
        contents << in.rdbuf();
        if (contents.str() != first.output)
            return {false, std::string(c.file) + ": output does not match golden file"};
    }
    if (update) return {true, "golden files rewritten"};
    return {true, std::to_string(golden_cases().size()) +
                      " commands byte-stable and equal to golden files"};
}

}  // namespace

int main() {
    std::cout << "building instance suites...\n";
    const std::vector<Graph> plain = build_plain_suite();
    const std::vector<PartiteInstance> partite = build_partite_suite();

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"sequential peel equals the fixpoint oracle",
         [&] { return equivalence_with_fixpoint(plain); }},
        {"survivors equal coreness level sets", [&] { return coreness_consistency(plain); }},
        {"partite peel equals its fixpoint oracle", [&] { return partite_equivalence(partite); }},
        {"work is linear in |V|+|E|", [&] { return linear_work(plain, partite); }},
        {"planted cliques survive", [] { return clique_preservation(); }},
        {"message totals stay within 2|E|", [&] { return message_bound(plain, partite); }},
        {"phase counts stay within the stated ceilings",
         [&] { return phase_bounds(plain, partite); }},
        {"simulation agrees with sequential peel under any delivery order",
         [&] { return distributed_agreement(plain, partite); }},
        {"CLI outputs are deterministic and match golden files", [] { return golden_outputs(); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = criteria[i].run();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
                  << criteria[i].name << " -- " << outcome.detail << " (" << std::fixed
                  << std::setprecision(2) << seconds << "s)\n";
    }
    std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failures) << "/"
              << criteria.size() << " criteria passed\n";
    return failures;
}
