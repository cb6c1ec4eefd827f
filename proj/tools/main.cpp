// Command-line front end: loads edge-list graphs, runs core mining, the
// full decomposition, the synchronized protocol simulation, and the oracle
// cross-checks. Exit codes: 0 success, 1 verification failure, 2 input error.

#include "coremine/distsim.hpp"
#include "coremine/io.hpp"
#include "coremine/oracle.hpp"
#include "coremine/peel.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace coremine;

struct Options {
    std::string input;
    std::string partitions;
    std::string format = "text";
    std::string k_range;
    int k = 0;
    std::vector<int> thresholds;
};

bool structured(const Options& opt) { return opt.format == "structured"; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

// Cores as sorted label lines, lines themselves sorted, then a summary of
// the surviving subgraph.
void print_core_listing(const Graph& g, const PeelResult& result, const Options& opt) {
    const CoreList cores = extract_cores(g, result);
    const Graph survivor = induced_subgraph(g, result.active);

    std::vector<std::vector<std::string>> label_sets;
    label_sets.reserve(cores.cores.size());
    for (const auto& core : cores.cores) {
        std::vector<std::string> labels;
        labels.reserve(core.size());
        for (VertexId v : core) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        label_sets.push_back(std::move(labels));
    }
    std::sort(label_sets.begin(), label_sets.end());

    if (structured(opt)) {
        for (const auto& labels : label_sets) {
            json record{{"type", "core"}, {"size", labels.size()}, {"labels", labels}};
            std::cout << record.dump() << "\n";
        }
        json summary{{"type", "summary"},
                     {"cores", label_sets.size()},
                     {"vertices", survivor.vertex_count()},
                     {"edges", survivor.edge_count()}};
        std::cout << summary.dump() << "\n";
    } else {
        for (const auto& labels : label_sets) std::cout << join(labels, " ") << "\n";
        std::cout << "cores=" << label_sets.size() << " vertices=" << survivor.vertex_count()
                  << " edges=" << survivor.edge_count() << "\n";
    }
}

int cmd_peel(const Options& opt) {
    const Graph g = io::load_graph(opt.input);
    print_core_listing(g, peel_k(g, opt.k), opt);
    return 0;
}

int cmd_ppeel(const Options& opt) {
    const PartiteGraph pg = io::load_partite_graph(opt.input, opt.partitions);
    print_core_listing(pg.graph(), peel_partite(pg, opt.thresholds), opt);
    return 0;
}

int cmd_decompose(const Options& opt) {
    const Graph g = io::load_graph(opt.input);
    const auto decomposition = oracle::core_decomposition(g);

    std::vector<std::pair<std::string, int>> rows;
    rows.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        rows.emplace_back(g.label(v), decomposition.coreness[v]);
    std::sort(rows.begin(), rows.end());

    if (structured(opt)) {
        for (const auto& [label, coreness] : rows) {
            json record{{"type", "coreness"}, {"label", label}, {"coreness", coreness}};
            std::cout << record.dump() << "\n";
        }
        json summary{{"type", "summary"},
                     {"vertices", g.vertex_count()},
                     {"max_coreness", decomposition.max_coreness()}};
        std::cout << summary.dump() << "\n";
    } else {
        for (const auto& [label, coreness] : rows)
            std::cout << label << " " << coreness << "\n";
        std::cout << "vertices=" << g.vertex_count()
                  << " max_coreness=" << decomposition.max_coreness() << "\n";
    }
    return 0;
}

void print_sim_report(const distsim::SimReport& report, std::uint64_t bound_2e,
                      std::optional<long> bound_phases, const Options& opt) {
    if (structured(opt)) {
        json record{{"phases", report.phases},
                    {"total_messages", report.total_messages},
                    {"bound_2E", bound_2e},
                    {"messages_per_phase", report.messages_per_phase},
                    {"active_count", report.active_count()}};
        if (bound_phases) record["bound_phases"] = *bound_phases;
        std::cout << record.dump() << "\n";
        return;
    }
    std::vector<std::string> counts;
    counts.reserve(report.messages_per_phase.size());
    for (auto c : report.messages_per_phase) counts.push_back(std::to_string(c));
    std::cout << "phases=" << report.phases << " total_messages=" << report.total_messages
              << " bound_2E=" << bound_2e;
    if (bound_phases) std::cout << " bound_phases=" << *bound_phases;
    std::cout << " messages_per_phase=" << join(counts, ",")
              << " active_count=" << report.active_count() << "\n";
}

int cmd_simulate(const Options& opt, bool partite) {
    if (partite) {
        const PartiteGraph pg = io::load_partite_graph(opt.input, opt.partitions);
        const auto report = distsim::run_sync(pg.graph(), distsim::partite_thresholds(pg, opt.thresholds));
        const auto bound = pg.partition_count() == 2
                               ? distsim::phase_bound_bipartite(pg, opt.thresholds)
                               : distsim::phase_bound_partite(pg, opt.thresholds);
        print_sim_report(report, 2 * pg.graph().edge_count(), bound, opt);
    } else {
        const Graph g = io::load_graph(opt.input);
        const auto report = distsim::run_sync(g, distsim::uniform_thresholds(g, opt.k));
        const auto bound = distsim::phase_bound_plain(g.vertex_count(), opt.k);
        print_sim_report(report, 2 * g.edge_count(), bound, opt);
    }
    return 0;
}

std::pair<int, int> parse_k_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw GraphError("bad k range '" + text + "', expected <lo>..<hi>");
    try {
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        if (lo < 0 || hi < lo) throw GraphError("bad k range '" + text + "'");
        return {lo, hi};
    } catch (const GraphError&) {
        throw;
    } catch (const std::exception&) {
        throw GraphError("bad k range '" + text + "', expected <lo>..<hi>");
    }
}

int cmd_verify(const Options& opt) {
    const Graph g = io::load_graph(opt.input);

    int lo = 0;
    int hi = 0;
    if (opt.k_range.empty()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            hi = std::max(hi, g.degree(v));
        hi += 1;
    } else {
        std::tie(lo, hi) = parse_k_range(opt.k_range);
    }

    const auto decomposition = oracle::core_decomposition(g);
    int failures = 0;
    int checks = 0;
    for (int k = lo; k <= hi; ++k) {
        const PeelResult result = peel_k(g, k);
        const std::vector<bool> reference = oracle::fixpoint_peel(g, k);
        const bool fixpoint_ok = result.active == reference;
        bool coreness_ok = true;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (result.active[v] != (decomposition.coreness[v] >= k)) coreness_ok = false;
        }
        checks += 2;
        failures += (fixpoint_ok ? 0 : 1) + (coreness_ok ? 0 : 1);
        if (structured(opt)) {
            json record{{"type", "check"},
                        {"k", k},
                        {"fixpoint", fixpoint_ok ? "PASS" : "FAIL"},
                        {"coreness", coreness_ok ? "PASS" : "FAIL"}};
            std::cout << record.dump() << "\n";
        } else {
            std::cout << "k=" << k << " fixpoint=" << (fixpoint_ok ? "PASS" : "FAIL")
                      << " coreness=" << (coreness_ok ? "PASS" : "FAIL") << "\n";
        }
    }
    if (structured(opt)) {
        json summary{{"type", "summary"},
                     {"verify", failures == 0 ? "PASS" : "FAIL"},
                     {"checks", checks},
                     {"failures", failures}};
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << "verify=" << (failures == 0 ? "PASS" : "FAIL") << " checks=" << checks
                  << " failures=" << failures << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"core mining over edge-list graphs"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "edge-list file")->required();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
    };

    auto* peel = app.add_subcommand("peel", "list the k-cores of a graph");
    add_common(peel);
    peel->add_option("-k", opt.k, "degree threshold")->required()->check(CLI::NonNegativeNumber);

    auto* ppeel = app.add_subcommand("ppeel", "list the (k_1,...,k_p)-cores of a partite graph");
    add_common(ppeel);
    ppeel->add_option("--partitions", opt.partitions, "partition assignment file")->required();
    ppeel->add_option("--thresholds", opt.thresholds, "per-partition thresholds, e.g. 3,2")
        ->required()
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);

    auto* decompose = app.add_subcommand("decompose", "coreness of every vertex");
    add_common(decompose);

    auto* simulate = app.add_subcommand("simulate", "run the synchronized off-message protocol");
    add_common(simulate);
    auto* sim_k = simulate->add_option("-k", opt.k, "uniform degree threshold")
                      ->check(CLI::NonNegativeNumber);
    auto* sim_parts = simulate->add_option("--partitions", opt.partitions,
                                           "partition assignment file");
    auto* sim_thresholds =
        simulate->add_option("--thresholds", opt.thresholds, "per-partition thresholds")
            ->delimiter(',')
            ->check(CLI::NonNegativeNumber);
    sim_parts->needs(sim_thresholds);
    sim_thresholds->needs(sim_parts);
    sim_k->excludes(sim_thresholds);

    auto* verify = app.add_subcommand("verify", "cross-check the peeler against the oracles");
    add_common(verify);
    verify->add_option("--k-range", opt.k_range, "inclusive range, e.g. 0..4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (peel->parsed()) return cmd_peel(opt);
        if (ppeel->parsed()) return cmd_ppeel(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
        if (simulate->parsed()) {
            const bool partite = sim_parts->count() > 0;
            if (!partite && sim_k->count() == 0)
                throw GraphError("simulate requires -k or --partitions with --thresholds");
            return cmd_simulate(opt, partite);
        }
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
