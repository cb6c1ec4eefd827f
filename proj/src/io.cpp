#include "coremine/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coremine::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

int parse_positive_int(const std::string& token, const std::string& file, int line) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(token, &consumed);
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected an integer, got '" + token + "'");
    }
    if (consumed != token.size())
        throw ParseError(file, line, "expected an integer, got '" + token + "'");
    if (value < 1) throw ParseError(file, line, "partition index must be >= 1");
    return value;
}

}  // namespace

EdgeListFile read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");

    EdgeListFile out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.front().front() == '%') {
            if (tokens.front() != "%vertices")
                throw ParseError(path.string(), lineno,
                                 "unknown directive '" + tokens.front() + "'");
            out.declared_vertices.insert(out.declared_vertices.end(), tokens.begin() + 1,
                                         tokens.end());
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(path.string(), lineno,
                             "expected two whitespace-separated labels");
        out.edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
    }
    return out;
}

std::vector<std::pair<std::string, int>> read_partition_assignments(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");

    std::vector<std::pair<std::string, int>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError(path.string(), lineno, "expected '<label> <partition-index>'");
        const int index = parse_positive_int(tokens[1], path.string(), lineno);
        out.emplace_back(std::move(tokens[0]), index - 1);
    }
    return out;
}

Graph load_graph(const std::filesystem::path& path) {
    EdgeListFile data = read_edge_list(path);
    return build_graph(data.edges, data.declared_vertices);
}

PartiteGraph load_partite_graph(const std::filesystem::path& graph_path,
                                const std::filesystem::path& partition_path) {
    EdgeListFile data = read_edge_list(graph_path);
    auto assignments = read_partition_assignments(partition_path);
    int partition_count = 1;
    for (const auto& [label, part] : assignments)
        partition_count = std::max(partition_count, part + 1);
    return build_partite_graph(data.edges, assignments, partition_count,
                               data.declared_vertices);
}

}  // namespace coremine::io
