#pragma once

#include "coremine/graph.hpp"
#include "coremine/partite.hpp"

#include <filesystem>

namespace coremine::io {

class ParseError : public GraphError {
public:
    ParseError(const std::string& file, int line, const std::string& message)
        : GraphError(line > 0 ? file + ":" + std::to_string(line) + ": " + message
                              : file + ": " + message) {}
};

/// Raw contents of an edge-list file before graph construction.
struct EdgeListFile {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> declared_vertices;
};

/// UTF-8 text, one edge per line as two whitespace-separated labels. Lines
/// beginning with '#' are comments; lines of the form
/// "%vertices a b c" declare vertices that may have no incident edges.
EdgeListFile read_edge_list(const std::filesystem::path& path);

/// One "label index" pair per line, partition indices 1-based in the file,
/// returned 0-based. '#' comments allowed.
std::vector<std::pair<std::string, int>> read_partition_assignments(
    const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path);

/// Partition count is the largest index present in the partition file.
PartiteGraph load_partite_graph(const std::filesystem::path& graph_path,
                                const std::filesystem::path& partition_path);

}  // namespace coremine::io
