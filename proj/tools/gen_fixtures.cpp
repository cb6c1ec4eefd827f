// Regenerates the two synthetic fixture graphs under tests/fixtures/. The
// committed files are authoritative; this tool documents how they were made.
//
//   gen_fixtures <output-dir>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace {

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng()) < p * 18446744073709551616.0;  // p * 2^64
}

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet random_edges(std::uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    EdgeSet edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng, p)) edges.insert({i, j});
        }
    }
    return edges;
}

void write_edges(const std::string& path, int n, const EdgeSet& edges) {
    std::ofstream out(path);
    out << "%vertices";
    for (int i = 0; i < n; ++i) out << " v" << i;
    out << "\n";
    for (const auto& [i, j] : edges) out << "v" << i << " v" << j << "\n";
    std::cout << path << ": " << n << " vertices, " << edges.size() << " edges\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <output-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];

    write_edges(dir + "/random150.txt", 150, random_edges(20240150, 150, 0.03));

    // Random host with a clique planted on v3 v11 v17 v23 v31.
    EdgeSet planted = random_edges(20240055, 40, 0.08);
    const int clique[] = {3, 11, 17, 23, 31};
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b)
            planted.insert({std::min(clique[a], clique[b]), std::max(clique[a], clique[b])});
    }
    write_edges(dir + "/planted_k5.txt", 40, planted);

    return 0;
}
