#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaoalab/rng.hpp"

namespace qaoalab {

// Exhaustive enumeration / statevector capacity ceiling (2^24 entries).
inline constexpr int kMaxVertices = 24;

// Undirected simple graph. Edges are stored normalized (j < k) and sorted,
// so two graphs with the same edge set compare equal.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Graph&) const = default;
};

inline void validate_graph(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("graph: vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto [j, k] : g.edges) {
        if (j < 0 || k < 0 || j >= g.n || k >= g.n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (j == k) throw std::invalid_argument("graph: self-loop");
        if (!seen.insert(std::minmax(j, k)).second)
            throw std::invalid_argument("graph: duplicate edge");
    }
}

struct MaxCutSolution {
    int c_max = 0;
    std::string witness; // character position j = side of vertex j
};

namespace detail {

inline std::vector<std::pair<int, int>> normalize_edges(std::vector<std::pair<int, int>> edges) {
    for (auto& [j, k] : edges)
        if (j > k) std::swap(j, k);
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace detail

// Random d-regular graph via the pairing (configuration) model: shuffle the
// n*d half-edge stubs, pair them consecutively, and restart from scratch on
// any self-loop or duplicate edge. Deterministic under the seed.
inline Graph generate_regular(int n, int d, std::uint64_t seed) {
    if (n < 2 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("generate_regular: need n >= 2, d < n, n*d even");

    constexpr int kMaxRestarts = 10000;
    SplitMix64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int restart = 0; restart < kMaxRestarts; ++restart) {
        for (int v = 0; v < n; ++v)
            for (int s = 0; s < d; ++s) stubs[static_cast<std::size_t>(v) * d + s] = v;
        rng.shuffle(stubs);

        std::set<std::pair<int, int>> edge_set;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const auto e = std::minmax(stubs[i], stubs[i + 1]);
            if (e.first == e.second || !edge_set.insert(e).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        Graph g{n, {edge_set.begin(), edge_set.end()}};
        return g;
    }
    throw std::runtime_error("generate_regular: restart budget exhausted");
}

// G(n, prob): each of the n(n-1)/2 possible edges included independently.
inline Graph generate_erdos_renyi(int n, double prob, std::uint64_t seed) {
    if (n < 2 || !(prob >= 0.0 && prob <= 1.0))
        throw std::invalid_argument("generate_erdos_renyi: need n >= 2 and prob in [0, 1]");

    SplitMix64 rng(seed);
    Graph g{n, {}};
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (rng.next_double() < prob) g.edges.emplace_back(j, k);
    return g;
}

// Number of edges crossing the partition encoded by `assignment`, where bit j
// of the integer is the side of vertex j (vertex 0 = least significant bit).
inline int cut_value(const Graph& g, std::uint64_t assignment) {
    int cut = 0;
    for (auto [j, k] : g.edges)
        cut += static_cast<int>(((assignment >> j) ^ (assignment >> k)) & 1ULL);
    return cut;
}

inline std::uint64_t bitstring_to_index(const std::string& bits) {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1')
            index |= 1ULL << j;
        else if (bits[j] != '0')
            throw std::invalid_argument("bitstring: characters must be '0' or '1'");
    }
    return index;
}

inline std::string index_to_bitstring(std::uint64_t index, int n) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((index >> j) & 1ULL) bits[static_cast<std::size_t>(j)] = '1';
    return bits;
}

// Bitstring overload: character position j = side of vertex j.
inline int cut_value(const Graph& g, const std::string& assignment) {
    if (static_cast<int>(assignment.size()) != g.n)
        throw std::invalid_argument("cut_value: assignment length must equal vertex count");
    return cut_value(g, bitstring_to_index(assignment));
}

// Exhaustive Max-Cut. Fixes vertex 0 on side 0, which is lossless because a
// cut and its complement have the same value.
inline MaxCutSolution max_cut_bruteforce(const Graph& g) {
    if (g.n > kMaxVertices)
        throw std::length_error("max_cut_bruteforce: vertex count exceeds enumeration limit");
    if (g.edges.empty())
        throw std::runtime_error("max_cut_bruteforce: graph has no edges (max cut degenerate)");

    const std::uint64_t half = 1ULL << (g.n - 1);
    int best = -1;
    std::uint64_t best_bits = 0;
    for (std::uint64_t m = 0; m < half; ++m) {
        const std::uint64_t bits = m << 1; // vertex 0 fixed to side 0
        const int c = cut_value(g, bits);
        if (c > best) {
            best = c;
            best_bits = bits;
        }
    }
    return {best, index_to_bitstring(best_bits, g.n)};
}

// Text format: first line "n m", then one "j k" line per edge.
inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [j, k] : g.edges) out << j << ' ' << k << '\n';
}

inline Graph read_graph(std::istream& in) {
    int n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("read_graph: malformed header, expected \"n m\"");
    Graph g{n, {}};
    g.edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        int j = 0, k = 0;
        if (!(in >> j >> k)) throw std::runtime_error("read_graph: truncated edge list");
        g.edges.emplace_back(j, k);
    }
    g.edges = detail::normalize_edges(std::move(g.edges));
    validate_graph(g);
    return g;
}

inline void save_graph(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_graph: cannot open " + path.string());
    write_graph(out, g);
}

inline Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_graph: cannot open " + path.string());
    return read_graph(in);
}

} // namespace qaoalab
