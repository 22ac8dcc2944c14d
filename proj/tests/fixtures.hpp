#pragma once

// Named graphs and graph batteries shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "edgecone/graph.hpp"

namespace edgecone::fixtures {

using EdgeList = std::vector<std::pair<VertexIndex, VertexIndex>>;

inline Graph single_edge() { return Graph::numbered(2, {{0, 1}}); }

inline Graph triangle() { return Graph::numbered(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// Star with leaves v1, v2, v3 and center v4.
inline Graph k13() { return Graph::numbered(4, {{0, 3}, {1, 3}, {2, 3}}); }

/// K_{m,n} with the m-side on v1..vm.
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
    EdgeList e;
    for (VertexIndex i = 0; i < m; ++i)
        for (VertexIndex j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph::numbered(m + n, e);
}

inline Graph cycle(std::size_t n) {
    EdgeList e;
    for (VertexIndex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::numbered(n, e);
}

inline Graph path(std::size_t n) {
    EdgeList e;
    for (VertexIndex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::numbered(n, e);
}

inline Graph discrete(std::size_t n) { return Graph::numbered(n, {}); }

inline std::vector<std::pair<VertexIndex, VertexIndex>> all_pairs(std::size_t n) {
    EdgeList pairs;
    for (VertexIndex i = 0; i < n; ++i)
        for (VertexIndex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

/// Every labeled graph on n vertices (2^(n choose 2) of them).
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
    const auto pairs = all_pairs(n);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        EdgeList e;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1u) e.push_back(pairs[k]);
        out.push_back(Graph::numbered(n, e));
    }
    return out;
}

inline std::vector<Graph> connected_labeled_graphs(std::size_t n) {
    std::vector<Graph> out;
    for (auto& g : all_labeled_graphs(n))
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

/// Random connected graph on n vertices, edge density drawn per graph.
inline Graph random_connected(std::size_t n, std::mt19937_64& rng) {
    const auto pairs = all_pairs(n);
    while (true) {
        const double p = 0.25 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
        EdgeList e;
        for (const auto& pr : pairs)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) e.push_back(pr);
        Graph g = Graph::numbered(n, e);
        if (g.is_connected()) return g;
    }
}

/// Random connected bipartite graph on n vertices with a random side split;
/// vertex labels are shuffled so sides are interleaved.
inline Graph random_connected_bipartite(std::size_t n, std::mt19937_64& rng) {
    while (true) {
        std::vector<VertexIndex> perm(n);
        for (VertexIndex i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const std::size_t m = 1 + rng() % (n - 1);
        const double p = 0.3 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
        EdgeList e;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = m; j < n; ++j)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < p) e.emplace_back(perm[i], perm[j]);
        Graph g = Graph::numbered(n, e);
        if (g.is_connected()) return g;
    }
}

/// Connected graphs: every labeled one on 1..5 vertices plus `random_count`
/// random ones on 6-7 vertices (fixed seed).
inline std::vector<Graph> connected_battery(std::size_t random_count = 500, std::uint64_t seed = 20240611) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= 5; ++n)
        for (auto& g : connected_labeled_graphs(n)) out.push_back(std::move(g));
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) out.push_back(random_connected(6 + k % 2, rng));
    return out;
}

}  // namespace edgecone::fixtures
