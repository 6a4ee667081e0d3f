#pragma once

// Small graph builders and samplers shared by the unit and acceptance tests.

#include <cstdint>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"
#include "modnet/rng.hpp"

namespace testutil {

inline modnet::Graph path_graph(std::uint32_t n) {
    modnet::Graph g(n);
    for (std::uint32_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline modnet::Graph cycle_graph(std::uint32_t n) {
    modnet::Graph g(n);
    for (std::uint32_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline modnet::Graph complete_graph(std::uint32_t n) {
    modnet::Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Star with `leaves` leaves; vertex 0 is the center.
inline modnet::Graph star_graph(std::uint32_t leaves) {
    modnet::Graph g(leaves + 1);
    for (std::uint32_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Complete bipartite graph K_{a,b}: vertices 0..a-1 vs a..a+b-1.
inline modnet::Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
    modnet::Graph g(a + b);
    for (std::uint32_t u = 0; u < a; ++u)
        for (std::uint32_t v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// 3-regular Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
inline modnet::Graph petersen_graph() {
    modnet::Graph g(10);
    for (std::uint32_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// Two disjoint triangles {0,1,2} and {3,4,5} plus a bridge 2-3 when asked.
inline modnet::Graph two_triangles(bool bridged) {
    modnet::Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    if (bridged) g.add_edge(2, 3);
    return g;
}

inline modnet::Partition parts(const std::vector<std::uint32_t>& labels) {
    return modnet::Partition::from_labels(labels);
}

// Uniform random multigraph: n vertices, `edges` endpoint pairs drawn
// uniformly with replacement (loops and parallel edges possible).
inline modnet::Graph random_multigraph(std::uint32_t n, std::uint32_t edges, modnet::Rng& rng) {
    modnet::Graph g(n);
    for (std::uint32_t i = 0; i < edges; ++i) {
        auto u = static_cast<std::uint32_t>(rng.uniform_below(n));
        auto v = static_cast<std::uint32_t>(rng.uniform_below(n));
        g.add_edge(u, v);
    }
    return g;
}

// Random labeled tree via a random attachment sequence: vertex v >= 1 hangs
// off a uniform earlier vertex.
inline modnet::Graph random_tree(std::uint32_t n, modnet::Rng& rng) {
    modnet::Graph g(n);
    for (std::uint32_t v = 1; v < n; ++v)
        g.add_edge(static_cast<std::uint32_t>(rng.uniform_below(v)), v);
    return g;
}

// Random partition of {0..n-1} into at most k labels (labels may be unused;
// from_labels compacts them).
inline modnet::Partition random_partition(std::uint32_t n, std::uint32_t k, modnet::Rng& rng) {
    std::vector<std::uint32_t> labels(n);
    for (std::uint32_t v = 0; v < n; ++v)
        labels[v] = static_cast<std::uint32_t>(rng.uniform_below(k));
    return modnet::Partition::from_labels(labels);
}

}  // namespace testutil
