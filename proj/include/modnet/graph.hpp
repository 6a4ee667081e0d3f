#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modnet {

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
};

inline bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }

// Undirected multigraph on vertex set {0, ..., n-1}. Loops and parallel
// edges are allowed. Edges are stored in insertion order; generators that
// grow a graph vertex-by-vertex rely on that order being preserved.
//
// When `oriented()` is true each stored edge additionally records its
// construction direction: edge.u is the endpoint that created the edge
// (the newer vertex) and edge.v its target. This metadata is what the
// preferential-attachment replay partitioner consumes.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t n) : n_(n) {}
    Graph(std::uint32_t n, std::vector<Edge> edges, bool oriented = false);

    std::uint32_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool oriented() const { return oriented_; }
    void set_oriented(bool o) { oriented_ = o; }

    void add_edge(std::uint32_t u, std::uint32_t v);

    // Degree of each vertex; a loop contributes 2 to its endpoint, so the
    // degrees always sum to exactly 2 * edge_count().
    std::vector<std::uint32_t> degrees() const;

    // Neighbor multiset per vertex: parallel edges repeat the neighbor and a
    // loop lists the vertex itself once.
    std::vector<std::vector<std::uint32_t>> adjacency() const;

    // True iff all degrees are equal; the common degree is written to *d_out
    // when given. An edgeless graph is 0-regular.
    bool is_regular(std::uint32_t* d_out = nullptr) const;

    // True iff the graph has no loop and no parallel edge.
    bool is_simple() const;

private:
    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    bool oriented_ = false;
};

// True iff every vertex is reachable from vertex 0 (false for n == 0).
bool is_connected(const Graph& g);

// Component label per vertex (labels are 0..count-1 in order of the lowest
// vertex id contained) plus the number of components.
std::pair<std::vector<std::uint32_t>, std::uint32_t> connected_components(const Graph& g);

// True iff g contains no cycle; loops and parallel edges are cycles.
bool is_forest(const Graph& g);

}  // namespace modnet
