#include "modnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace modnet {

Graph::Graph(std::uint32_t n, std::vector<Edge> edges, bool oriented)
    : n_(n), edges_(std::move(edges)), oriented_(oriented) {
    for (const Edge& e : edges_) {
        if (e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
    }
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_)
        throw std::invalid_argument("Graph: edge endpoint out of range");
    edges_.push_back({u, v});
}

std::vector<std::uint32_t> Graph::degrees() const {
    std::vector<std::uint32_t> deg(n_, 0);
    for (const Edge& e : edges_) {
        deg[e.u] += 1;
        deg[e.v] += 1;  // a loop hits this twice, as required
    }
    return deg;
}

std::vector<std::vector<std::uint32_t>> Graph::adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(n_);
    for (const Edge& e : edges_) {
        if (e.u == e.v) {
            adj[e.u].push_back(e.v);
        } else {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }
    return adj;
}

bool Graph::is_regular(std::uint32_t* d_out) const {
    std::vector<std::uint32_t> deg = degrees();
    std::uint32_t d = deg.empty() ? 0 : deg[0];
    for (std::uint32_t x : deg)
        if (x != d) return false;
    if (d_out) *d_out = d;
    return true;
}

bool Graph::is_simple() const {
    std::vector<Edge> sorted;
    sorted.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (e.u == e.v) return false;
        sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(sorted.begin(), sorted.end(), [](Edge a, Edge b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return false;
    return true;
}

std::pair<std::vector<std::uint32_t>, std::uint32_t> connected_components(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> adj = g.adjacency();
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    std::uint32_t count = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (label[s] != UINT32_MAX) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : adj[v]) {
                if (label[w] == UINT32_MAX) {
                    label[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return {std::move(label), count};
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return connected_components(g).second == 1;
}

bool is_forest(const Graph& g) {
    for (const Edge& e : g.edges())
        if (e.u == e.v) return false;
    auto [label, count] = connected_components(g);
    (void)label;
    // A forest has exactly n - (#components) edges; anything more is a cycle
    // (this also catches parallel edges).
    return g.edge_count() + count == g.vertex_count();
}

}  // namespace modnet
