#include "modnet/partitioners.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "modnet/rng.hpp"

namespace modnet {

namespace {

// Rooted traversal data for one component of a forest, reused across splits.
struct TraversalScratch {
    std::vector<std::uint32_t> order;        // preorder vertex sequence
    std::vector<std::uint32_t> parent;       // by vertex
    std::vector<std::uint32_t> parent_edge;  // tree-edge id towards parent
    std::vector<std::uint64_t> subvol;       // subtree volume
    std::vector<std::uint32_t> stack;
};

using ForestAdj = std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;

// Split every component of the forest (adjacency lists of (neighbor,
// edge-id) pairs) by repeated centroid-edge removal until each component has
// volume <= h or is a single vertex. Components are processed in decreasing
// volume, ties by creation order. Returns a part label per vertex.
std::vector<std::uint32_t> split_to_volume(std::uint32_t n, const ForestAdj& adj,
                                           std::size_t edge_count,
                                           const std::vector<std::uint64_t>& vol, double h) {
    std::vector<char> removed(edge_count, 0);
    std::vector<std::uint32_t> labels(n, 0);

    struct Comp {
        std::vector<std::uint32_t> verts;
        std::uint64_t vol = 0;
        std::uint64_t stamp = 0;
    };
    auto later = [](const Comp& a, const Comp& b) {
        return a.vol != b.vol ? a.vol < b.vol : a.stamp > b.stamp;
    };
    std::priority_queue<Comp, std::vector<Comp>, decltype(later)> queue(later);
    std::uint64_t stamp = 0;

    {
        // Initial components in vertex order.
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> stack;
        for (std::uint32_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            Comp c;
            c.vol = 0;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                std::uint32_t v = stack.back();
                stack.pop_back();
                c.verts.push_back(v);
                c.vol += vol[v];
                for (auto [w, eid] : adj[v]) {
                    (void)eid;
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            c.stamp = stamp++;
            queue.push(std::move(c));
        }
    }

    TraversalScratch ts;
    ts.parent.assign(n, 0);
    ts.parent_edge.assign(n, UINT32_MAX);
    ts.subvol.assign(n, 0);
    std::vector<char> side(n, 0);
    std::uint32_t next_label = 0;

    while (!queue.empty()) {
        Comp c = queue.top();
        queue.pop();
        if (static_cast<double>(c.vol) <= h || c.verts.size() < 2) {
            for (std::uint32_t v : c.verts) labels[v] = next_label;
            ++next_label;
            continue;
        }

        // Rooted traversal of the component from its first vertex.
        const std::uint32_t root = c.verts[0];
        ts.order.clear();
        ts.stack.assign(1, root);
        ts.parent[root] = root;
        ts.parent_edge[root] = UINT32_MAX;
        while (!ts.stack.empty()) {
            std::uint32_t v = ts.stack.back();
            ts.stack.pop_back();
            ts.order.push_back(v);
            for (auto [w, eid] : adj[v]) {
                if (removed[eid] || eid == ts.parent_edge[v]) continue;
                ts.parent[w] = v;
                ts.parent_edge[w] = eid;
                ts.stack.push_back(w);
            }
        }

        // Subtree volumes by reverse preorder accumulation.
        for (std::uint32_t v : ts.order) ts.subvol[v] = vol[v];
        for (std::size_t i = ts.order.size(); i-- > 1;) {
            std::uint32_t v = ts.order[i];
            ts.subvol[ts.parent[v]] += ts.subvol[v];
        }

        // Centroid edge: maximize the smaller side; ties -> smallest edge id.
        std::uint64_t best_min = 0;
        std::uint32_t best_eid = UINT32_MAX, best_child = UINT32_MAX;
        for (std::size_t i = 1; i < ts.order.size(); ++i) {
            std::uint32_t v = ts.order[i];
            std::uint64_t small = std::min(ts.subvol[v], c.vol - ts.subvol[v]);
            std::uint32_t eid = ts.parent_edge[v];
            if (small > best_min || (small == best_min && eid < best_eid)) {
                best_min = small;
                best_eid = eid;
                best_child = v;
            }
        }

        removed[best_eid] = 1;

        // Gather the child side of the removed edge; the remainder is the
        // other side.
        Comp child_side, other_side;
        ts.stack.assign(1, best_child);
        for (std::uint32_t v : c.verts) side[v] = 0;
        side[best_child] = 1;
        while (!ts.stack.empty()) {
            std::uint32_t v = ts.stack.back();
            ts.stack.pop_back();
            child_side.verts.push_back(v);
            child_side.vol += vol[v];
            for (auto [w, eid] : adj[v]) {
                if (removed[eid] || side[w]) continue;
                side[w] = 1;
                ts.stack.push_back(w);
            }
        }
        for (std::uint32_t v : c.verts) {
            if (!side[v]) {
                other_side.verts.push_back(v);
                other_side.vol += vol[v];
            }
        }
        child_side.stamp = stamp++;
        other_side.stamp = stamp++;
        queue.push(std::move(child_side));
        queue.push(std::move(other_side));
    }
    return labels;
}

}  // namespace

std::size_t centroid_edge(const Graph& tree, const std::vector<std::uint64_t>& volumes) {
    const std::uint32_t n = tree.vertex_count();
    if (volumes.size() != n)
        throw std::invalid_argument("centroid_edge: volumes length must equal vertex count");
    if (tree.edge_count() == 0)
        throw std::invalid_argument("centroid_edge: tree has no edge");
    if (!is_forest(tree) || !is_connected(tree))
        throw std::invalid_argument("centroid_edge: input is not a tree");

    ForestAdj adj(n);
    for (std::size_t i = 0; i < tree.edge_count(); ++i) {
        const Edge& e = tree.edges()[i];
        adj[e.u].push_back({e.v, static_cast<std::uint32_t>(i)});
        adj[e.v].push_back({e.u, static_cast<std::uint32_t>(i)});
    }

    std::vector<std::uint32_t> order, parent(n, 0), parent_edge(n, UINT32_MAX), stack{0u};
    std::vector<std::uint64_t> subvol(n, 0);
    std::uint64_t total = std::accumulate(volumes.begin(), volumes.end(), std::uint64_t{0});
    parent[0] = 0;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto [w, eid] : adj[v]) {
            if (eid == parent_edge[v]) continue;
            parent[w] = v;
            parent_edge[w] = eid;
            stack.push_back(w);
        }
    }
    for (std::uint32_t v : order) subvol[v] = volumes[v];
    for (std::size_t i = order.size(); i-- > 1;) subvol[parent[order[i]]] += subvol[order[i]];

    std::uint64_t best_min = 0;
    std::uint32_t best_eid = UINT32_MAX;
    for (std::size_t i = 1; i < order.size(); ++i) {
        std::uint32_t v = order[i];
        std::uint64_t small = std::min(subvol[v], total - subvol[v]);
        std::uint32_t eid = parent_edge[v];
        if (small > best_min || (small == best_min && eid < best_eid)) {
            best_min = small;
            best_eid = eid;
        }
    }
    return best_eid;
}

Partition decompose_connected(const Graph& g, double h) {
    if (h <= 0.0) throw std::invalid_argument("decompose_connected: h must be > 0");
    if (!is_connected(g)) throw std::invalid_argument("decompose_connected: graph must be connected");

    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> deg32 = g.degrees();
    std::vector<std::uint64_t> vol(deg32.begin(), deg32.end());

    // BFS spanning tree from vertex 0; tree edges numbered in discovery order.
    ForestAdj tree(n);
    {
        std::vector<std::vector<std::uint32_t>> adj = g.adjacency();
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> bfs{0u};
        seen[0] = 1;
        std::uint32_t next_edge = 0;
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            std::uint32_t v = bfs[head];
            for (std::uint32_t w : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                tree[v].push_back({w, next_edge});
                tree[w].push_back({v, next_edge});
                ++next_edge;
                bfs.push_back(w);
            }
        }
    }

    return Partition::from_labels(split_to_volume(n, tree, n > 0 ? n - 1 : 0, vol, h));
}

Partition partition_forest(const Graph& f) {
    const std::uint32_t n = f.vertex_count();
    if (n == 0) throw std::invalid_argument("partition_forest: empty forest");
    if (!is_forest(f)) throw std::invalid_argument("partition_forest: input has a cycle");

    std::vector<std::uint32_t> deg32 = f.degrees();
    std::vector<std::uint64_t> vol(deg32.begin(), deg32.end());
    std::uint64_t active = 0, delta = 0;
    for (std::uint32_t d : deg32) {
        if (d > 0) ++active;
        delta = std::max<std::uint64_t>(delta, d);
    }
    // h = sqrt(Delta * n) drives the 1 - 3 sqrt(Delta/n) bound; the 2*Delta
    // floor only matters for forests so small that the bound is vacuous and
    // keeps splits from shattering tiny trees (a lone edge stays one part).
    const double h = std::max(std::sqrt(static_cast<double>(delta) * static_cast<double>(active)),
                              2.0 * static_cast<double>(delta));

    ForestAdj adj(n);
    for (std::size_t i = 0; i < f.edge_count(); ++i) {
        const Edge& e = f.edges()[i];
        adj[e.u].push_back({e.v, static_cast<std::uint32_t>(i)});
        adj[e.v].push_back({e.u, static_cast<std::uint32_t>(i)});
    }
    return Partition::from_labels(split_to_volume(n, adj, f.edge_count(), vol, h));
}

Partition partition_avg_degree(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("partition_avg_degree: graph has no edges");
    if (!is_connected(g))
        throw std::invalid_argument("partition_avg_degree: graph must be connected");

    const double n = static_cast<double>(g.vertex_count());
    const double dbar = 2.0 * static_cast<double>(g.edge_count()) / n;
    std::uint64_t delta = 0;
    for (std::uint32_t d : g.degrees()) delta = std::max<std::uint64_t>(delta, d);
    const double h = std::sqrt(n * static_cast<double>(delta) * dbar) + static_cast<double>(delta);
    return decompose_connected(g, h);
}

Partition majority_color_pa(const Graph& g, double eps, std::uint64_t seed) {
    const std::uint32_t n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0)
        throw std::invalid_argument("majority_color_pa: empty graph");
    if (!g.oriented())
        throw std::invalid_argument("majority_color_pa: creation-order metadata missing");
    if (g.edge_count() % n != 0)
        throw std::invalid_argument("majority_color_pa: edge count is not a multiple of n");
    const std::uint32_t m = static_cast<std::uint32_t>(g.edge_count() / n);

    const auto red_end = static_cast<std::uint32_t>(std::floor(eps * n / 4.0));
    const auto blue_end = static_cast<std::uint32_t>(std::floor(eps * n));
    if (red_end < 1 || blue_end <= red_end || blue_end > n)
        throw std::invalid_argument("majority_color_pa: eps * n too small to seed both colors");

    // Sanity-check the orientation layout: vertex t's creation edges are the
    // block [t*m, (t+1)*m) with source t.
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        if (g.edges()[j].u != j / m)
            throw std::invalid_argument("majority_color_pa: creation-order metadata missing");
    }

    Rng rng(seed);
    std::vector<std::uint32_t> color(n, 0);  // 0 = red, 1 = blue
    for (std::uint32_t v = red_end; v < blue_end; ++v) color[v] = 1;

    for (std::uint32_t t = blue_end; t < n; ++t) {
        // Count red targets among this vertex's creation edges.  A self-loop
        // target is the still-uncolored vertex itself, so it never counts as
        // red (the decision threshold stays at m/2 regardless).
        std::uint32_t red = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            std::uint32_t target = g.edges()[static_cast<std::size_t>(t) * m + j].v;
            if (target != t && color[target] == 0) ++red;
        }
        if (2 * red > m) color[t] = 0;
        else if (2 * red < m) color[t] = 1;
        else color[t] = rng.bernoulli(0.5) ? 0 : 1;
    }
    return Partition::from_labels(color);
}

std::uint32_t default_strip_count(const SPAParams& params) {
    const double n = static_cast<double>(params.n);
    if (params.n < 2) return 1;
    const double expo =
        std::min(1.0 / static_cast<double>(params.dim), 1.0 - params.p * params.a1) / 2.0;
    const double raw = std::pow(n, expo) / std::sqrt(std::log(n));
    const double rounded = std::round(raw);
    return rounded < 1.0 ? 1u : static_cast<std::uint32_t>(rounded);
}

Partition strip_partition(const SpaGraph& sg, std::uint32_t omega) {
    const std::uint32_t n = sg.params.n;
    if (n == 0) throw std::invalid_argument("strip_partition: empty graph");
    if (omega == 0) omega = default_strip_count(sg.params);

    std::vector<std::uint32_t> labels(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        double x0 = sg.positions[static_cast<std::size_t>(v) * sg.params.dim];
        auto r = static_cast<std::uint32_t>(x0 * omega);
        labels[v] = std::min(r, omega - 1);
    }
    return Partition::from_labels(labels);
}

RefineResult local_search_refine(const Graph& g, const Partition& p,
                                 std::uint32_t max_passes, std::uint64_t seed) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("local_search_refine: graph has no edges");
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("local_search_refine: partition size mismatch");

    const std::uint32_t n = g.vertex_count();
    const double E = static_cast<double>(g.edge_count());
    std::vector<std::uint32_t> labels = p.labels();
    std::uint32_t k = p.part_count();

    std::vector<std::uint32_t> deg = g.degrees();
    std::vector<double> vol(k, 0.0);
    for (std::uint32_t v = 0; v < n; ++v) vol[labels[v]] += deg[v];

    // Neighbor lists without loops (loops travel with the vertex and cancel
    // out of every move gain).
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    Rng rng(seed);
    std::vector<std::uint32_t> visit(n);
    std::iota(visit.begin(), visit.end(), 0);
    std::vector<double> links(k, 0.0);     // edges v -> part, for touched parts
    std::vector<std::uint32_t> touched;

    // Accept only gains clearly above floating-point noise so sweeps cannot
    // cycle on ties.
    const double min_gain = 1e-12;
    std::uint64_t moves = 0;
    std::uint32_t passes = 0;

    while (passes < max_passes) {
        ++passes;
        rng.shuffle(visit);
        std::uint64_t pass_moves = 0;
        for (std::uint32_t v : visit) {
            const std::uint32_t a = labels[v];
            touched.clear();
            for (std::uint32_t w : adj[v]) {
                std::uint32_t pb = labels[w];
                if (links[pb] == 0.0) touched.push_back(pb);
                links[pb] += 1.0;
            }
            const double dv = static_cast<double>(deg[v]);
            const double e_va = links[a];
            double best_gain = min_gain;
            std::uint32_t best_part = a;
            for (std::uint32_t b : touched) {
                if (b == a) continue;
                // Gain of moving v from part a to part b (gamma = 1):
                //   (e_vb - e_va)/E - dv * (vol_b - vol_a + dv) / (2 E^2)
                double gain = (links[b] - e_va) / E -
                              dv * (vol[b] - vol[a] + dv) / (2.0 * E * E);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_part = b;
                }
            }
            for (std::uint32_t b : touched) links[b] = 0.0;
            if (best_part != a) {
                labels[v] = best_part;
                vol[a] -= dv;
                vol[best_part] += dv;
                ++pass_moves;
            }
        }
        moves += pass_moves;
        if (pass_moves == 0) break;
    }

    Partition refined = Partition::from_labels(labels);
    double q = modularity(g, refined).q;
    return {std::move(refined), q, passes, moves};
}

}  // namespace modnet
