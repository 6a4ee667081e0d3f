#include "modnet/modularity.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

namespace modnet {

namespace {

void check_inputs(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("modularity: undefined for a graph with no edges");
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("modularity: partition size does not match vertex count");
}

}  // namespace

ModularityBreakdown modularity(const Graph& g, const Partition& p, double gamma) {
    check_inputs(g, p);
    const std::uint32_t k = p.part_count();
    std::vector<std::uint64_t> vol(k, 0);
    std::vector<std::uint64_t> inside(k, 0);

    std::vector<std::uint32_t> deg = g.degrees();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        vol[p.part_of(v)] += deg[v];
    for (const Edge& e : g.edges()) {
        std::uint32_t a = p.part_of(e.u);
        if (a == p.part_of(e.v)) inside[a] += 1;
    }

    const double edges = static_cast<double>(g.edge_count());
    double ec = 0.0, tax = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) {
        ec += static_cast<double>(inside[i]) / edges;
        double t = static_cast<double>(vol[i]) / (2.0 * edges);
        tax += t * t;
    }
    return {ec, tax, ec - gamma * tax, gamma};
}

double modularity_regular_form(const Graph& g, const Partition& p) {
    check_inputs(g, p);
    std::uint32_t d = 0;
    if (!g.is_regular(&d) || d == 0)
        throw std::invalid_argument("modularity_regular_form: graph is not d-regular with d >= 1");

    const std::uint32_t k = p.part_count();
    std::vector<std::uint64_t> count(k, 0);
    std::vector<std::uint64_t> inside(k, 0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        count[p.part_of(v)] += 1;
    for (const Edge& e : g.edges()) {
        std::uint32_t a = p.part_of(e.u);
        if (a == p.part_of(e.v)) inside[a] += 1;
    }

    const double n = static_cast<double>(g.vertex_count());
    double q = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) {
        double x = static_cast<double>(count[i]) / n;
        double y = 2.0 * static_cast<double>(inside[i]) / static_cast<double>(count[i]);
        q += x * (y / d - x);
    }
    return q;
}

ExactModularityResult exact_modularity(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0)
        throw std::invalid_argument("exact_modularity: undefined for a graph with no edges");
    if (n > 12)
        throw std::invalid_argument("exact_modularity: n > 12 not supported (search space too large)");

    const std::vector<std::uint32_t> deg = g.degrees();
    const std::vector<Edge>& edges = g.edges();
    const double m = static_cast<double>(edges.size());
    const double inv_m = 1.0 / m;
    const double inv_2m = 1.0 / (2.0 * m);

    // Enumerate set partitions as restricted growth strings: a[0] = 0 and
    // a[i] <= b[i] where b[i] = max(a[0..i-1]) + 1 is the smallest unused label.
    std::array<std::uint32_t, 12> a{};
    std::array<std::uint32_t, 12> b{};
    for (std::uint32_t i = 0; i < n; ++i) { a[i] = 0; b[i] = 1; }

    double best_q = -2.0;
    std::vector<std::uint32_t> best(n, 0);

    std::array<double, 12> vol{}, ins{};
    for (;;) {
        // Evaluate q for the current assignment.
        const std::uint32_t used = (n == 1) ? 1 : std::max(b[n - 1], a[n - 1] + 1);
        for (std::uint32_t i = 0; i < used; ++i) { vol[i] = 0.0; ins[i] = 0.0; }
        for (std::uint32_t v = 0; v < n; ++v) vol[a[v]] += deg[v];
        for (const Edge& e : edges)
            if (a[e.u] == a[e.v]) ins[a[e.u]] += 1.0;
        double q = 0.0;
        for (std::uint32_t i = 0; i < used; ++i) {
            double t = vol[i] * inv_2m;
            q += ins[i] * inv_m - t * t;
        }
        if (q > best_q) {
            best_q = q;
            for (std::uint32_t i = 0; i < n; ++i) best[i] = a[i];
        }

        // Successor string: bump the rightmost position that can still grow.
        std::uint32_t i = n - 1;
        while (i > 0 && a[i] == b[i]) --i;
        if (i == 0) break;
        a[i] += 1;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            b[j] = std::max(b[j - 1], a[j - 1] + 1);
        }
    }

    return {best_q, Partition::from_labels(best)};
}

}  // namespace modnet
