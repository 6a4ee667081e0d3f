#include "modnet/expansion.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "modnet/rng.hpp"

namespace modnet {

EdgeCounts edge_counts(const Graph& g, const std::vector<std::uint32_t>& S) {
    std::vector<char> in(g.vertex_count(), 0);
    for (std::uint32_t v : S) {
        if (v >= g.vertex_count())
            throw std::invalid_argument("edge_counts: vertex out of range");
        if (in[v])
            throw std::invalid_argument("edge_counts: repeated vertex in subset");
        in[v] = 1;
    }
    EdgeCounts c{0, 0};
    for (const Edge& e : g.edges()) {
        const int cnt = in[e.u] + (e.u == e.v ? in[e.u] : in[e.v]);
        if (cnt == 2) c.inside += 1;
        else if (cnt == 1) c.boundary += 1;
    }
    return c;
}

double isoperimetric_number(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("isoperimetric_number: need n >= 2");
    if (n > 24) throw std::invalid_argument("isoperimetric_number: n > 24 not supported");

    // Fix vertex n-1 outside S so each split is scanned exactly once.
    const std::uint32_t bits = n - 1;
    double best = -1.0;
    for (std::uint32_t mask = 1; mask < (1u << bits); ++mask) {
        std::uint64_t cut = 0;
        for (const Edge& e : g.edges()) {
            if (e.u == e.v) continue;
            bool iu = e.u < bits && ((mask >> e.u) & 1u);
            bool iv = e.v < bits && ((mask >> e.v) & 1u);
            if (iu != iv) ++cut;
        }
        std::uint32_t s = static_cast<std::uint32_t>(std::popcount(mask));
        double value = static_cast<double>(cut) / static_cast<double>(std::min(s, n - s));
        if (best < 0.0 || value < best) best = value;
    }
    return best;
}

ExpansionCheckResult check_expansion_inequality(const Graph& g, double lambda,
                                                std::uint32_t trials, std::uint64_t seed) {
    const std::uint32_t n = g.vertex_count();
    std::uint32_t d = 0;
    if (!g.is_regular(&d) || d == 0)
        throw std::invalid_argument("check_expansion_inequality: graph must be d-regular, d >= 1");
    if (n < 2)
        throw std::invalid_argument("check_expansion_inequality: need n >= 2");

    Rng rng(seed);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> in(n, 0);

    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        const std::uint32_t size = 1 + static_cast<std::uint32_t>(rng.uniform_below(n / 2));
        // Partial Fisher-Yates: the first `size` entries become a uniform subset.
        for (std::uint32_t i = 0; i < size; ++i) {
            std::uint32_t j = i + static_cast<std::uint32_t>(rng.uniform_below(n - i));
            std::swap(perm[i], perm[j]);
        }
        std::fill(in.begin(), in.end(), 0);
        for (std::uint32_t i = 0; i < size; ++i) in[perm[i]] = 1;

        std::uint64_t inside = 0, cut = 0;
        for (const Edge& e : g.edges()) {
            const int cnt = in[e.u] + (e.u == e.v ? in[e.u] : in[e.v]);
            if (cnt == 2) ++inside;
            else if (cnt == 1) ++cut;
        }

        const double s = static_cast<double>(size);
        const double nn = static_cast<double>(n);
        const double x = s / nn;
        const double cut_floor = (d - lambda) * s * (nn - s) / nn;
        const double inside_cap = (d * x + lambda * (1.0 - x)) * x * nn / 2.0;
        // Tiny relative slack absorbs floating-point noise in the bound values.
        const double eps_lo = 1e-9 * std::max(1.0, cut_floor);
        const double eps_hi = 1e-9 * std::max(1.0, inside_cap);
        if (static_cast<double>(cut) < cut_floor - eps_lo ||
            static_cast<double>(inside) > inside_cap + eps_hi) {
            return {false, std::vector<std::uint32_t>(perm.begin(), perm.begin() + size)};
        }
    }
    return {true, {}};
}

}  // namespace modnet
