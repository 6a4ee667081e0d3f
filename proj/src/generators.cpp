#include "modnet/generators.hpp"

#include <numeric>
#include <stdexcept>

#include "modnet/rng.hpp"

namespace modnet {

namespace {

// One pairing attempt: shuffle the n*d points and match consecutive pairs,
// which induces a uniform perfect matching.
Graph pairing_attempt(const RegularParams& p, Rng& rng, std::vector<std::uint32_t>& points) {
    std::iota(points.begin(), points.end(), 0);
    rng.shuffle(points);
    Graph g(p.n);
    for (std::size_t i = 0; i + 1 < points.size(); i += 2)
        g.add_edge(points[i] / p.d, points[i + 1] / p.d);
    return g;
}

}  // namespace

Graph gen_pairing(const RegularParams& params, std::uint64_t seed) {
    if (params.n == 0)
        throw std::invalid_argument("gen_pairing: n must be >= 1");
    const std::uint64_t nd = static_cast<std::uint64_t>(params.n) * params.d;
    if (nd % 2 != 0)
        throw std::invalid_argument("gen_pairing: n * d must be even");
    if (params.require_simple && params.d >= params.n)
        throw std::invalid_argument("gen_pairing: no simple d-regular graph exists for d >= n");

    Rng rng(seed);
    std::vector<std::uint32_t> points(nd);
    if (!params.require_simple)
        return pairing_attempt(params, rng, points);

    for (std::uint64_t attempt = 0; attempt < params.max_tries; ++attempt) {
        Graph g = pairing_attempt(params, rng, points);
        if (g.is_simple()) return g;
    }
    throw std::runtime_error("gen_pairing: no simple graph within max_tries attempts");
}

Graph gen_pa(const PAParams& params, std::uint64_t seed) {
    if (params.n == 0 || params.m == 0)
        throw std::invalid_argument("gen_pa: need n >= 1 and m >= 1");

    Rng rng(seed);
    const std::uint64_t steps = static_cast<std::uint64_t>(params.n) * params.m;

    // Flat endpoint list: after t steps it holds 2t entries and vertex s
    // appears exactly deg(s, t) times, so a uniform pick is degree-biased.
    // At step t the target law over {v_1..v_t} needs 2t-1 equally likely
    // slots: the 2(t-1) existing endpoints plus one slot for "loop at v_t".
    std::vector<std::uint32_t> ends;
    ends.reserve(2 * steps);
    std::vector<Edge> edges;
    edges.reserve(steps);

    for (std::uint64_t t = 1; t <= steps; ++t) {
        const std::uint32_t self = static_cast<std::uint32_t>(t - 1);  // 0-based id of v_t
        const std::uint64_t slot = rng.uniform_below(2 * t - 1);
        const std::uint32_t target =
            slot == 2 * t - 2 ? self : ends[static_cast<std::size_t>(slot)];
        edges.push_back({self, target});
        ends.push_back(self);
        ends.push_back(target);
    }

    // Collapse blocks of m consecutive small-step vertices into one vertex.
    if (params.m > 1) {
        for (Edge& e : edges) {
            e.u /= params.m;
            e.v /= params.m;
        }
    }
    return Graph(params.n, std::move(edges), /*oriented=*/true);
}

}  // namespace modnet
