#include "modnet/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "modnet/generators.hpp"
#include "modnet/graph.hpp"

namespace modnet {

namespace {

// Least-squares slope of y on x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("regression: degenerate x range");
    return sxy / sxx;
}

}  // namespace

MartingaleCheckResult martingale_check(std::uint32_t m, double c, std::uint32_t n,
                                       std::uint32_t trials, std::uint64_t seed) {
    if (m < 1 || n < 1 || trials < 1)
        throw std::invalid_argument("martingale_check: need m, n, trials >= 1");
    if (!(c > 0.0 && c <= 1.0))
        throw std::invalid_argument("martingale_check: c must be in (0, 1]");
    const auto cn = static_cast<std::uint32_t>(std::floor(c * n));
    if (cn < 1) throw std::invalid_argument("martingale_check: c*n < 1");

    // Checkpoint schedule: floor(cn), then ceil(cn * 1.2^j), capped at n.
    std::vector<std::uint32_t> checkpoints{cn};
    for (double s = c * n * 1.2;; s *= 1.2) {
        auto si = static_cast<std::uint32_t>(std::ceil(s));
        if (si >= n) break;
        if (si > checkpoints.back()) checkpoints.push_back(si);
    }
    if (checkpoints.back() != n) checkpoints.push_back(n);

    const double mn = static_cast<double>(m) * n;
    const double band = std::pow(mn, 2.0 / 3.0);

    MartingaleCheckResult res;
    res.trials = trials;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        Graph g = gen_pa({n, m}, seed + trial);
        const auto& edges = g.edges();

        std::uint64_t y = 0;
        std::size_t next = 0;
        bool ok = true;
        for (std::uint32_t t = 0; t < n; ++t) {
            for (std::uint32_t j = 0; j < m; ++j) {
                const Edge& e = edges[static_cast<std::size_t>(t) * m + j];
                if (e.u < cn) ++y;
                if (e.v < cn) ++y;
            }
            const std::uint32_t s = t + 1;  // vertices present after this block
            if (next < checkpoints.size() && s == checkpoints[next]) {
                const double drift = 2.0 * mn * std::sqrt(c * s / n);
                const double dev = std::abs(static_cast<double>(y) - drift);
                res.worst_deviation_ratio = std::max(res.worst_deviation_ratio, dev / band);
                if (dev > band) ok = false;
                ++next;
            }
        }
        if (!ok) ++res.failures;
    }
    res.pass_fraction = 1.0 - static_cast<double>(res.failures) / trials;
    return res;
}

ComponentCountResult component_count_check(std::uint32_t m, std::uint32_t n,
                                           std::uint32_t trials, std::uint64_t seed) {
    if (m != 1)
        throw std::invalid_argument(
            "component_count_check: only m = 1 carries signal (m >= 2 is connected a.a.s.)");
    if (n < 1 || trials < 1)
        throw std::invalid_argument("component_count_check: need n, trials >= 1");

    ComponentCountResult res;
    for (std::uint32_t t = 1; t <= n; ++t) {
        const double p = 1.0 / (2.0 * t - 1.0);
        res.expected_mean += p;
        res.expected_variance += p * (1.0 - p);
    }

    res.counts.reserve(trials);
    double sum = 0.0;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        Graph g = gen_pa({n, 1}, seed + trial);
        const std::uint32_t comps = connected_components(g).second;
        res.counts.push_back(comps);
        sum += comps;
    }
    res.mean_components = sum / trials;
    return res;
}

double power_law_check(std::uint32_t m, std::uint32_t n, std::uint32_t trials,
                       std::uint64_t seed) {
    if (m < 1 || trials < 1)
        throw std::invalid_argument("power_law_check: need m, trials >= 1");
    if (n < 100) throw std::invalid_argument("power_law_check: insufficient range");
    const auto k_max = static_cast<std::uint32_t>(
        std::floor(std::pow(static_cast<double>(n), 1.0 / 3.0)));
    if (k_max < m + 2) throw std::invalid_argument("power_law_check: insufficient range");

    // Tail counts aggregated over trials: tail[k] = # vertices with degree >= k.
    std::vector<std::uint64_t> tail(k_max + 2, 0);
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        Graph g = gen_pa({n, m}, seed + trial);
        for (std::uint32_t deg : g.degrees()) {
            const std::uint32_t capped = std::min(deg, k_max + 1);
            ++tail[capped];
        }
    }
    for (std::uint32_t k = k_max + 1; k > 0; --k) tail[k - 1] += tail[k];

    std::vector<double> xs, ys;
    for (std::uint32_t k = m; k <= k_max; ++k) {
        if (tail[k] == 0) break;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(static_cast<double>(tail[k]) / (static_cast<double>(trials) * n)));
    }
    if (xs.size() < 3) throw std::invalid_argument("power_law_check: insufficient range");
    return ols_slope(xs, ys);
}

DegreeGrowthResult degree_growth_check(const SPAParams& params, std::uint64_t seed) {
    if (params.n < 100)
        throw std::invalid_argument("degree_growth_check: need n >= 100");
    SpaGraph sg = gen_spa(params, seed);

    const double n = static_cast<double>(params.n);
    std::vector<double> xs, ys;
    for (std::uint32_t bin = 0; bin < 10; ++bin) {
        // Vertices are 0-based; ages use the 1-based arrival index i = v + 1.
        const auto i_lo = static_cast<std::uint64_t>(std::pow(n, bin / 10.0));
        const auto i_hi =
            bin == 9 ? params.n : static_cast<std::uint64_t>(std::pow(n, (bin + 1) / 10.0));
        std::uint32_t max_in = 0;
        for (std::uint64_t i = i_lo; i < i_hi && i <= params.n; ++i)
            max_in = std::max(max_in, sg.in_degree[static_cast<std::size_t>(i - 1)]);
        if (max_in == 0) continue;
        xs.push_back(std::log(n / static_cast<double>(i_lo)));
        ys.push_back(std::log(static_cast<double>(max_in)));
    }
    if (xs.size() < 3)
        throw std::invalid_argument("degree_growth_check: too few populated bins");

    DegreeGrowthResult res;
    res.fitted_exponent = ols_slope(xs, ys);
    std::uint64_t out_sum = 0;
    for (std::uint32_t v = 0; v < params.n; ++v) {
        res.max_out_degree = std::max(res.max_out_degree, sg.out_degree[v]);
        out_sum += sg.out_degree[v];
    }
    res.mean_out_degree = static_cast<double>(out_sum) / n;
    return res;
}

}  // namespace modnet
