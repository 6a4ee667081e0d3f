#pragma once

#include <cstdint>
#include <vector>

#include "modnet/spa.hpp"

namespace modnet {

// Concentration check for the volume of the oldest floor(c*n) vertices in a
// preferential-attachment graph. For each trial, the graph process is
// replayed edge-by-edge tracking Y_s = sum of degrees of vertices
// 0..floor(c*n)-1 after s vertices exist; the trial passes when
// |Y_s - 2mn*sqrt(cs/n)| <= (mn)^(2/3) at every checkpoint
// s in {ceil(cn * 1.2^j)} ∩ [floor(cn), n] (plus s = n itself).
struct MartingaleCheckResult {
    double pass_fraction = 0.0;
    std::uint32_t trials = 0;
    std::uint32_t failures = 0;
    // Largest |Y_s - 2mn*sqrt(cs/n)| / (mn)^(2/3) seen across all trials and
    // checkpoints; a value < 1 means every checkpoint passed with margin.
    double worst_deviation_ratio = 0.0;
};

MartingaleCheckResult martingale_check(std::uint32_t m, double c, std::uint32_t n,
                                       std::uint32_t trials, std::uint64_t seed);

// Component statistics of the m=1 preferential-attachment graph, where
// components are born by self-loops and never merge, so the count is a sum
// of independent Bernoulli(1/(2t-1)) indicators.
struct ComponentCountResult {
    double mean_components = 0.0;
    double expected_mean = 0.0;      // sum over t of 1/(2t-1)
    double expected_variance = 0.0;  // sum over t of p_t * (1 - p_t)
    std::vector<std::uint32_t> counts;  // one entry per trial
};

// Throws std::invalid_argument unless m == 1 (larger m graphs are almost
// always connected, so the count carries no signal).
ComponentCountResult component_count_check(std::uint32_t m, std::uint32_t n,
                                           std::uint32_t trials, std::uint64_t seed);

// Log-log slope of the degree complementary CDF of preferential-attachment
// graphs, fitted by least squares over integer degrees k in [m, n^(1/3)]
// with counts aggregated across trials. The degree distribution's k^(-3)
// tail makes the expected slope -2. Throws std::invalid_argument
// ("insufficient range") when n < 100 or fewer than 3 fit points remain.
double power_law_check(std::uint32_t m, std::uint32_t n, std::uint32_t trials,
                       std::uint64_t seed);

// Fit of the spatial model's in-degree growth law: vertices are binned by
// age into 10 geometric bins [n^(j/10), n^((j+1)/10)), and the log of the
// maximum in-degree per bin is regressed on log(n / i_min). The slope
// estimates p*A1 (old vertices accumulate in-degree like (n/i)^(p*A1)).
struct DegreeGrowthResult {
    double fitted_exponent = 0.0;
    std::uint32_t max_out_degree = 0;
    double mean_out_degree = 0.0;
};

DegreeGrowthResult degree_growth_check(const SPAParams& params, std::uint64_t seed);

}  // namespace modnet
