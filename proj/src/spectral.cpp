#include "modnet/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "modnet/rng.hpp"

namespace modnet {

namespace {

// y = A x via the edge list (the graph is simple, so no loop handling).
void apply_adjacency(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (const Edge& e : g.edges()) {
        y[e.u] += x[e.v];
        y[e.v] += x[e.u];
    }
}

void project_out_ones(std::vector<double>& x) {
    double mean = 0.0;
    for (double t : x) mean += t;
    mean /= static_cast<double>(x.size());
    for (double& t : x) t -= mean;
}

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double t : x) s += t * t;
    return std::sqrt(s);
}

struct RunResult {
    double mu;        // eigenvalue of A for the converged pair
    double residual;  // ||A x - mu x||_inf
    std::uint64_t iterations;
};

// Power iteration on sign*A + dI, deflated against the all-ones vector.
// Converges to d + sign * extreme eigenvalue; returns that eigenvalue of A.
RunResult shifted_power_iteration(const Graph& g, double d, double sign, double tol,
                                  std::uint64_t max_iter, Rng& rng) {
    const std::uint32_t n = g.vertex_count();
    std::vector<double> x(n), ax(n), bx(n);
    for (double& t : x) t = rng.uniform_double() - 0.5;
    project_out_ones(x);
    double nx = norm2(x);
    if (nx == 0.0) { x[0] = 1.0; x[n - 1] = -1.0; nx = std::sqrt(2.0); }
    for (double& t : x) t /= nx;

    double mu_a = 0.0, residual = 0.0;
    for (std::uint64_t it = 1; it <= max_iter; ++it) {
        apply_adjacency(g, x, ax);
        // b = (sign*A + dI) x;  Rayleigh quotient mu_b = x.b (x is unit).
        double mu_b = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            bx[i] = sign * ax[i] + d * x[i];
            mu_b += x[i] * bx[i];
        }
        // Residual of the corresponding eigenpair of A: mu_a = sign*(mu_b - d),
        // and ||A x - mu_a x||_inf == ||B x - mu_b x||_inf.
        mu_a = sign * (mu_b - d);
        residual = 0.0;
        for (std::uint32_t i = 0; i < n; ++i)
            residual = std::max(residual, std::abs(bx[i] - mu_b * x[i]));
        if (residual <= tol * d) return {mu_a, residual, it};

        project_out_ones(bx);
        double nb = norm2(bx);
        if (nb == 0.0)
            throw std::runtime_error("second_eigenvalue: iterate collapsed to zero");
        for (std::uint32_t i = 0; i < n; ++i) x[i] = bx[i] / nb;
    }
    throw std::runtime_error("second_eigenvalue: no convergence after " +
                             std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")");
}

}  // namespace

SpectralSummary second_eigenvalue(const Graph& g, double tol, std::uint64_t max_iter,
                                  std::uint64_t seed) {
    std::uint32_t d = 0;
    if (!g.is_regular(&d) || d == 0)
        throw std::invalid_argument("second_eigenvalue: graph must be d-regular, d >= 1");
    if (!g.is_simple())
        throw std::invalid_argument("second_eigenvalue: graph must be simple");
    if (!is_connected(g))
        throw std::invalid_argument("second_eigenvalue: graph must be connected");
    if (g.vertex_count() < 2)
        throw std::invalid_argument("second_eigenvalue: need n >= 2");

    Rng rng(seed);
    const double dd = static_cast<double>(d);
    RunResult top = shifted_power_iteration(g, dd, +1.0, tol, max_iter, rng);  // lambda_2
    RunResult bot = shifted_power_iteration(g, dd, -1.0, tol, max_iter, rng);  // lambda_n

    const bool top_wins = std::abs(top.mu) >= std::abs(bot.mu);
    return {dd, std::max(std::abs(top.mu), std::abs(bot.mu)),
            top.iterations + bot.iterations,
            top_wins ? top.residual : bot.residual};
}

}  // namespace modnet
