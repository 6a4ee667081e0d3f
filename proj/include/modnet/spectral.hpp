#pragma once

#include <cstdint>

#include "modnet/graph.hpp"

namespace modnet {

struct SpectralSummary {
    double lambda1;        // = d for a connected d-regular graph
    double lambda;         // max(|lambda_2|, |lambda_n|)
    std::uint64_t iterations;  // total power-iteration steps over both runs
    double residual;       // ||A x - mu x||_inf of the winning eigenpair
};

// Second-largest adjacency eigenvalue magnitude of a simple connected
// d-regular graph, via power iteration restricted to the orthogonal
// complement of the all-ones vector.
//
// Two shifted runs are used so both spectrum ends converge monotonically:
// A + dI (all eigenvalues >= 0, dominant deflated value d + lambda_2) and
// dI - A (dominant deflated value d - lambda_n). The reported lambda is the
// larger of |lambda_2| and |lambda_n|. Each run stops when the eigenpair
// residual against A drops below tol * d; exceeding max_iter throws
// std::runtime_error with the residual in the message.
SpectralSummary second_eigenvalue(const Graph& g, double tol = 1e-7,
                                  std::uint64_t max_iter = 200000,
                                  std::uint64_t seed = 12345);

}  // namespace modnet
