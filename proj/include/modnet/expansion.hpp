#pragma once

#include <cstdint>
#include <vector>

#include "modnet/graph.hpp"

namespace modnet {

struct EdgeCounts {
    std::uint64_t inside;    // edges with both endpoints in S (loops count once)
    std::uint64_t boundary;  // edges with exactly one endpoint in S
};

// Count internal and boundary edges of the vertex subset S.
// Throws std::invalid_argument on out-of-range or repeated vertices.
EdgeCounts edge_counts(const Graph& g, const std::vector<std::uint32_t>& S);

// Isoperimetric number  rho = min over proper non-empty S of
// e(S, V\S) / min(|S|, |V\S|), computed by scanning all 2^(n-1) splits.
// Returns 0 for disconnected graphs. Throws std::invalid_argument for
// n > 24 or n < 2.
double isoperimetric_number(const Graph& g);

struct ExpansionCheckResult {
    bool pass;
    std::vector<std::uint32_t> witness;  // violating subset when !pass, else empty
};

// Samples `trials` random subsets (size uniform in 1..n/2, then a uniform
// subset of that size) and checks both spectral expansion inequalities for a
// d-regular graph with second eigenvalue bound `lambda`:
//   e(S, V\S) >= (d - lambda) |S| |V\S| / n
//   e(S)      <= (d x + lambda (1 - x)) x n / 2,   x = |S|/n
// Returns the first violating subset, if any.
ExpansionCheckResult check_expansion_inequality(const Graph& g, double lambda,
                                                std::uint32_t trials, std::uint64_t seed);

}  // namespace modnet
