#pragma once

#include <cstdint>

#include "modnet/graph.hpp"

namespace modnet {

struct RegularParams {
    std::uint32_t n = 0;          // number of vertices
    std::uint32_t d = 0;          // degree (n * d must be even)
    bool require_simple = false;  // rejection-sample until simple
    std::uint64_t max_tries = 100000;  // rejection cap when require_simple
};

// Random d-regular multigraph from a uniform perfect matching on n*d points
// arranged in n buckets of d points each. With require_simple, samples are
// rejected until loop- and parallel-edge-free (the conditional law is then
// uniform over simple d-regular graphs); throws std::runtime_error when
// max_tries is exhausted. Throws std::invalid_argument when n*d is odd or
// d == 0 with require_simple impossible constraints.
Graph gen_pairing(const RegularParams& params, std::uint64_t seed);

struct PAParams {
    std::uint32_t n = 0;  // number of vertices in the collapsed graph
    std::uint32_t m = 0;  // edges added per vertex (m >= 1)
};

// Preferential-attachment multigraph G_m^n: run the m=1 process for m*n
// steps -- step t attaches vertex t to vertex s with probability
// deg(s, t-1)/(2t-1) and loops with probability 1/(2t-1) -- then collapse
// consecutive blocks of m vertices. The result has exactly n vertices and
// m*n edges, stored in creation order and oriented newer -> older.
Graph gen_pa(const PAParams& params, std::uint64_t seed);

}  // namespace modnet
