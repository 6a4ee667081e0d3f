#pragma once

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"

namespace modnet {

// q = sum over parts A of  e(A)/|E|  -  gamma * vol(A)^2 / (4|E|^2)
//
// e(A) counts edges with both endpoints in A (a loop counts once, a parallel
// edge with its multiplicity); vol(A) is the sum of degrees in A (a loop
// contributes 2 to its endpoint's degree).
struct ModularityBreakdown {
    double edge_contribution;  // sum e(A)/|E|
    double degree_tax;         // sum vol(A)^2 / (4|E|^2), NOT scaled by gamma
    double q;                  // edge_contribution - gamma * degree_tax
    double gamma;
};

// Throws std::invalid_argument if the graph has no edges (modularity is
// undefined) or if the partition size does not match the vertex count.
ModularityBreakdown modularity(const Graph& g, const Partition& p, double gamma = 1.0);

// Equivalent evaluation for d-regular graphs:
//   q = sum over parts i of x_i * (y_i / d - x_i)
// where x_i = |A_i|/n and y_i = 2 e(A_i)/|A_i| is the average internal
// degree of part i. Throws std::invalid_argument if g is not regular.
double modularity_regular_form(const Graph& g, const Partition& p);

struct ExactModularityResult {
    double q;            // maximum modularity q* (gamma = 1)
    Partition partition; // an argmax partition
};

// Exhaustive maximum over all set partitions of the vertex set, enumerated
// as restricted growth strings. Only feasible for small n; throws
// std::invalid_argument for n > 12 (Bell(12) ~ 4.2e6 partitions).
ExactModularityResult exact_modularity(const Graph& g);

}  // namespace modnet
