#pragma once

#include <cstdint>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/modularity.hpp"
#include "modnet/partition.hpp"
#include "modnet/spa.hpp"

namespace modnet {

// Edge of `tree` whose removal maximizes the smaller of the two component
// volumes (per-vertex volumes supplied by the caller, typically degrees in a
// host graph). Ties resolve to the smallest edge index; the index returned
// refers to tree.edges(). Throws std::invalid_argument if the input is not
// a tree with at least one edge or volumes has the wrong length.
std::size_t centroid_edge(const Graph& tree, const std::vector<std::uint64_t>& volumes);

// Volume-bounded decomposition of a connected host graph: take a BFS
// spanning tree from vertex 0, then repeatedly remove the centroid edge of
// any remaining component whose host volume exceeds h (components processed
// in decreasing volume). Every resulting part is connected with volume <= h,
// and whenever a split happened each part also has volume >= h/Delta - 1.
// A single vertex whose own volume exceeds h (possible only when h < Delta)
// cannot be split and is kept whole. Throws std::invalid_argument if g is
// disconnected or h <= 0.
Partition decompose_connected(const Graph& g, double h);

// Forest clustering achieving q >= 1 - 3 sqrt(Delta/n) on a forest with n
// non-isolated vertices and at least one edge: whole trees of volume at most
// h = max(sqrt(Delta * n), 2 Delta) become parts, larger trees are split via
// centroid-edge decomposition (the 2 Delta floor keeps degenerate forests
// such as a lone edge in one piece; the bound still holds). Isolated
// vertices become singleton parts. Throws std::invalid_argument if the
// input has a cycle or no vertices.
Partition partition_forest(const Graph& f);

// Connected-graph clustering achieving
//   q >= 2/dbar - 3 sqrt(Delta/(n dbar)) - Delta/(n dbar)
// via decompose_connected with h = sqrt(n * Delta * dbar) + Delta, where
// dbar is the average degree. Throws std::invalid_argument if g is
// disconnected or edgeless.
Partition partition_avg_degree(const Graph& g);

// Two-coloring of a preferential-attachment graph by sequential majority:
// the first floor(eps*n/4) vertices are seeded red, the rest of the first
// floor(eps*n) blue; every later vertex t counts how many of its m creation
// edges target a red vertex and becomes red when that count exceeds m/2
// (fair coin at exactly m/2, possible only for even m; a self-loop target
// is t itself, still uncolored, and never counts as red). Requires the
// creation-order orientation produced by gen_pa; throws
// std::invalid_argument when that metadata is missing, |E| is not a
// multiple of n, or eps*n/4 < 1.
Partition majority_color_pa(const Graph& g, double eps = 0.05, std::uint64_t seed = 0);

// Default strip count used by strip_partition when omega == 0:
//   max(1, round(n^(min(1/dim, 1 - p*a1)/2) / sqrt(ln n))).
std::uint32_t default_strip_count(const SPAParams& params);

// Partition a spatial graph into omega equal-width strips along coordinate
// 0 (strip r covers [r/omega, (r+1)/omega)). omega == 0 selects the default
// count above. Empty strips are dropped by label normalization.
Partition strip_partition(const SpaGraph& sg, std::uint32_t omega = 0);

struct RefineResult {
    Partition partition;
    double q;              // modularity of the refined partition (gamma = 1)
    std::uint32_t passes;  // sweeps performed (including the final no-move sweep)
    std::uint64_t moves;   // total accepted vertex moves
};

// Greedy local search: sweep vertices in a seeded random order, moving a
// vertex to the neighboring part that most increases modularity; only
// strictly improving moves are applied, so the modularity never decreases.
// Stops after a sweep with no accepted move or after max_passes sweeps.
RefineResult local_search_refine(const Graph& g, const Partition& p,
                                 std::uint32_t max_passes, std::uint64_t seed);

}  // namespace modnet
