#pragma once

#include <cstdint>
#include <vector>

#include "modnet/graph.hpp"

namespace modnet {

enum class Norm { Linf, L2 };

struct SPAParams {
    std::uint32_t n = 0;    // number of vertices
    std::uint32_t dim = 2;  // torus dimension (>= 1)
    double a1 = 1.0;        // sphere-of-influence degree coefficient (>= 0)
    double a2 = 1.0;        // sphere-of-influence offset (> 0)
    double p = 0.7;         // link probability (in [0, 1])
    Norm norm = Norm::Linf;
};

// Spatial preferential-attachment graph on the unit torus [0,1)^dim.
// Vertex t arrives at a uniform position and links (directed newer -> older,
// independently with probability p) to every existing vertex u whose sphere
// of influence covers it: torus_distance(x_t, x_u) <= radius of a ball of
// volume sphere_volume(indeg(u, t-1), t-1, a1, a2).
struct SpaGraph {
    SPAParams params;
    std::vector<double> positions;          // n * dim doubles, row-major
    std::vector<Edge> edges;                // creation order, u = newer endpoint
    std::vector<std::uint32_t> in_degree;   // final in-degrees
    std::vector<std::uint32_t> out_degree;  // final out-degrees
};

// min{ (a1 * indeg + a2) / t, 1 }. Throws std::invalid_argument for t < 1.
double sphere_volume(std::uint64_t indeg, std::uint64_t t, double a1, double a2);

// Torus metric: min over integer shifts in {-1,0,1}^dim of the p-norm of
// x - y + shift. Throws std::invalid_argument on dimension mismatch.
double torus_distance(const std::vector<double>& x, const std::vector<double>& y, Norm norm);

// Radius of a torus ball of the given volume (<= 1). For Linf the inversion
// (2r)^dim = vol is exact for every volume up to 1. For L2 the closed-form
// Euclidean inversion is used (dim <= 3 only; throws otherwise); for volumes
// large enough that r > 1/2 the nominal volume slightly overstates the true
// torus coverage.
double ball_radius(double volume, std::uint32_t dim, Norm norm);

SpaGraph gen_spa(const SPAParams& params, std::uint64_t seed);

// Forget directions: the undirected link graph (simple by construction,
// since every edge points from a strictly newer to a strictly older vertex
// and a newer vertex links to any older one at most once).
Graph undirect(const SpaGraph& sg);

}  // namespace modnet
