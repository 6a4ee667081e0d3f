#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"

namespace modnet {

// Plain-text graph exchange format:
//
//   n <vertex_count>
//   u v
//   u v
//   ...
//
// One edge per line in creation order; a loop appears as "v v". On read,
// creation-order orientation is re-detected: when |E| is a positive multiple
// of n and every edge j has u == j / (|E|/n), the graph is marked oriented
// (the layout produced by the preferential-attachment generator).
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::string& path, const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Partition exchange format: one "vertex part_id" line per vertex, vertices
// in increasing order. Part ids are renumbered by first occurrence on read,
// so write/read round-trips reproduce the labels exactly.
void write_partition(std::ostream& out, const Partition& p);
void write_partition(const std::string& path, const Partition& p);
Partition read_partition(std::istream& in);
Partition read_partition_file(const std::string& path);

// Vertex coordinates (the "<out>.pos" companion of a spatial graph):
//
//   dim <dimension>
//   x0 x1 ... x{dim-1}      (one line per vertex, creation order)
//
// Coordinates are written with enough digits to round-trip doubles.
struct Positions {
    std::uint32_t dim = 0;
    std::vector<double> coords;  // flat, vertex-major: size = n * dim

    std::uint32_t vertex_count() const {
        return dim == 0 ? 0 : static_cast<std::uint32_t>(coords.size() / dim);
    }
};

void write_positions(std::ostream& out, std::uint32_t dim, const std::vector<double>& coords);
void write_positions(const std::string& path, std::uint32_t dim,
                     const std::vector<double>& coords);
Positions read_positions(std::istream& in);
Positions read_positions_file(const std::string& path);

}  // namespace modnet
