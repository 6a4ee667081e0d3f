#include "modnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace modnet {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    if (!out) throw std::runtime_error("edge list write failed");
}

void write_edge_list(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_edge_list(out, g);
}

Graph read_edge_list(std::istream& in) {
    std::string tag;
    std::uint32_t n = 0;
    if (!(in >> tag >> n) || tag != "n")
        throw std::runtime_error("edge list: expected header 'n <count>'");
    std::vector<Edge> edges;
    std::uint32_t u, v;
    while (in >> u >> v) edges.push_back({u, v});
    if (!in.eof() && in.fail())
        throw std::runtime_error("edge list: malformed edge line");

    Graph g(n, edges);  // validates endpoints < n
    if (n > 0 && !edges.empty() && edges.size() % n == 0) {
        const std::size_t m = edges.size() / n;
        bool creation_layout = true;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (edges[j].u != j / m) {
                creation_layout = false;
                break;
            }
        }
        if (creation_layout) g.set_oriented(true);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

void write_partition(std::ostream& out, const Partition& p) {
    for (std::uint32_t v = 0; v < p.size(); ++v) out << v << ' ' << p.part_of(v) << '\n';
    if (!out) throw std::runtime_error("partition write failed");
}

void write_partition(const std::string& path, const Partition& p) {
    auto out = open_out(path);
    write_partition(out, p);
}

Partition read_partition(std::istream& in) {
    std::vector<std::uint32_t> labels;
    std::vector<bool> seen;
    std::uint32_t v, part;
    while (in >> v >> part) {
        if (v >= labels.size()) {
            labels.resize(v + 1, 0);
            seen.resize(v + 1, false);
        }
        if (seen[v]) throw std::runtime_error("partition: vertex listed twice");
        labels[v] = part;
        seen[v] = true;
    }
    if (!in.eof() && in.fail()) throw std::runtime_error("partition: malformed line");
    if (labels.empty()) throw std::runtime_error("partition: empty file");
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::runtime_error("partition: vertex " + std::to_string(i) + " missing");
    return Partition::from_labels(labels);
}

Partition read_partition_file(const std::string& path) {
    auto in = open_in(path);
    return read_partition(in);
}

void write_positions(std::ostream& out, std::uint32_t dim, const std::vector<double>& coords) {
    if (dim == 0) throw std::invalid_argument("positions: dim must be >= 1");
    if (coords.size() % dim != 0)
        throw std::invalid_argument("positions: coordinate count not a multiple of dim");
    out << "dim " << dim << '\n';
    char buf[32];
    const std::size_t n = coords.size() / dim;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::uint32_t k = 0; k < dim; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", coords[v * dim + k]);
            out << (k ? " " : "") << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("positions write failed");
}

void write_positions(const std::string& path, std::uint32_t dim,
                     const std::vector<double>& coords) {
    auto out = open_out(path);
    write_positions(out, dim, coords);
}

Positions read_positions(std::istream& in) {
    std::string tag;
    Positions p;
    if (!(in >> tag >> p.dim) || tag != "dim" || p.dim == 0)
        throw std::runtime_error("positions: expected header 'dim <count>'");
    double x;
    while (in >> x) p.coords.push_back(x);
    if (!in.eof() && in.fail()) throw std::runtime_error("positions: malformed coordinate");
    if (p.coords.size() % p.dim != 0)
        throw std::runtime_error("positions: coordinate count not a multiple of dim");
    return p;
}

Positions read_positions_file(const std::string& path) {
    auto in = open_in(path);
    return read_positions(in);
}

}  // namespace modnet
