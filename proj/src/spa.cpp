#include "modnet/spa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "modnet/rng.hpp"

namespace modnet {

double sphere_volume(std::uint64_t indeg, std::uint64_t t, double a1, double a2) {
    if (t < 1) throw std::invalid_argument("sphere_volume: t must be >= 1");
    double v = (a1 * static_cast<double>(indeg) + a2) / static_cast<double>(t);
    return v < 1.0 ? v : 1.0;
}

namespace {

double torus_dist_raw(const double* x, const double* y, std::uint32_t dim, Norm norm) {
    double acc = 0.0;
    for (std::uint32_t i = 0; i < dim; ++i) {
        double d = std::abs(x[i] - y[i]);
        if (d > 0.5) d = 1.0 - d;  // wrap-around is never farther than half the torus
        if (norm == Norm::Linf) {
            acc = std::max(acc, d);
        } else {
            acc += d * d;
        }
    }
    return norm == Norm::Linf ? acc : std::sqrt(acc);
}

}  // namespace

double torus_distance(const std::vector<double>& x, const std::vector<double>& y, Norm norm) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("torus_distance: dimension mismatch");
    return torus_dist_raw(x.data(), y.data(), static_cast<std::uint32_t>(x.size()), norm);
}

double ball_radius(double volume, std::uint32_t dim, Norm norm) {
    if (volume <= 0.0 || volume > 1.0)
        throw std::invalid_argument("ball_radius: volume must be in (0, 1]");
    if (norm == Norm::Linf)
        return 0.5 * std::pow(volume, 1.0 / dim);
    constexpr double pi = std::numbers::pi;
    switch (dim) {
        case 1: return volume / 2.0;
        case 2: return std::sqrt(volume / pi);
        case 3: return std::cbrt(volume * 3.0 / (4.0 * pi));
        default:
            throw std::invalid_argument("ball_radius: L2 norm supported only for dim <= 3");
    }
}

namespace {

// Neighbor index over the torus. Vertices are bucketed by dyadic radius
// class: class j holds vertices whose influence radius is at most 2^-j, in a
// uniform grid with 2^j cells per axis. A query visits the 3^dim cells
// around the query point in every non-empty class, which keeps per-step work
// proportional to the number of genuine candidates instead of the reach of
// the single largest sphere. Radii only shrink as t grows, so a stored class
// stays valid until the vertex's in-degree changes (relocation) or a global
// rebuild retightens all classes (at every power-of-two step).
class SpatialIndex {
public:
    SpatialIndex(std::uint32_t dim, const std::vector<double>& positions)
        : dim_(dim), positions_(positions) {
        max_class_ = std::min<std::uint32_t>(21, 62 / dim_);
        grids_.resize(max_class_ + 1);
        counts_.assign(max_class_ + 1, 0);
        where_.clear();
    }

    static std::uint32_t class_of(double radius) {
        // Smallest j with 2^-j >= radius, clamped below at 0.
        if (radius >= 0.5) return 0;
        int j = static_cast<int>(std::floor(-std::log2(radius)));
        return j < 0 ? 0u : static_cast<std::uint32_t>(j);
    }

    void insert(std::uint32_t v, double radius) {
        std::uint32_t j = std::min(class_of(radius), max_class_);
        std::uint64_t key = cell_key(j, positions_.data() + static_cast<std::size_t>(v) * dim_);
        grids_[j][key].push_back(v);
        counts_[j] += 1;
        if (v >= where_.size()) where_.resize(v + 1);
        where_[v] = {j, key};
    }

    // Move v to the class matching its new radius when the stored cell can
    // no longer cover it (or is needlessly fine after a rebuild).
    void update(std::uint32_t v, double radius) {
        std::uint32_t j = std::min(class_of(radius), max_class_);
        if (j == where_[v].first) return;
        remove(v);
        std::uint64_t key = cell_key(j, positions_.data() + static_cast<std::size_t>(v) * dim_);
        grids_[j][key].push_back(v);
        counts_[j] += 1;
        where_[v] = {j, key};
    }

    // All vertices whose cell neighborhood contains x, gathered in
    // deterministic (sorted) order. Callers still test true distances.
    void gather_candidates(const double* x, std::vector<std::uint32_t>& out) const {
        out.clear();
        for (std::uint32_t j = 0; j <= max_class_; ++j) {
            if (counts_[j] == 0) continue;
            const std::uint64_t cells = 1ull << j;
            const std::uint32_t dims = dim_;
            // Per-axis candidate coordinates with wraparound, deduplicated
            // (coarse grids with 1 or 2 cells per axis would repeat cells).
            std::vector<std::uint64_t> scratch;
            std::uint64_t total = 1;
            std::vector<std::vector<std::uint64_t>> per_axis(dims);
            for (std::uint32_t a = 0; a < dims; ++a) {
                std::uint64_t c = coord(j, x[a]);
                scratch.clear();
                scratch.push_back((c + cells - 1) % cells);
                scratch.push_back(c);
                scratch.push_back((c + 1) % cells);
                std::sort(scratch.begin(), scratch.end());
                scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
                per_axis[a] = scratch;
                total *= per_axis[a].size();
            }
            // Cartesian product of the per-axis coordinate sets.
            std::vector<std::uint64_t> idx(dims, 0);
            for (std::uint64_t it = 0; it < total; ++it) {
                std::uint64_t key = 0;
                for (std::uint32_t a = 0; a < dims; ++a)
                    key = key * cells + per_axis[a][idx[a]];
                auto found = grids_[j].find(key);
                if (found != grids_[j].end())
                    out.insert(out.end(), found->second.begin(), found->second.end());
                for (std::uint32_t a = 0; a < dims; ++a) {
                    if (++idx[a] < per_axis[a].size()) break;
                    idx[a] = 0;
                }
            }
        }
        std::sort(out.begin(), out.end());
    }

    // Re-tighten every class using the current radii.
    void rebuild(const std::vector<double>& radii, std::uint32_t upto) {
        for (auto& g : grids_) g.clear();
        std::fill(counts_.begin(), counts_.end(), 0);
        for (std::uint32_t v = 0; v < upto; ++v) insert(v, radii[v]);
    }

private:
    void remove(std::uint32_t v) {
        auto [j, key] = where_[v];
        auto& vec = grids_[j][key];
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i] == v) {
                vec[i] = vec.back();
                vec.pop_back();
                break;
            }
        }
        if (vec.empty()) grids_[j].erase(key);
        counts_[j] -= 1;
    }

    std::uint64_t coord(std::uint32_t j, double x) const {
        const std::uint64_t cells = 1ull << j;
        auto c = static_cast<std::uint64_t>(x * static_cast<double>(cells));
        return c >= cells ? cells - 1 : c;
    }

    std::uint64_t cell_key(std::uint32_t j, const double* x) const {
        const std::uint64_t cells = 1ull << j;
        std::uint64_t key = 0;
        for (std::uint32_t a = 0; a < dim_; ++a) key = key * cells + coord(j, x[a]);
        return key;
    }

    std::uint32_t dim_;
    const std::vector<double>& positions_;
    std::uint32_t max_class_;
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> grids_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> where_;
};

void validate(const SPAParams& p) {
    if (p.n == 0) throw std::invalid_argument("gen_spa: n must be >= 1");
    if (p.dim == 0) throw std::invalid_argument("gen_spa: dim must be >= 1");
    if (p.a1 < 0.0) throw std::invalid_argument("gen_spa: a1 must be >= 0");
    if (p.a2 <= 0.0) throw std::invalid_argument("gen_spa: a2 must be > 0");
    if (p.p < 0.0 || p.p > 1.0) throw std::invalid_argument("gen_spa: p must be in [0, 1]");
    if (p.norm == Norm::L2 && p.dim > 3)
        throw std::invalid_argument("gen_spa: L2 norm supported only for dim <= 3");
}

}  // namespace

SpaGraph gen_spa(const SPAParams& params, std::uint64_t seed) {
    validate(params);
    const std::uint32_t n = params.n;
    const std::uint32_t dim = params.dim;

    SpaGraph sg;
    sg.params = params;
    sg.positions.assign(static_cast<std::size_t>(n) * dim, 0.0);
    sg.in_degree.assign(n, 0);
    sg.out_degree.assign(n, 0);

    Rng rng(seed);
    SpatialIndex index(dim, sg.positions);
    std::vector<double> radii(n, 0.0);
    std::vector<std::uint32_t> candidates;
    std::uint64_t next_rebuild = 2;

    for (std::uint32_t t = 1; t <= n; ++t) {
        const std::uint32_t v = t - 1;
        double* x = sg.positions.data() + static_cast<std::size_t>(v) * dim;
        for (std::uint32_t a = 0; a < dim; ++a) x[a] = rng.uniform_double();

        if (t >= 2) {
            // Spheres of influence are evaluated at time t-1.
            index.gather_candidates(x, candidates);
            for (std::uint32_t u : candidates) {
                double vol = sphere_volume(sg.in_degree[u], t - 1, params.a1, params.a2);
                double r = ball_radius(vol, dim, params.norm);
                const double* xu = sg.positions.data() + static_cast<std::size_t>(u) * dim;
                if (torus_dist_raw(x, xu, dim, params.norm) <= r && rng.bernoulli(params.p)) {
                    sg.edges.push_back({v, u});
                    sg.out_degree[v] += 1;
                    sg.in_degree[u] += 1;
                }
            }
            // Relocate vertices whose sphere grew past their stored class.
            for (std::size_t i = sg.edges.size() - sg.out_degree[v]; i < sg.edges.size(); ++i) {
                std::uint32_t u = sg.edges[i].v;
                radii[u] = ball_radius(sphere_volume(sg.in_degree[u], t, params.a1, params.a2),
                                       dim, params.norm);
                index.update(u, radii[u]);
            }
        }

        radii[v] = ball_radius(sphere_volume(0, t, params.a1, params.a2), dim, params.norm);
        index.insert(v, radii[v]);

        if (t == next_rebuild && t < n) {
            for (std::uint32_t u = 0; u < t; ++u)
                radii[u] = ball_radius(sphere_volume(sg.in_degree[u], t, params.a1, params.a2),
                                       dim, params.norm);
            index.rebuild(radii, t);
            next_rebuild *= 2;
        }
    }
    return sg;
}

Graph undirect(const SpaGraph& sg) {
    return Graph(sg.params.n, sg.edges, /*oriented=*/true);
}

}  // namespace modnet
