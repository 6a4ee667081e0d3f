#include "modnet/partition.hpp"

#include <stdexcept>

namespace modnet {

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
    Partition p;
    p.labels_.assign(labels.size(), 0);
    std::vector<std::uint32_t> remap;  // old label -> compact label, built lazily
    for (std::size_t v = 0; v < labels.size(); ++v) {
        std::uint32_t old = labels[v];
        if (old >= remap.size()) remap.resize(old + 1, UINT32_MAX);
        if (remap[old] == UINT32_MAX) remap[old] = p.k_++;
        p.labels_[v] = remap[old];
    }
    return p;
}

Partition Partition::single_part(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("Partition: empty vertex set");
    Partition p;
    p.labels_.assign(n, 0);
    p.k_ = 1;
    return p;
}

std::vector<std::vector<std::uint32_t>> Partition::groups() const {
    std::vector<std::vector<std::uint32_t>> out(k_);
    for (std::uint32_t v = 0; v < labels_.size(); ++v)
        out[labels_[v]].push_back(v);
    return out;
}

}  // namespace modnet
