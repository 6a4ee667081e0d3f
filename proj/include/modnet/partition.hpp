#pragma once

#include <cstdint>
#include <vector>

namespace modnet {

// Partition of {0, ..., n-1} into non-empty parts labeled 0..k-1.
// Construction normalizes arbitrary labels by first occurrence, so two
// partitions describing the same grouping compare equal label-by-label.
class Partition {
public:
    Partition() = default;

    // `labels[v]` is the (arbitrary) part label of vertex v; labels are
    // compacted to 0..k-1 in order of first occurrence.
    static Partition from_labels(const std::vector<std::uint32_t>& labels);

    // Everything in one part.
    static Partition single_part(std::uint32_t n);

    std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
    std::uint32_t part_count() const { return k_; }
    std::uint32_t part_of(std::uint32_t v) const { return labels_[v]; }
    const std::vector<std::uint32_t>& labels() const { return labels_; }

    // Vertex lists per part (each non-empty by construction).
    std::vector<std::vector<std::uint32_t>> groups() const;

    bool operator==(const Partition& o) const {
        return labels_ == o.labels_;
    }

private:
    std::vector<std::uint32_t> labels_;
    std::uint32_t k_ = 0;
};

}  // namespace modnet
