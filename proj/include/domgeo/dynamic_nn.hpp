#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "domgeo/static_nn.hpp"

namespace domgeo {

/// Insertion-only nearest-site index by the logarithmic method: the sites are
/// split into buckets of distinct power-of-two sizes, each with its own
/// StaticNNIndex. Inserting works like incrementing a binary counter: the new
/// site and every bucket that would collide with it are merged into one new
/// bucket, which costs a single static build.
class DynamicNNIndex {
public:
    explicit DynamicNNIndex(std::size_t d_real = 2);

    /// Throws UsageError if `id` was inserted before.
    void insert(const Site& site);
    void insert(const RealPoint& p, PointId id);

    /// Nearest inserted site, ties by id; empty iff nothing was inserted.
    std::optional<Neighbor> nearest(Vec2 query) const;
    std::optional<Neighbor> nearest(const RealPoint& query) const;

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t d_real() const noexcept { return d_real_; }

    /// Bucket sizes, largest first.
    std::vector<std::size_t> bucket_sizes() const;
    std::size_t bucket_count() const noexcept { return buckets_.size(); }
    /// All sites currently stored, bucket by bucket.
    std::vector<Site> sites() const;

    std::uint64_t indexes_built() const noexcept { return indexes_built_; }
    /// Sum of the sizes of every static index ever built.
    std::uint64_t indexed_points() const noexcept { return indexed_points_; }

    /// Empty string if the bucket structure is sound, otherwise what is wrong.
    std::string check_invariants() const;

private:
    struct Bucket {
        std::vector<Site> sites;
        StaticNNIndex index;
    };

    std::size_t d_real_;
    std::vector<Bucket> buckets_;  // strictly decreasing sizes
    std::unordered_set<PointId> ids_;
    std::uint64_t indexes_built_ = 0;
    std::uint64_t indexed_points_ = 0;
};

} // namespace domgeo
