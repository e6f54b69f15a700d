#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "domgeo/geometry.hpp"
#include "domgeo/static_nn.hpp"

namespace domgeo {

/// A last-level node selected by a canonical decomposition.
struct CanonicalNode {
    std::uint32_t node = 0;
    friend bool operator==(const CanonicalNode&, const CanonicalNode&) = default;
};

/// Last-level nodes whose subtrees tile the points inside a query rectangle.
using CanonicalSet = std::vector<CanonicalNode>;

struct RangeTreeCounters {
    std::uint64_t nodes = 0;                 // nodes over all levels
    std::uint64_t indexes_built = 0;         // last-level nodes, one index each
    std::uint64_t total_indexed_points = 0;  // sum of last-level subtree sizes
    std::uint64_t index_bytes = 0;           // heap bytes held by the indexes
};

/// Static d_feat-level range tree over feature space. Level k is keyed on
/// feature coordinate k (ties by id) and split at the median by count; every
/// node below the last level owns a tree of the next level over its points,
/// and every last-level node owns a StaticNNIndex over the real points of its
/// subtree. Memory grows as n log^d_feat n.
class RangeTree {
public:
    /// CountOnly runs the same construction but skips the last level's trees
    /// and indexes, producing only the counters. Queries on such a tree throw.
    enum class Mode { Full, CountOnly };

    /// Requires n >= 1 and d_real in {1, 2}.
    explicit RangeTree(const Dataset& ds, Mode mode = Mode::Full);

    /// Disjoint last-level nodes covering exactly the points inside `r`.
    CanonicalSet canonical_nodes(const QueryRect& r, std::uint64_t* visits = nullptr) const;

    /// Nearest real point (ties by id) among the points whose features lie in `r`.
    std::optional<Neighbor> query_nearest_in_rect(const RealPoint& p, const QueryRect& r) const;
    std::optional<Neighbor> query_nearest_in_rect(Vec2 p, const QueryRect& r,
                                                  std::uint64_t* visits = nullptr) const;

    /// Point ids in the subtree of a canonical node, sorted by the last feature coordinate.
    std::span<const PointId> points(CanonicalNode c) const;
    const StaticNNIndex& index(CanonicalNode c) const;

    const RangeTreeCounters& counters() const noexcept { return counters_; }
    std::size_t size() const noexcept { return n_; }
    std::size_t d_feat() const noexcept { return d_feat_; }
    std::size_t d_real() const noexcept { return d_real_; }
    Mode mode() const noexcept { return mode_; }

    /// n * (ceil(log2 n) + 1)^d: each point lies in at most ceil(log2 n) + 1
    /// nodes of every tree it belongs to.
    static std::uint64_t indexed_points_bound(std::uint64_t n, std::size_t d);
    /// (2 ceil(log2 n) + 2)^d: at most two canonical nodes per depth and level.
    static std::uint64_t canonical_bound(std::uint64_t n, std::size_t d);

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    struct Node {
        std::uint32_t lo = 0;  // [lo, hi) into ids_ / keys_
        std::uint32_t hi = 0;
        std::uint32_t left = kNone;
        std::uint32_t right = kNone;
        std::uint32_t link = kNone;  // next-level root, or index slot on the last level
    };

    using Orders = std::vector<std::vector<PointId>>;

    std::uint32_t build_tree(std::size_t level, const Orders& orders);
    std::uint32_t build_node(std::size_t level, std::uint32_t base, std::uint32_t lo,
                             std::uint32_t hi, const Orders& orders);
    void count_last_level(std::uint64_t m);
    void collect(std::size_t level, std::uint32_t v, const QueryRect& r, CanonicalSet& out,
                 std::uint64_t& visits) const;
    void require_full() const;

    const Dataset* ds_ = nullptr;  // only during construction
    Mode mode_;
    std::size_t n_;
    std::size_t d_feat_;
    std::size_t d_real_;
    std::uint32_t root_ = kNone;
    std::vector<Node> nodes_;
    std::vector<PointId> ids_;
    std::vector<double> keys_;
    std::vector<StaticNNIndex> indexes_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    RangeTreeCounters counters_;
};

inline RangeTree build_range_tree(const Dataset& ds) { return RangeTree(ds); }

} // namespace domgeo
