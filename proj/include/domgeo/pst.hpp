#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "domgeo/geometry.hpp"

namespace domgeo {

struct PstEntry {
    double x = 0.0;
    double y = 0.0;
    PointId id = 0;
};

/// Dynamic priority search tree over 2-D points.
///
/// The skeleton is a leaf-oriented binary search tree on (x, id) with one leaf
/// per stored entry. Every entry sits at some node on the path from the root to
/// its own leaf, entries form a min-heap on (y, x, id), and an empty node has an
/// empty subtree. Balance is kept by weight: whenever a child holds more than
/// 3/4 of its parent's leaves, the highest such subtree on the update path is
/// rebuilt perfectly balanced (linear time, bottom-up heap fill).
class PrioritySearchTree {
public:
    /// Upper bound on query node visits: kQueryVisitConstant * (log2(size + 2) + k).
    static constexpr double kQueryVisitConstant = 8.0;

    PrioritySearchTree() = default;

    /// Throws UsageError if `e.id` is already stored.
    void insert(const PstEntry& e);
    /// Throws UsageError if `id` is not stored.
    void erase(PointId id);
    bool contains(PointId id) const { return index_.count(id) != 0; }

    /// Ids of stored entries with x < x0 and y < y0, appended to `out`.
    void query_dominated(double x0, double y0, std::vector<PointId>& out) const;
    std::vector<PointId> query_dominated(double x0, double y0) const {
        std::vector<PointId> out;
        query_dominated(x0, y0, out);
        return out;
    }

    /// Entry at the root: the minimum in (y, x, id) order. Null when empty.
    const PstEntry* top() const noexcept {
        return root_ == kNil || !nodes_[root_].occupied ? nullptr : &nodes_[root_].entry;
    }

    std::size_t size() const noexcept { return index_.size(); }
    bool empty() const noexcept { return index_.empty(); }
    std::size_t height() const;

    /// Nodes touched by every operation so far, including rebuilds.
    std::uint64_t nodes_visited() const noexcept { return visits_; }
    std::uint64_t rebuilt_nodes() const noexcept { return rebuilt_; }

    /// Walks the whole tree and returns a description of the first broken
    /// invariant, or an empty string.
    std::string check_invariants() const;

private:
    static constexpr std::int32_t kNil = -1;

    struct Key {
        double x;
        PointId id;
        friend bool operator<(const Key& a, const Key& b) {
            return a.x < b.x || (a.x == b.x && a.id < b.id);
        }
        friend bool operator==(const Key&, const Key&) = default;
    };

    struct Node {
        Key lo{};  // smallest leaf key in subtree
        Key hi{};  // largest leaf key in subtree
        std::int32_t left = kNil;
        std::int32_t right = kNil;
        std::uint32_t weight = 1;  // leaves in subtree
        bool occupied = false;
        PstEntry entry{};

        bool leaf() const { return left == kNil; }
    };

    static bool heap_before(const PstEntry& a, const PstEntry& b) {
        if (a.y != b.y) return a.y < b.y;
        if (a.x != b.x) return a.x < b.x;
        return a.id < b.id;
    }

    std::int32_t alloc();
    void release(std::int32_t v);
    void pull_up(std::int32_t v);
    void sift_down(std::int32_t v, PstEntry carried);
    void refresh(std::int32_t v);
    void rebalance(const std::vector<std::int32_t>& path);
    std::int32_t rebuild(std::int32_t v);
    std::int32_t build_balanced(std::vector<std::int32_t>& leaves, std::size_t lo, std::size_t hi);
    void collect(std::int32_t v, std::vector<std::int32_t>& leaves, std::vector<PstEntry>& entries,
                 std::vector<std::int32_t>& internals);
    void replace_child(const std::vector<std::int32_t>& path, std::size_t depth, std::int32_t with);
    void query(std::int32_t v, double x0, double y0, std::vector<PointId>& out,
               std::uint64_t& visits) const;
    std::size_t height_of(std::int32_t v) const;

    std::vector<Node> nodes_;
    std::vector<std::int32_t> free_;
    std::int32_t root_ = kNil;
    std::unordered_map<PointId, Key> index_;
    mutable std::uint64_t visits_ = 0;
    std::uint64_t rebuilt_ = 0;
};

} // namespace domgeo
