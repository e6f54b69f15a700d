#include "domgeo/pst.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace domgeo {

std::int32_t PrioritySearchTree::alloc() {
    if (!free_.empty()) {
        const std::int32_t v = free_.back();
        free_.pop_back();
        nodes_[v] = Node{};
        return v;
    }
    nodes_.emplace_back();
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

void PrioritySearchTree::release(std::int32_t v) { free_.push_back(v); }

void PrioritySearchTree::refresh(std::int32_t v) {
    Node& n = nodes_[v];
    if (n.leaf()) return;
    const Node& l = nodes_[n.left];
    const Node& r = nodes_[n.right];
    n.lo = l.lo;
    n.hi = r.hi;
    n.weight = l.weight + r.weight;
}

// Fills the hole at v by repeatedly promoting the smaller child entry.
void PrioritySearchTree::pull_up(std::int32_t v) {
    while (!nodes_[v].leaf()) {
        ++visits_;
        const std::int32_t l = nodes_[v].left;
        const std::int32_t r = nodes_[v].right;
        std::int32_t pick = kNil;
        if (nodes_[l].occupied) pick = l;
        if (nodes_[r].occupied &&
            (pick == kNil || heap_before(nodes_[r].entry, nodes_[l].entry))) {
            pick = r;
        }
        if (pick == kNil) return;
        nodes_[v].entry = nodes_[pick].entry;
        nodes_[v].occupied = true;
        nodes_[pick].occupied = false;
        v = pick;
    }
}

// Pushes `carried` down from v towards its own leaf, swapping with any
// stored entry that it precedes in heap order.
void PrioritySearchTree::sift_down(std::int32_t v, PstEntry carried) {
    for (;;) {
        ++visits_;
        Node& n = nodes_[v];
        if (!n.occupied) {
            n.entry = carried;
            n.occupied = true;
            return;
        }
        if (heap_before(carried, n.entry)) std::swap(carried, n.entry);
        if (n.leaf()) throw std::logic_error("PrioritySearchTree: entry displaced below its leaf");
        const Key ck{carried.x, carried.id};
        v = (nodes_[n.left].hi < ck) ? n.right : n.left;
    }
}

void PrioritySearchTree::insert(const PstEntry& e) {
    detail::require_finite(std::span<const double>(&e.x, 1), "PST entry");
    detail::require_finite(std::span<const double>(&e.y, 1), "PST entry");
    if (index_.count(e.id)) {
        throw UsageError("PrioritySearchTree::insert: id " + std::to_string(e.id) + " already stored");
    }
    const Key key{e.x, e.id};
    if (root_ == kNil) {
        root_ = alloc();
        Node& n = nodes_[root_];
        n.lo = n.hi = key;
        n.occupied = true;
        n.entry = e;
        index_.emplace(e.id, key);
        ++visits_;
        return;
    }

    std::vector<std::int32_t> path;
    std::int32_t v = root_;
    while (!nodes_[v].leaf()) {
        ++visits_;
        path.push_back(v);
        v = (nodes_[nodes_[v].left].hi < key) ? nodes_[v].right : nodes_[v].left;
    }
    ++visits_;

    // Split leaf v into an internal node u with children {v, new leaf}.
    const std::int32_t leaf = alloc();
    const std::int32_t u = alloc();
    {
        Node& nl = nodes_[leaf];
        nl.lo = nl.hi = key;
    }
    const bool new_left = key < nodes_[v].lo;
    nodes_[u].left = new_left ? leaf : v;
    nodes_[u].right = new_left ? v : leaf;
    if (nodes_[v].occupied) {
        nodes_[u].entry = nodes_[v].entry;
        nodes_[u].occupied = true;
        nodes_[v].occupied = false;
    }
    if (path.empty()) {
        root_ = u;
    } else {
        Node& p = nodes_[path.back()];
        (p.left == v ? p.left : p.right) = u;
    }
    path.push_back(u);
    for (auto it = path.rbegin(); it != path.rend(); ++it) refresh(*it);

    index_.emplace(e.id, key);
    sift_down(root_, e);
    rebalance(path);
}

void PrioritySearchTree::erase(PointId id) {
    const auto found = index_.find(id);
    if (found == index_.end()) {
        throw UsageError("PrioritySearchTree::erase: id " + std::to_string(id) + " not stored");
    }
    const Key key = found->second;
    index_.erase(found);

    std::vector<std::int32_t> path;
    std::int32_t holder = kNil;
    std::int32_t v = root_;
    for (;;) {
        ++visits_;
        path.push_back(v);
        const Node& n = nodes_[v];
        if (holder == kNil && n.occupied && n.entry.id == id) holder = v;
        if (n.leaf()) break;
        v = (nodes_[n.left].hi < key) ? n.right : n.left;
    }
    if (holder == kNil || !(nodes_[v].lo == key)) {
        throw std::logic_error("PrioritySearchTree::erase: entry not on its search path");
    }
    nodes_[holder].occupied = false;
    pull_up(holder);

    const std::int32_t leaf = v;
    if (path.size() == 1) {
        release(leaf);
        root_ = kNil;
        return;
    }
    const std::int32_t parent = path[path.size() - 2];
    const std::int32_t sibling =
        nodes_[parent].left == leaf ? nodes_[parent].right : nodes_[parent].left;
    const bool parent_occupied = nodes_[parent].occupied;
    const PstEntry parent_entry = nodes_[parent].entry;
    path.resize(path.size() - 2);
    if (path.empty()) {
        root_ = sibling;
    } else {
        Node& g = nodes_[path.back()];
        (g.left == parent ? g.left : g.right) = sibling;
    }
    release(leaf);
    release(parent);
    if (parent_occupied) sift_down(sibling, parent_entry);
    for (auto it = path.rbegin(); it != path.rend(); ++it) refresh(*it);
    rebalance(path);
}

void PrioritySearchTree::replace_child(const std::vector<std::int32_t>& path, std::size_t depth,
                                       std::int32_t with) {
    if (depth == 0) {
        root_ = with;
        return;
    }
    Node& p = nodes_[path[depth - 1]];
    (p.left == path[depth] ? p.left : p.right) = with;
}

void PrioritySearchTree::rebalance(const std::vector<std::int32_t>& path) {
    for (std::size_t d = 0; d < path.size(); ++d) {
        const Node& n = nodes_[path[d]];
        if (n.leaf()) continue;
        const std::uint32_t heavy = std::max(nodes_[n.left].weight, nodes_[n.right].weight);
        if (4ull * heavy > 3ull * n.weight) {
            replace_child(path, d, rebuild(path[d]));
            return;
        }
    }
}

void PrioritySearchTree::collect(std::int32_t v, std::vector<std::int32_t>& leaves,
                                 std::vector<PstEntry>& entries,
                                 std::vector<std::int32_t>& internals) {
    ++visits_;
    ++rebuilt_;
    Node& n = nodes_[v];
    if (n.occupied) {
        entries.push_back(n.entry);
        n.occupied = false;
    }
    if (n.leaf()) {
        leaves.push_back(v);
        return;
    }
    internals.push_back(v);
    collect(n.left, leaves, entries, internals);
    collect(n.right, leaves, entries, internals);
}

std::int32_t PrioritySearchTree::build_balanced(std::vector<std::int32_t>& leaves, std::size_t lo,
                                                std::size_t hi) {
    if (hi - lo == 1) return leaves[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::int32_t l = build_balanced(leaves, lo, mid);
    const std::int32_t r = build_balanced(leaves, mid, hi);
    const std::int32_t u = alloc();
    nodes_[u].left = l;
    nodes_[u].right = r;
    refresh(u);
    pull_up(u);
    return u;
}

// Rebuilds the subtree at v perfectly balanced and returns its new root.
// Entries stored above v are untouched; entries inside are first dropped to
// their own leaves and then promoted bottom-up.
std::int32_t PrioritySearchTree::rebuild(std::int32_t v) {
    std::vector<std::int32_t> leaves;
    std::vector<PstEntry> entries;
    std::vector<std::int32_t> internals;
    collect(v, leaves, entries, internals);
    for (std::int32_t u : internals) release(u);

    // Leaves are in key order; place each entry at its own leaf.
    std::sort(entries.begin(), entries.end(), [](const PstEntry& a, const PstEntry& b) {
        return Key{a.x, a.id} < Key{b.x, b.id};
    });
    std::size_t li = 0;
    for (const PstEntry& e : entries) {
        const Key k{e.x, e.id};
        while (!(nodes_[leaves[li]].lo == k)) ++li;
        nodes_[leaves[li]].entry = e;
        nodes_[leaves[li]].occupied = true;
    }
    return build_balanced(leaves, 0, leaves.size());
}

void PrioritySearchTree::query(std::int32_t v, double x0, double y0, std::vector<PointId>& out,
                               std::uint64_t& visits) const {
    ++visits;
    const Node& n = nodes_[v];
    if (!n.occupied || !(n.lo.x < x0) || !(n.entry.y < y0)) return;
    if (n.entry.x < x0) out.push_back(n.entry.id);
    if (n.leaf()) return;
    query(n.left, x0, y0, out, visits);
    query(n.right, x0, y0, out, visits);
}

void PrioritySearchTree::query_dominated(double x0, double y0, std::vector<PointId>& out) const {
    if (root_ == kNil) return;
    query(root_, x0, y0, out, visits_);
}

std::size_t PrioritySearchTree::height_of(std::int32_t v) const {
    if (nodes_[v].leaf()) return 0;
    return 1 + std::max(height_of(nodes_[v].left), height_of(nodes_[v].right));
}

std::size_t PrioritySearchTree::height() const { return root_ == kNil ? 0 : height_of(root_); }

std::string PrioritySearchTree::check_invariants() const {
    if (root_ == kNil) return index_.empty() ? "" : "empty tree with a non-empty id index";

    std::string error;
    std::size_t leaves = 0;
    std::unordered_set<PointId> seen;
    auto fail = [&](const std::string& what) {
        if (error.empty()) error = what;
    };
    // Returns the number of leaves below v.
    auto walk = [&](auto&& self, std::int32_t v, const PstEntry* above) -> std::uint32_t {
        const Node& n = nodes_[v];
        if (n.occupied) {
            const Key k{n.entry.x, n.entry.id};
            if (k < n.lo || n.hi < k) fail("entry stored outside its key range");
            if (above && heap_before(n.entry, *above)) fail("heap order violated");
            if (!seen.insert(n.entry.id).second) fail("entry stored twice");
            const auto it = index_.find(n.entry.id);
            if (it == index_.end() || !(it->second == k)) fail("entry missing from id index");
        }
        if (n.leaf()) {
            ++leaves;
            if (!(n.lo == n.hi)) fail("leaf key range");
            const auto it = index_.find(n.lo.id);
            if (it == index_.end() || !(it->second == n.lo)) fail("leaf without a live entry");
            if (n.weight != 1) fail("leaf weight");
            return 1;
        }
        const Node& l = nodes_[n.left];
        const Node& r = nodes_[n.right];
        if (!n.occupied && (l.occupied || r.occupied)) fail("empty node above an occupied one");
        if (!(l.hi < r.lo)) fail("search-tree order violated");
        if (!(n.lo == l.lo) || !(n.hi == r.hi)) fail("stale key range");
        const PstEntry* next = n.occupied ? &n.entry : above;
        const std::uint32_t wl = self(self, n.left, next);
        const std::uint32_t wr = self(self, n.right, next);
        if (n.weight != wl + wr) fail("stale weight");
        if (4ull * std::max(wl, wr) > 3ull * (wl + wr)) fail("weight balance violated");
        return wl + wr;
    };
    walk(walk, root_, nullptr);
    if (leaves != index_.size()) fail("leaf count differs from size");
    if (seen.size() != index_.size()) fail("stored entry count differs from size");
    return error;
}

} // namespace domgeo
