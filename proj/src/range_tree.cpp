#include "domgeo/range_tree.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace domgeo {

namespace {

std::uint64_t ceil_log2(std::uint64_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

std::uint64_t RangeTree::indexed_points_bound(std::uint64_t n, std::size_t d) {
    return n * ipow(ceil_log2(n) + 1, d);
}

std::uint64_t RangeTree::canonical_bound(std::uint64_t n, std::size_t d) {
    return ipow(2 * ceil_log2(n) + 2, d);
}

RangeTree::RangeTree(const Dataset& ds, Mode mode)
    : ds_(&ds), mode_(mode), n_(ds.size()), d_feat_(ds.d_feat()), d_real_(ds.d_real()) {
    if (ds.empty()) throw UsageError("build_range_tree: empty dataset");
    if (d_real_ != 1 && d_real_ != 2) {
        throw UsageError("build_range_tree: real space must be one- or two-dimensional");
    }
    if (n_ >= std::numeric_limits<std::uint32_t>::max() / 2) {
        throw UsageError("build_range_tree: too many points");
    }

    Orders orders(d_feat_, std::vector<PointId>(n_));
    for (std::size_t k = 0; k < d_feat_; ++k) {
        auto& order = orders[k];
        for (PointId i = 0; i < n_; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
            const double fa = ds.feature(a, k), fb = ds.feature(b, k);
            return fa < fb || (fa == fb && a < b);
        });
    }
    mark_.assign(n_, 0);
    root_ = build_tree(0, orders);
    counters_.nodes = nodes_.size() + (mode_ == Mode::CountOnly ? counters_.indexes_built : 0);
    for (const StaticNNIndex& idx : indexes_) counters_.index_bytes += idx.memory_bytes();
    mark_.clear();
    mark_.shrink_to_fit();
    ds_ = nullptr;
}

std::uint32_t RangeTree::build_tree(std::size_t level, const Orders& orders) {
    const auto m = static_cast<std::uint32_t>(orders[0].size());
    if (level + 1 == d_feat_ && mode_ == Mode::CountOnly) {
        count_last_level(m);
        return kNone;
    }
    const auto base = static_cast<std::uint32_t>(ids_.size());
    for (PointId id : orders[0]) {
        ids_.push_back(id);
        keys_.push_back(ds_->feature(id, level));
    }
    return build_node(level, base, 0, m, orders);
}

std::uint32_t RangeTree::build_node(std::size_t level, std::uint32_t base, std::uint32_t lo,
                                    std::uint32_t hi, const Orders& orders) {
    const auto v = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{base + lo, base + hi});

    std::uint32_t link = kNone;
    if (level + 1 < d_feat_) {
        const Orders next(orders.begin() + 1, orders.end());
        link = build_tree(level + 1, next);
    } else {
        std::vector<Site> sites;
        sites.reserve(hi - lo);
        for (std::uint32_t p = base + lo; p < base + hi; ++p) {
            sites.push_back({ds_->planar(ids_[p]), ids_[p]});
        }
        link = static_cast<std::uint32_t>(indexes_.size());
        indexes_.push_back(StaticNNIndex::build(sites, d_real_));
        ++counters_.indexes_built;
        counters_.total_indexed_points += hi - lo;
    }
    nodes_[v].link = link;

    if (hi - lo >= 2) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        if (++stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        for (std::uint32_t p = base + lo; p < base + mid; ++p) mark_[ids_[p]] = stamp_;
        Orders left(orders.size()), right(orders.size());
        for (std::size_t k = 1; k < orders.size(); ++k) {
            left[k].reserve(mid - lo);
            right[k].reserve(hi - mid);
            for (PointId id : orders[k]) (mark_[id] == stamp_ ? left[k] : right[k]).push_back(id);
        }
        left[0].resize(mid - lo);
        right[0].resize(hi - mid);
        const std::uint32_t l = build_node(level, base, lo, mid, left);
        left = Orders();
        const std::uint32_t r = build_node(level, base, mid, hi, right);
        nodes_[v].left = l;
        nodes_[v].right = r;
    }
    return v;
}

// Counters of a last-level tree over m points, split exactly as build_node splits.
void RangeTree::count_last_level(std::uint64_t m) {
    ++counters_.indexes_built;
    counters_.total_indexed_points += m;
    if (m < 2) return;
    count_last_level(m / 2);
    count_last_level(m - m / 2);
}

void RangeTree::require_full() const {
    if (mode_ != Mode::Full) throw UsageError("RangeTree: queries need a fully built tree");
}

void RangeTree::collect(std::size_t level, std::uint32_t v, const QueryRect& r, CanonicalSet& out,
                        std::uint64_t& visits) const {
    ++visits;
    const Node& node = nodes_[v];
    const Interval& iv = r[level];
    const double min_key = keys_[node.lo];
    const double max_key = keys_[node.hi - 1];
    if (!iv.above_lo(max_key) || !iv.below_hi(min_key)) return;
    if (iv.above_lo(min_key) && iv.below_hi(max_key)) {
        if (level + 1 == d_feat_) {
            out.push_back({v});
        } else {
            collect(level + 1, node.link, r, out, visits);
        }
        return;
    }
    collect(level, node.left, r, out, visits);
    collect(level, node.right, r, out, visits);
}

CanonicalSet RangeTree::canonical_nodes(const QueryRect& r, std::uint64_t* visits) const {
    require_full();
    if (r.dim() != d_feat_) throw UsageError("canonical_nodes: rectangle dimension mismatch");
    CanonicalSet out;
    std::uint64_t local = 0;
    collect(0, root_, r, out, local);
    if (visits) *visits += local;
    return out;
}

std::optional<Neighbor> RangeTree::query_nearest_in_rect(Vec2 p, const QueryRect& r,
                                                         std::uint64_t* visits) const {
    std::optional<Neighbor> best;
    for (const CanonicalNode c : canonical_nodes(r, visits)) {
        const Neighbor cand = index(c).nearest(p);
        if (!best || closer(cand, *best)) best = cand;
    }
    return best;
}

std::optional<Neighbor> RangeTree::query_nearest_in_rect(const RealPoint& p,
                                                         const QueryRect& r) const {
    if (p.dim() != d_real_) throw UsageError("query_nearest_in_rect: real dimension mismatch");
    return query_nearest_in_rect(to_planar(p), r);
}

std::span<const PointId> RangeTree::points(CanonicalNode c) const {
    require_full();
    const Node& node = nodes_.at(c.node);
    return {ids_.data() + node.lo, node.hi - node.lo};
}

const StaticNNIndex& RangeTree::index(CanonicalNode c) const {
    require_full();
    const Node& node = nodes_.at(c.node);
    return indexes_.at(node.link);
}

} // namespace domgeo
