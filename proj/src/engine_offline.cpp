#include <algorithm>
#include <vector>

#include "domgeo/dynamic_nn.hpp"
#include "domgeo/engine.hpp"

namespace domgeo {

namespace {

// 1-D tree over x-ranks [lo, hi), split at the median like the range tree.
struct XTree {
    struct Node {
        std::uint32_t lo, hi;
        std::int32_t left = -1, right = -1;
        DynamicNNIndex nn{2};
    };
    std::vector<Node> nodes;
    std::uint64_t visits = 0;

    explicit XTree(std::uint32_t n) {
        nodes.reserve(2 * static_cast<std::size_t>(n));
        build(0, n);
    }

    std::int32_t build(std::uint32_t lo, std::uint32_t hi) {
        const auto v = static_cast<std::int32_t>(nodes.size());
        nodes.push_back(Node{lo, hi});
        if (hi - lo >= 2) {
            const std::uint32_t mid = lo + (hi - lo) / 2;
            const std::int32_t l = build(lo, mid);
            const std::int32_t r = build(mid, hi);
            nodes[v].left = l;
            nodes[v].right = r;
        }
        return v;
    }

    void insert(std::uint32_t rank, const Site& s) {
        std::int32_t v = 0;
        while (true) {
            ++visits;
            Node& node = nodes[v];
            node.nn.insert(s);
            if (node.left < 0) return;
            v = rank < nodes[node.left].hi ? node.left : node.right;
        }
    }

    // Nearest site over ranks >= from.
    void query(std::int32_t v, std::uint32_t from, Vec2 q, std::optional<Neighbor>& best) {
        ++visits;
        const Node& node = nodes[v];
        if (node.hi <= from) return;
        if (node.lo >= from) {
            if (const auto cand = node.nn.nearest(q); cand && (!best || closer(*cand, *best))) {
                best = cand;
            }
            return;
        }
        query(node.left, from, q, best);
        query(node.right, from, q, best);
    }
};

} // namespace

DominatorResult nearest_dominator_offline(const Dataset& ds, WorkCounters* work,
                                          const OfflineProbe& probe) {
    check_algorithm_dims(Algorithm::Offline, ds.d_real(), ds.d_feat());
    const auto n = static_cast<std::uint32_t>(ds.size());
    DominatorResult out(n);
    if (n == 0) return out;

    std::vector<PointId> by_x(n);
    for (PointId i = 0; i < n; ++i) by_x[i] = i;
    std::sort(by_x.begin(), by_x.end(), [&](PointId a, PointId b) {
        const double xa = ds.feature(a, 0), xb = ds.feature(b, 0);
        return xa < xb || (xa == xb && a < b);
    });
    std::vector<std::uint32_t> rank(n);
    std::vector<double> xs(n);
    for (std::uint32_t r = 0; r < n; ++r) {
        rank[by_x[r]] = r;
        xs[r] = ds.feature(by_x[r], 0);
    }

    std::vector<PointId> by_y = by_x;
    std::sort(by_y.begin(), by_y.end(), [&](PointId a, PointId b) {
        const double ya = ds.feature(a, 1), yb = ds.feature(b, 1);
        return ya > yb || (ya == yb && a < b);
    });

    XTree tree(n);
    for (std::size_t b = 0; b < n;) {
        std::size_t e = b + 1;
        while (e < n && ds.feature(by_y[e], 1) == ds.feature(by_y[b], 1)) ++e;
        for (std::size_t k = b; k < e; ++k) {
            const PointId i = by_y[k];
            if (probe) probe(i, tree.nodes[0].nn);
            const auto from = static_cast<std::uint32_t>(
                std::upper_bound(xs.begin(), xs.end(), ds.feature(i, 0)) - xs.begin());
            if (from < n) tree.query(0, from, ds.planar(i), out[i]);
        }
        for (std::size_t k = b; k < e; ++k) {
            const PointId i = by_y[k];
            tree.insert(rank[i], Site{ds.planar(i), i});
        }
        b = e;
    }

    if (work) {
        work->node_visits += tree.visits;
        for (const auto& node : tree.nodes) {
            work->indexes_built += node.nn.indexes_built();
            work->indexed_points += node.nn.indexed_points();
        }
    }
    return out;
}

} // namespace domgeo
