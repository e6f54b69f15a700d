#include <algorithm>
#include <vector>

#include "domgeo/engine.hpp"
#include "domgeo/pst.hpp"

namespace domgeo {

namespace {

struct SweepState {
    const Dataset& ds;
    std::vector<double> p;  // real coordinate per point
    std::uint64_t visits = 0;

    double sqdist(PointId a, PointId b) const { return squared_distance(ds.real(a), ds.real(b)); }
    PstEntry entry(PointId i) const { return {ds.feature(i, 0), ds.feature(i, 1), i}; }
};

// Groups of `order` sharing a real coordinate, as [begin, end) offsets.
std::vector<std::pair<std::size_t, std::size_t>> location_groups(const SweepState& st,
                                                                 const std::vector<PointId>& order) {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t b = 0; b < order.size();) {
        std::size_t e = b + 1;
        while (e < order.size() && st.p[order[e]] == st.p[order[b]]) ++e;
        groups.emplace_back(b, e);
        b = e;
    }
    return groups;
}

// One directional sweep. `order` lists the points by (p, id), ascending p for
// the rightward sweep and descending p for the leftward one, ids ascending
// within a location. Every point reported by a query gets its current best
// dominator on that side; it stays in the tree while a later location could
// still tie its rounded distance, so ties keep resolving to the smaller id.
DominatorResult directional_sweep(SweepState& st, const std::vector<PointId>& order) {
    DominatorResult best(st.ds.size());
    PrioritySearchTree tree;
    std::vector<PointId> hits;
    std::vector<PointId> tentative;
    std::vector<char> is_tentative(st.ds.size(), 0);

    const auto groups = location_groups(st, order);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto [b, e] = groups[g];
        for (std::size_t k = b; k < e; ++k) {
            const PointId j = order[k];
            hits.clear();
            tree.query_dominated(st.ds.feature(j, 0), st.ds.feature(j, 1), hits);
            for (PointId i : hits) {
                const Neighbor cand{j, st.sqdist(i, j)};
                if (!best[i] || closer(cand, *best[i])) best[i] = cand;
                if (!is_tentative[i]) {
                    is_tentative[i] = 1;
                    tentative.push_back(i);
                }
            }
        }
        for (std::size_t k = b; k < e; ++k) tree.insert(st.entry(order[k]));

        // Retire points no later location can tie.
        const bool last = g + 1 == groups.size();
        const PointId next = last ? 0 : order[groups[g + 1].first];
        std::size_t keep = 0;
        for (PointId i : tentative) {
            if (!last && st.sqdist(i, next) <= best[i]->sqdist) {
                tentative[keep++] = i;
            } else {
                tree.erase(i);
                is_tentative[i] = 0;
            }
        }
        tentative.resize(keep);
    }
    st.visits += tree.nodes_visited();
    return best;
}

// Dominators at the same location (distance 0): smallest dominating id.
void same_location_pass(SweepState& st, const std::vector<PointId>& order, DominatorResult& out) {
    PrioritySearchTree tree;
    std::vector<PointId> hits;
    for (const auto& [b, e] : location_groups(st, order)) {
        if (e - b < 2) continue;
        for (std::size_t k = b; k < e; ++k) tree.insert(st.entry(order[k]));
        for (std::size_t k = b; k < e; ++k) {
            const PointId j = order[k];
            hits.clear();
            tree.query_dominated(st.ds.feature(j, 0), st.ds.feature(j, 1), hits);
            for (PointId i : hits) {
                const Neighbor cand{j, st.sqdist(i, j)};
                if (!out[i] || closer(cand, *out[i])) out[i] = cand;
                tree.erase(i);
            }
        }
        for (std::size_t k = b; k < e; ++k) {
            if (tree.contains(order[k])) tree.erase(order[k]);
        }
    }
    st.visits += tree.nodes_visited();
}

} // namespace

DominatorResult nearest_dominator_sweep(const Dataset& ds, WorkCounters* work) {
    check_algorithm_dims(Algorithm::Sweep, ds.d_real(), ds.d_feat());
    const std::size_t n = ds.size();
    SweepState st{ds, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) st.p[i] = ds.real(i)[0];

    std::vector<PointId> order(n);
    for (PointId i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
        return st.p[a] < st.p[b] || (st.p[a] == st.p[b] && a < b);
    });
    DominatorResult result = directional_sweep(st, order);

    std::vector<PointId> reversed = order;
    std::sort(reversed.begin(), reversed.end(), [&](PointId a, PointId b) {
        return st.p[a] > st.p[b] || (st.p[a] == st.p[b] && a < b);
    });
    const DominatorResult left = directional_sweep(st, reversed);
    for (std::size_t i = 0; i < n; ++i) {
        if (left[i] && (!result[i] || closer(*left[i], *result[i]))) result[i] = left[i];
    }
    same_location_pass(st, order, result);

    if (work) work->node_visits += st.visits;
    return result;
}

} // namespace domgeo
