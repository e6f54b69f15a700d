#include "domgeo/engine.hpp"
#include "domgeo/range_tree.hpp"

namespace domgeo {

DominatorResult nearest_dominator_rangetree(const Dataset& ds, WorkCounters* work) {
    check_algorithm_dims(Algorithm::RangeTree, ds.d_real(), ds.d_feat());
    DominatorResult out(ds.size());
    if (ds.empty()) return out;
    const RangeTree tree(ds);
    std::uint64_t visits = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out[i] = tree.query_nearest_in_rect(ds.planar(i), QueryRect::dominance_quadrant(ds.feature(i)),
                                            &visits);
    }
    if (work) {
        work->node_visits += visits;
        work->indexes_built += tree.counters().indexes_built;
        work->indexed_points += tree.counters().total_indexed_points;
    }
    return out;
}

} // namespace domgeo
