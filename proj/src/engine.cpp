#include "domgeo/engine.hpp"

#include <string>

#include "domgeo/oracle.hpp"

namespace domgeo {

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Brute: return "brute";
    case Algorithm::Sweep: return "sweep";
    case Algorithm::RangeTree: return "rangetree";
    case Algorithm::Offline: return "offline";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::Brute, Algorithm::Sweep, Algorithm::RangeTree, Algorithm::Offline}) {
        if (algorithm_name(a) == name) return a;
    }
    throw UsageError("unknown algorithm '" + std::string(name) +
                     "' (expected brute, sweep, rangetree or offline)");
}

void check_algorithm_dims(Algorithm a, std::size_t d_real, std::size_t d_feat) {
    const std::string dims = " (got d_real=" + std::to_string(d_real) +
                             ", d_feat=" + std::to_string(d_feat) + ")";
    switch (a) {
    case Algorithm::Brute:
        if (d_real < 1 || d_feat < 1) throw UsageError("brute needs d_real >= 1 and d_feat >= 1" + dims);
        return;
    case Algorithm::Sweep:
        if (d_real != 1 || d_feat != 2) throw UsageError("sweep needs d_real=1 and d_feat=2" + dims);
        return;
    case Algorithm::RangeTree:
        if ((d_real != 1 && d_real != 2) || d_feat < 2) {
            throw UsageError("rangetree needs d_real in {1,2} and d_feat >= 2" + dims);
        }
        return;
    case Algorithm::Offline:
        if (d_real != 2 || d_feat != 2) throw UsageError("offline needs d_real=2 and d_feat=2" + dims);
        return;
    }
}

DominatorResult run_algorithm(Algorithm a, const Dataset& ds, WorkCounters* work) {
    switch (a) {
    case Algorithm::Brute:
        check_algorithm_dims(a, ds.d_real(), ds.d_feat());
        if (work) {
            work->node_visits += static_cast<std::uint64_t>(ds.size()) * ds.size();
        }
        return brute_nearest_dominator(ds);
    case Algorithm::Sweep: return nearest_dominator_sweep(ds, work);
    case Algorithm::RangeTree: return nearest_dominator_rangetree(ds, work);
    case Algorithm::Offline: return nearest_dominator_offline(ds, work);
    }
    return {};
}

} // namespace domgeo
