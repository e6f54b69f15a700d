#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "domgeo/dynamic_nn.hpp"
#include "domgeo/geometry.hpp"

namespace domgeo {

/// Entry i: nearest dominator of point i as (index, squared distance), or
/// nothing if no point dominates q_i.
using DominatorResult = std::vector<std::optional<Neighbor>>;

/// Deterministic work done by one algorithm run.
struct WorkCounters {
    std::uint64_t node_visits = 0;     // search-structure nodes touched
    std::uint64_t indexes_built = 0;   // static NN indexes constructed
    std::uint64_t indexed_points = 0;  // total sites over those indexes
};

/// d_real = 1, d_feat = 2. Priority-search-tree sweeps to the right and to the
/// left, plus a pass over points sharing a location, combined by (sqdist, id).
DominatorResult nearest_dominator_sweep(const Dataset& ds, WorkCounters* work = nullptr);

/// d_real in {1, 2}, d_feat >= 2. One open-quadrant query per point on a
/// range tree over the features.
DominatorResult nearest_dominator_rangetree(const Dataset& ds, WorkCounters* work = nullptr);

/// Called right before point `i` is queried in the offline sweep, with the
/// index at the root of the x-tree (it holds every inserted site).
using OfflineProbe = std::function<void(PointId i, const DynamicNNIndex& root)>;

/// d_real = 2, d_feat = 2. Sweeps points by decreasing y, in batches of equal
/// y, over a 1-D tree on x whose nodes carry DynamicNNIndexes.
DominatorResult nearest_dominator_offline(const Dataset& ds, WorkCounters* work = nullptr,
                                          const OfflineProbe& probe = {});

/// Sorts pairwise distinct values using only nearest-dominator links: with
/// p = x and q = (x, x) the nearest dominator of each value is its successor.
std::vector<double> sort_via_dominators(std::span<const double> xs);

enum class Algorithm { Brute, Sweep, RangeTree, Offline };

std::string_view algorithm_name(Algorithm a);
/// Throws UsageError for unknown names.
Algorithm parse_algorithm(std::string_view name);
/// Throws UsageError if the algorithm cannot run on these dimensions.
void check_algorithm_dims(Algorithm a, std::size_t d_real, std::size_t d_feat);
DominatorResult run_algorithm(Algorithm a, const Dataset& ds, WorkCounters* work = nullptr);

} // namespace domgeo
