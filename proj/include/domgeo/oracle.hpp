#pragma once

#include <optional>
#include <span>
#include <utility>

#include "domgeo/engine.hpp"
#include "domgeo/static_nn.hpp"

namespace domgeo {

/// O(n^2) nearest dominator for any dimensions.
DominatorResult brute_nearest_dominator(const Dataset& ds);

/// Nearest p_i to `p` among the points with q_i inside `r`.
std::optional<Neighbor> brute_rect_query(const Dataset& ds, const RealPoint& p, const QueryRect& r);

/// Linear-scan nearest site; throws UsageError on an empty site set.
Neighbor brute_nn(std::span<const Site> sites, Vec2 query);
Neighbor brute_nn(std::span<const std::pair<RealPoint, PointId>> sites, const RealPoint& query);

} // namespace domgeo
