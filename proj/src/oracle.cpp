#include "domgeo/oracle.hpp"

namespace domgeo {

DominatorResult brute_nearest_dominator(const Dataset& ds) {
    const std::size_t n = ds.size();
    DominatorResult out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!dominates(ds.feature(j), ds.feature(i))) continue;
            const Neighbor cand{static_cast<PointId>(j), squared_distance(ds.real(i), ds.real(j))};
            if (!out[i] || closer(cand, *out[i])) out[i] = cand;
        }
    }
    return out;
}

std::optional<Neighbor> brute_rect_query(const Dataset& ds, const RealPoint& p, const QueryRect& r) {
    if (p.dim() != ds.d_real() || r.dim() != ds.d_feat()) {
        throw UsageError("brute_rect_query: dimension mismatch");
    }
    std::optional<Neighbor> best;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!rect_contains(r, ds.feature(i))) continue;
        const Neighbor cand{static_cast<PointId>(i), squared_distance(p.coords(), ds.real(i))};
        if (!best || closer(cand, *best)) best = cand;
    }
    return best;
}

Neighbor brute_nn(std::span<const Site> sites, Vec2 query) {
    if (sites.empty()) throw UsageError("brute_nn: empty site set");
    Neighbor best{sites[0].id, squared_distance(sites[0].pos, query)};
    for (const Site& s : sites.subspan(1)) {
        const Neighbor cand{s.id, squared_distance(s.pos, query)};
        if (closer(cand, best)) best = cand;
    }
    return best;
}

Neighbor brute_nn(std::span<const std::pair<RealPoint, PointId>> sites, const RealPoint& query) {
    if (sites.empty()) throw UsageError("brute_nn: empty site set");
    std::optional<Neighbor> best;
    for (const auto& [p, id] : sites) {
        const Neighbor cand{id, squared_distance(p, query)};
        if (!best || closer(cand, *best)) best = cand;
    }
    return *best;
}

} // namespace domgeo
