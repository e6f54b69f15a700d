#include "domgeo/static_nn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "domgeo/delaunay.hpp"

namespace domgeo {

namespace {

constexpr double kRelativeSlack = 1e-12;
constexpr double kAbsoluteSlack = 1e-300;

// Membership set for the tie window. Windows hold a handful of sites except
// on cocircular inputs, so start with a linear scan.
class VisitSet {
public:
    bool insert(std::uint32_t v) {
        if (big_.empty()) {
            if (std::find(small_.begin(), small_.end(), v) != small_.end()) return false;
            small_.push_back(v);
            if (small_.size() > 32) big_.insert(small_.begin(), small_.end());
            return true;
        }
        return big_.insert(v).second;
    }

private:
    std::vector<std::uint32_t> small_;
    std::unordered_set<std::uint32_t> big_;
};

double window(double sqdist) { return sqdist * (1.0 + kRelativeSlack) + kAbsoluteSlack; }

} // namespace

StaticNNIndex StaticNNIndex::build(std::span<const Site> sites, std::size_t d_real) {
    if (sites.empty()) throw UsageError("build_static_nn: empty site set");
    if (d_real != 1 && d_real != 2) throw UsageError("build_static_nn: d_real must be 1 or 2");
    if (sites.size() >= std::numeric_limits<std::uint32_t>::max() / 8) {
        throw UsageError("build_static_nn: too many sites");
    }

    StaticNNIndex idx;
    idx.d_real_ = static_cast<std::uint8_t>(d_real);
    idx.size_ = static_cast<std::uint32_t>(sites.size());

    std::vector<Site> sorted(sites.begin(), sites.end());
    for (Site& s : sorted) {
        detail::require_finite(std::span<const double>(&s.pos.x, 1), "site");
        detail::require_finite(std::span<const double>(&s.pos.y, 1), "site");
        if (d_real == 1) s.pos.y = 0.0;
    }
    if (sorted.size() > 1) {
        std::vector<PointId> ids(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) ids[i] = sorted[i].id;
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
            throw UsageError("build_static_nn: duplicate id");
        }
    }
    std::sort(sorted.begin(), sorted.end(), [](const Site& a, const Site& b) {
        if (a.pos.x != b.pos.x) return a.pos.x < b.pos.x;
        if (a.pos.y != b.pos.y) return a.pos.y < b.pos.y;
        return a.id < b.id;
    });
    std::vector<Site> distinct;
    distinct.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i == 0 || !(sorted[i].pos == sorted[i - 1].pos)) distinct.push_back(sorted[i]);
    }
    const std::size_t u = distinct.size();
    idx.distinct_ = static_cast<std::uint32_t>(u);

    std::vector<Vec2> positions(u);
    for (std::size_t i = 0; i < u; ++i) positions[i] = distinct[i].pos;

    const bool planar = d_real == 2 && u >= 3 && !DelaunayTriangulation::collinear(positions);
    if (!planar) {
        // Lexicographic order is the order along the common line.
        idx.kind_ = d_real == 1 ? Kind::Line : Kind::Degenerate;
        const Vec2 origin = positions.front();
        const Vec2 direction{positions.back().x - origin.x, positions.back().y - origin.y};
        idx.reals_.resize(3 * u + 4);
        idx.ints_.resize(u);
        for (std::size_t i = 0; i < u; ++i) {
            idx.reals_[i] = positions[i].x;
            idx.reals_[u + i] = positions[i].y;
            idx.reals_[2 * u + i] = (positions[i].x - origin.x) * direction.x +
                                    (positions[i].y - origin.y) * direction.y;
            idx.ints_[i] = distinct[i].id;
        }
        idx.reals_[3 * u] = origin.x;
        idx.reals_[3 * u + 1] = origin.y;
        idx.reals_[3 * u + 2] = direction.x;
        idx.reals_[3 * u + 3] = direction.y;
        return idx;
    }

    idx.kind_ = Kind::Planar;
    // Hierarchy level of each distinct site, drawn from a fixed-seed stream
    // in lexicographic order.
    std::mt19937_64 rng(0x5eed5eedull);
    std::vector<std::uint32_t> level(u, 0);
    for (std::uint32_t& l : level) {
        while (l < 24 && rng() % kSampleRatio == 0) ++l;
    }
    std::vector<std::uint32_t> order(u);
    for (std::uint32_t i = 0; i < u; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return level[a] > level[b]; });
    idx.reals_.resize(2 * u);
    idx.ints_.resize(u);
    for (std::size_t r = 0; r < u; ++r) {
        const Site& s = distinct[order[r]];
        idx.reals_[r] = s.pos.x;
        idx.reals_[u + r] = s.pos.y;
        idx.ints_[r] = s.id;
        positions[r] = s.pos;
    }

    std::vector<std::uint32_t> sizes;
    std::vector<std::vector<std::uint32_t>> offsets, targets;
    for (std::uint32_t l = 0;; ++l) {
        const auto count = static_cast<std::size_t>(
            std::count_if(level.begin(), level.end(), [l](std::uint32_t v) { return v >= l; }));
        if (l > 0 && count < kMinLevelSites) break;
        const std::span<const Vec2> prefix(positions.data(), count);
        if (l > 0 && DelaunayTriangulation::collinear(prefix)) break;
        const DelaunayTriangulation dt(prefix);
        sizes.push_back(static_cast<std::uint32_t>(count));
        offsets.emplace_back();
        targets.emplace_back();
        dt.adjacency(offsets.back(), targets.back());
    }
    const std::size_t levels = sizes.size();
    idx.levels_ = static_cast<std::uint32_t>(levels);
    std::size_t total = u + 3 * levels;
    for (std::size_t l = 0; l < levels; ++l) total += offsets[l].size() + targets[l].size();
    idx.ints_.reserve(total);
    idx.ints_.insert(idx.ints_.end(), sizes.begin(), sizes.end());
    std::size_t cursor = u + 3 * levels;
    for (std::size_t l = 0; l < levels; ++l) {
        idx.ints_.push_back(static_cast<std::uint32_t>(cursor));
        cursor += offsets[l].size();
    }
    for (std::size_t l = 0; l < levels; ++l) {
        idx.ints_.push_back(static_cast<std::uint32_t>(cursor));
        cursor += targets[l].size();
    }
    for (std::size_t l = 0; l < levels; ++l) {
        idx.ints_.insert(idx.ints_.end(), offsets[l].begin(), offsets[l].end());
    }
    for (std::size_t l = 0; l < levels; ++l) {
        idx.ints_.insert(idx.ints_.end(), targets[l].begin(), targets[l].end());
    }
    return idx;
}

std::span<const std::uint32_t> StaticNNIndex::adjacent(std::size_t level, std::uint32_t v) const {
    const std::uint32_t* header = ints_.data() + distinct_ + levels_;
    const std::uint32_t* off = ints_.data() + header[level];
    const std::uint32_t* tgt = ints_.data() + header[levels_ + level];
    return {tgt + off[v], off[v + 1] - off[v]};
}

std::uint32_t StaticNNIndex::greedy_level(std::size_t level, std::uint32_t v, Vec2 q) const {
    Neighbor best = key(v, q);
    for (;;) {
        std::uint32_t next = v;
        for (std::uint32_t w : adjacent(level, v)) {
            const Neighbor k = key(w, q);
            if (closer(k, best)) {
                best = k;
                next = w;
            }
        }
        if (next == v) return v;
        v = next;
    }
}

// Greedy descent to a local minimum of the (sqdist, id) key, then a search of
// every site connected to it through keys within the rounding window. A
// strictly better site found there restarts the descent.
template <class Neighbors>
Neighbor StaticNNIndex::exact_search(std::uint32_t v, Vec2 q, Neighbors&& neighbors) const {
    for (;;) {
        Neighbor best = key(v, q);
        for (bool moved = true; moved;) {
            moved = false;
            neighbors(v, [&](std::uint32_t w) {
                const Neighbor k = key(w, q);
                if (closer(k, best)) {
                    best = k;
                    v = w;
                    moved = true;
                }
            });
        }

        const double limit = window(best.sqdist);
        std::uint32_t champion = v;
        Neighbor champion_key = best;
        VisitSet seen;
        seen.insert(v);
        std::vector<std::uint32_t> frontier{v};
        while (!frontier.empty()) {
            const std::uint32_t u = frontier.back();
            frontier.pop_back();
            neighbors(u, [&](std::uint32_t w) {
                const Neighbor k = key(w, q);
                if (!(k.sqdist <= limit) || !seen.insert(w)) return;
                frontier.push_back(w);
                if (closer(k, champion_key)) {
                    champion_key = k;
                    champion = w;
                }
            });
        }
        if (champion == v) return best;
        v = champion;
    }
}

Neighbor StaticNNIndex::nearest(Vec2 q) const {
    if (d_real_ == 1) q.y = 0.0;
    if (kind_ != Kind::Planar) {
        const std::uint32_t count = distinct_;
        const double* params = reals_.data() + 2 * count;
        const double* line = params + count;
        const double t = (q.x - line[0]) * line[2] + (q.y - line[1]) * line[3];
        auto start = static_cast<std::uint32_t>(std::lower_bound(params, params + count, t) - params);
        if (start == count) start = count - 1;
        return exact_search(start, q, [count](std::uint32_t v, auto&& visit) {
            if (v > 0) visit(v - 1);
            if (v + 1 < count) visit(v + 1);
        });
    }
    std::uint32_t v = 0;
    for (std::size_t l = levels_; l-- > 1;) v = greedy_level(l, v, q);
    return exact_search(v, q, [this](std::uint32_t u, auto&& visit) {
        for (std::uint32_t w : adjacent(0, u)) visit(w);
    });
}

Neighbor StaticNNIndex::nearest(const RealPoint& query) const {
    if (query.dim() != d_real_) throw UsageError("nearest_site: dimension mismatch");
    return nearest(to_planar(query));
}

StaticNNIndex build_static_nn(std::span<const std::pair<RealPoint, PointId>> sites) {
    if (sites.empty()) throw UsageError("build_static_nn: empty site set");
    const std::size_t d = sites.front().first.dim();
    std::vector<Site> flat;
    flat.reserve(sites.size());
    for (const auto& [p, id] : sites) {
        if (p.dim() != d) throw UsageError("build_static_nn: inconsistent dimensions");
        flat.push_back({to_planar(p), id});
    }
    return StaticNNIndex::build(flat, d);
}

} // namespace domgeo
