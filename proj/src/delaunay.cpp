#include "domgeo/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace domgeo {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y, std::uint32_t cells) {
    std::uint64_t d = 0;
    for (std::uint32_t s = cells / 2; s > 0; s /= 2) {
        const std::uint32_t rx = (x & s) ? 1 : 0;
        const std::uint32_t ry = (y & s) ? 1 : 0;
        d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
        if (ry == 0) {
            if (rx == 1) {
                x = cells - 1 - x;
                y = cells - 1 - y;
            }
            std::swap(x, y);
        }
    }
    return d;
}

std::uint32_t quantize(double v, double lo, double span, std::uint32_t cells) {
    if (!(span > 0.0)) return 0;
    const double t = (v - lo) / span * static_cast<double>(cells - 1);
    if (!(t > 0.0)) return 0;
    if (t >= static_cast<double>(cells - 1)) return cells - 1;
    return static_cast<std::uint32_t>(t);
}

bool strictly_between(Vec2 a, Vec2 b, Vec2 p) {
    if (a.x != b.x) return std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x);
    return std::min(a.y, b.y) < p.y && p.y < std::max(a.y, b.y);
}

} // namespace

std::vector<std::uint32_t> hilbert_order(std::span<const Vec2> points) {
    constexpr std::uint32_t kBits = 16;
    constexpr std::uint32_t kCells = 1u << kBits;
    std::vector<std::uint32_t> order(points.size());
    if (points.empty()) return order;
    double minx = points[0].x, maxx = minx, miny = points[0].y, maxy = miny;
    for (const Vec2& p : points) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double span = std::max(maxx - minx, maxy - miny);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(points.size());
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        keyed[i] = {hilbert_index(quantize(points[i].x, minx, span, kCells),
                                  quantize(points[i].y, miny, span, kCells), kCells),
                    i};
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) order[i] = keyed[i].second;
    return order;
}

bool DelaunayTriangulation::collinear(std::span<const Vec2> points) {
    if (points.size() < 3) return true;
    const Vec2 a = points[0];
    std::size_t j = 1;
    while (j < points.size() && points[j] == a) ++j;
    if (j == points.size()) return true;
    const Vec2 b = points[j];
    for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (orientation(a, b, points[k]) != 0) return false;
    }
    return true;
}

DelaunayTriangulation::DelaunayTriangulation(std::span<const Vec2> points)
    : points_(points.begin(), points.end()) {
    const std::size_t n = points_.size();
    if (n < 3) throw UsageError("DelaunayTriangulation: need at least 3 points");
    if (n >= kGhost) throw UsageError("DelaunayTriangulation: too many points");

    std::vector<std::uint32_t> order = hilbert_order(points_);
    if (points_[order[0]] == points_[order[1]]) {
        throw UsageError("DelaunayTriangulation: duplicate point");
    }
    std::size_t third = 2;
    while (third < n &&
           orientation(points_[order[0]], points_[order[1]], points_[order[third]]) == 0) {
        ++third;
    }
    if (third == n) throw UsageError("DelaunayTriangulation: all points collinear");
    std::rotate(order.begin() + 2, order.begin() + static_cast<std::ptrdiff_t>(third),
                order.begin() + static_cast<std::ptrdiff_t>(third) + 1);

    std::uint32_t a = order[0], b = order[1], c = order[2];
    if (orientation(points_[a], points_[b], points_[c]) < 0) std::swap(b, c);

    // One finite triangle and the three ghosts around it. Ghost i sits across
    // the edge opposite vertex i and stores that edge reversed.
    tris_.resize(4);
    const std::array<std::uint32_t, 3> v{a, b, c};
    tris_[0] = Triangle{v, {1, 2, 3}};
    for (std::uint32_t i = 0; i < 3; ++i) {
        const std::uint32_t x = v[(i + 1) % 3];
        const std::uint32_t y = v[(i + 2) % 3];
        Triangle& g = tris_[1 + i];
        g.v = {y, x, kGhost};
        g.nbr = {1 + (i + 2) % 3, 1 + (i + 1) % 3, 0};
    }
    mark_.assign(tris_.size(), 0);
    by_start_.assign(n + 1, kNone);
    by_end_.assign(n + 1, kNone);
    hint_ = 0;

    for (std::size_t k = 3; k < n; ++k) insert(order[k]);
    compact();
    mark_.clear();
    mark_.shrink_to_fit();
    by_start_.clear();
    by_start_.shrink_to_fit();
    by_end_.clear();
    by_end_.shrink_to_fit();
}

bool DelaunayTriangulation::conflicts(const Triangle& t, Vec2 p) const {
    for (int k = 0; k < 3; ++k) {
        if (t.v[k] != kGhost) continue;
        const Vec2 u = points_[t.v[(k + 1) % 3]];
        const Vec2 w = points_[t.v[(k + 2) % 3]];
        const int o = orientation(u, w, p);
        return o > 0 || (o == 0 && strictly_between(u, w, p));
    }
    return in_circle(points_[t.v[0]], points_[t.v[1]], points_[t.v[2]], p) > 0;
}

std::uint32_t DelaunayTriangulation::locate(Vec2 p, std::uint32_t start) {
    std::uint32_t t = start;
    const std::size_t limit = 4 * tris_.size() + 64;
    for (std::size_t steps = 0; steps < limit; ++steps) {
        const Triangle& tri = tris_[t];
        rng_ ^= rng_ << 13;
        rng_ ^= rng_ >> 7;
        rng_ ^= rng_ << 17;
        const unsigned base = static_cast<unsigned>(rng_ % 3);
        std::uint32_t next = kNone;
        for (unsigned k = 0; k < 3; ++k) {
            const unsigned i = (base + k) % 3;
            const Vec2 a = points_[tri.v[(i + 1) % 3]];
            const Vec2 b = points_[tri.v[(i + 2) % 3]];
            if (orientation(a, b, p) < 0) {
                next = tri.nbr[i];
                break;
            }
        }
        if (next == kNone) return t;
        if (is_ghost(tris_[next])) return next;
        t = next;
    }
    // The walk cannot cycle in a Delaunay triangulation; keep a linear
    // fallback so a logic error degrades to slowness instead of a hang.
    for (std::uint32_t i = 0; i < tris_.size(); ++i) {
        const Triangle& tri = tris_[i];
        if (tri.v[0] == tri.v[1]) continue;
        if (conflicts(tri, p)) return i;
    }
    throw std::logic_error("DelaunayTriangulation: point location failed");
}

std::uint32_t DelaunayTriangulation::new_triangle() {
    if (!free_.empty()) {
        const std::uint32_t t = free_.back();
        free_.pop_back();
        return t;
    }
    tris_.emplace_back();
    mark_.push_back(0);
    return static_cast<std::uint32_t>(tris_.size() - 1);
}

void DelaunayTriangulation::insert(std::uint32_t p) {
    const Vec2 pos = points_[p];
    const std::uint32_t start = locate(pos, hint_);
    if (!is_ghost(tris_[start])) {
        for (std::uint32_t v : tris_[start].v) {
            if (points_[v] == pos) throw UsageError("DelaunayTriangulation: duplicate point");
        }
    }

    struct BoundaryEdge {
        std::uint32_t a, b, outside, old;
    };
    std::vector<std::uint32_t> cavity;
    std::vector<BoundaryEdge> boundary;
    std::vector<std::uint32_t> stack{start};
    if (++stamp_ == 0) {
        std::fill(mark_.begin(), mark_.end(), 0);
        stamp_ = 1;
    }
    mark_[start] = stamp_;
    while (!stack.empty()) {
        const std::uint32_t c = stack.back();
        stack.pop_back();
        cavity.push_back(c);
        for (int i = 0; i < 3; ++i) {
            const std::uint32_t nb = tris_[c].nbr[i];
            if (mark_[nb] == stamp_) continue;
            if (conflicts(tris_[nb], pos)) {
                mark_[nb] = stamp_;
                stack.push_back(nb);
            } else {
                boundary.push_back({tris_[c].v[(i + 1) % 3], tris_[c].v[(i + 2) % 3], nb, c});
            }
        }
    }

    const std::size_t n = points_.size();
    auto slot = [n](std::uint32_t v) { return v == kGhost ? n : static_cast<std::size_t>(v); };

    for (std::uint32_t c : cavity) {
        tris_[c].v = {kGhost, kGhost, kGhost};
        free_.push_back(c);
    }
    std::vector<std::uint32_t> created;
    created.reserve(boundary.size());
    for (const BoundaryEdge& e : boundary) {
        const std::uint32_t t = new_triangle();
        tris_[t].v = {e.a, e.b, p};
        tris_[t].nbr = {kNone, kNone, e.outside};
        mark_[t] = 0;
        Triangle& out = tris_[e.outside];
        for (int j = 0; j < 3; ++j) {
            if (out.nbr[j] == e.old && out.v[(j + 1) % 3] == e.b && out.v[(j + 2) % 3] == e.a) {
                out.nbr[j] = t;
                break;
            }
        }
        by_start_[slot(e.a)] = t;
        by_end_[slot(e.b)] = t;
        created.push_back(t);
    }
    for (std::uint32_t t : created) {
        Triangle& tri = tris_[t];
        tri.nbr[0] = by_start_[slot(tri.v[1])];
        tri.nbr[1] = by_end_[slot(tri.v[0])];
        if (tri.v[0] != kGhost && tri.v[1] != kGhost) hint_ = t;
    }
}

void DelaunayTriangulation::compact() {
    std::vector<std::uint32_t> remap(tris_.size(), kNone);
    std::uint32_t live = 0;
    for (std::uint32_t t = 0; t < tris_.size(); ++t) {
        if (tris_[t].v[0] == tris_[t].v[1]) continue;
        remap[t] = live++;
    }
    std::vector<Triangle> packed;
    packed.reserve(live);
    for (std::uint32_t t = 0; t < tris_.size(); ++t) {
        if (remap[t] == kNone) continue;
        Triangle tri = tris_[t];
        for (std::uint32_t& nb : tri.nbr) nb = remap[nb];
        packed.push_back(tri);
    }
    tris_ = std::move(packed);
    free_.clear();
    free_.shrink_to_fit();
}

std::vector<std::array<std::uint32_t, 3>> DelaunayTriangulation::finite_triangles() const {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (const Triangle& t : tris_) {
        if (!is_ghost(t)) out.push_back(t.v);
    }
    return out;
}

std::size_t DelaunayTriangulation::hull_edges() const {
    return static_cast<std::size_t>(
        std::count_if(tris_.begin(), tris_.end(), [](const Triangle& t) { return is_ghost(t); }));
}

void DelaunayTriangulation::adjacency(std::vector<std::uint32_t>& offsets,
                                      std::vector<std::uint32_t>& targets) const {
    // Each undirected edge is seen once per direction: interior edges from
    // their two triangles, hull edges from the finite side and the ghost.
    const std::size_t n = points_.size();
    offsets.assign(n + 1, 0);
    for (const Triangle& t : tris_) {
        for (int i = 0; i < 3; ++i) {
            const std::uint32_t x = t.v[i], y = t.v[(i + 1) % 3];
            if (x != kGhost && y != kGhost) ++offsets[x + 1];
        }
    }
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    targets.assign(offsets[n], 0);
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Triangle& t : tris_) {
        for (int i = 0; i < 3; ++i) {
            const std::uint32_t x = t.v[i], y = t.v[(i + 1) % 3];
            if (x != kGhost && y != kGhost) targets[cursor[x]++] = y;
        }
    }
}

} // namespace domgeo
