#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "domgeo/errors.hpp"

namespace domgeo {

/// 0-based index of a point within its Dataset.
using PointId = std::uint32_t;

namespace detail {

void require_finite(std::span<const double> coords, const char* what);

/// Owning coordinate vector; the tag keeps real-space and feature-space
/// points from being mixed up.
template <class Tag>
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
        require_finite(coords_, Tag::name);
    }
    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}
    explicit Point(std::span<const double> coords)
        : Point(std::vector<double>(coords.begin(), coords.end())) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t k) const { return coords_[k]; }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

struct RealTag {
    static constexpr const char* name = "real point";
};
struct FeatureTag {
    static constexpr const char* name = "feature point";
};

} // namespace detail

/// Location of a point; distances are measured here.
using RealPoint = detail::Point<detail::RealTag>;
/// Ratings of a point; dominance is evaluated here.
using FeaturePoint = detail::Point<detail::FeatureTag>;

/// Planar coordinates used by the indexes. One-dimensional real points are
/// embedded as (x, 0), which leaves every squared distance bit-identical.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Sum of squared coordinate differences, accumulated in coordinate order.
double squared_distance(const RealPoint& a, const RealPoint& b);
double squared_distance(std::span<const double> a, std::span<const double> b);

inline double squared_distance(Vec2 a, Vec2 b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// a ≻ b: every coordinate of a strictly greater than the one of b.
bool dominates(const FeaturePoint& a, const FeaturePoint& b);
bool dominates(std::span<const double> a, std::span<const double> b);

/// Nearest-neighbor answer. Candidates are ordered by (sqdist, id); this is
/// the global tie rule every algorithm and oracle applies.
struct Neighbor {
    PointId id = 0;
    double sqdist = 0.0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

inline bool closer(const Neighbor& a, const Neighbor& b) noexcept {
    return a.sqdist < b.sqdist || (a.sqdist == b.sqdist && a.id < b.id);
}

/// One dimension of a QueryRect. Infinite bounds are always exclusive.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_inclusive = false;
    bool hi_inclusive = false;

    bool above_lo(double v) const noexcept { return lo_inclusive ? v >= lo : v > lo; }
    bool below_hi(double v) const noexcept { return hi_inclusive ? v <= hi : v < hi; }
    bool contains(double v) const noexcept { return above_lo(v) && below_hi(v); }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-parallel box in feature space with per-bound inclusivity.
class QueryRect {
public:
    explicit QueryRect(std::vector<Interval> dims);

    /// The whole feature space.
    static QueryRect full(std::size_t dim);
    /// (q1, ∞) × ... × (qd, ∞): the points that dominate q.
    static QueryRect dominance_quadrant(std::span<const double> q);
    static QueryRect dominance_quadrant(const FeaturePoint& q) {
        return dominance_quadrant(q.coords());
    }

    std::size_t dim() const noexcept { return dims_.size(); }
    const Interval& operator[](std::size_t k) const { return dims_[k]; }
    std::span<const Interval> intervals() const noexcept { return dims_; }

private:
    std::vector<Interval> dims_;
};

bool rect_contains(const QueryRect& r, const FeaturePoint& q);
bool rect_contains(const QueryRect& r, std::span<const double> q);

/// Sign of the signed area of (a, b, c): +1 counter-clockwise, -1 clockwise,
/// 0 collinear. Exact.
int orientation(Vec2 a, Vec2 b, Vec2 c);
int orientation(const RealPoint& a, const RealPoint& b, const RealPoint& c);

/// +1 iff d lies strictly inside the circle through the counter-clockwise
/// triangle (a, b, c), 0 if on it, -1 outside. Exact.
int in_circle(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
int in_circle(const RealPoint& a, const RealPoint& b, const RealPoint& c, const RealPoint& d);

/// Parallel point sets P (real space) and Q (feature space), stored flat.
class Dataset {
public:
    Dataset(std::size_t d_real, std::size_t d_feat);
    Dataset(std::vector<RealPoint> real, std::vector<FeaturePoint> features);

    void add(std::span<const double> real, std::span<const double> features);
    void add(const RealPoint& real, const FeaturePoint& features) {
        add(real.coords(), features.coords());
    }

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    std::size_t d_real() const noexcept { return d_real_; }
    std::size_t d_feat() const noexcept { return d_feat_; }

    std::span<const double> real(std::size_t i) const {
        return {real_.data() + i * d_real_, d_real_};
    }
    std::span<const double> feature(std::size_t i) const {
        return {feat_.data() + i * d_feat_, d_feat_};
    }
    double feature(std::size_t i, std::size_t k) const { return feat_[i * d_feat_ + k]; }
    RealPoint real_point(std::size_t i) const { return RealPoint(real(i)); }
    FeaturePoint feature_point(std::size_t i) const { return FeaturePoint(feature(i)); }

    /// Planar embedding of p_i; requires d_real <= 2.
    Vec2 planar(std::size_t i) const {
        return d_real_ == 1 ? Vec2{real_[i], 0.0} : Vec2{real_[2 * i], real_[2 * i + 1]};
    }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::size_t d_real_;
    std::size_t d_feat_;
    std::size_t n_ = 0;
    std::vector<double> real_;
    std::vector<double> feat_;
};

/// Planar embedding of a query point of dimension 1 or 2.
Vec2 to_planar(const RealPoint& p);

} // namespace domgeo
