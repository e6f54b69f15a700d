#include "domgeo/geometry.hpp"

#include <cmath>
#include <string>

namespace domgeo {

namespace detail {

void require_finite(std::span<const double> coords, const char* what) {
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw UsageError(std::string(what) + " has a non-finite coordinate");
        }
    }
}

} // namespace detail

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw UsageError(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
    }
}

Vec2 planar2(const RealPoint& p, const char* op) {
    if (p.dim() != 2) {
        throw UsageError(std::string(op) + " requires two-dimensional real points");
    }
    return {p[0], p[1]};
}

} // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a.size(), b.size(), "squared_distance");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return sum;
}

double squared_distance(const RealPoint& a, const RealPoint& b) {
    return squared_distance(a.coords(), b.coords());
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a.size(), b.size(), "dominates");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!(a[k] > b[k])) return false;
    }
    return true;
}

bool dominates(const FeaturePoint& a, const FeaturePoint& b) {
    return dominates(a.coords(), b.coords());
}

QueryRect::QueryRect(std::vector<Interval> dims) : dims_(std::move(dims)) {
    for (const Interval& iv : dims_) {
        if (std::isnan(iv.lo) || std::isnan(iv.hi)) throw UsageError("QueryRect: NaN bound");
        if (iv.lo == std::numeric_limits<double>::infinity() ||
            iv.hi == -std::numeric_limits<double>::infinity()) {
            throw UsageError("QueryRect: lower bound +inf or upper bound -inf");
        }
        if ((std::isinf(iv.lo) && iv.lo_inclusive) || (std::isinf(iv.hi) && iv.hi_inclusive)) {
            throw UsageError("QueryRect: infinite bounds must be exclusive");
        }
        if (iv.lo > iv.hi || (iv.lo == iv.hi && !(iv.lo_inclusive && iv.hi_inclusive))) {
            throw UsageError("QueryRect: empty interval");
        }
    }
}

QueryRect QueryRect::full(std::size_t dim) { return QueryRect(std::vector<Interval>(dim)); }

QueryRect QueryRect::dominance_quadrant(std::span<const double> q) {
    detail::require_finite(q, "quadrant corner");
    std::vector<Interval> dims(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) dims[k].lo = q[k];
    return QueryRect(std::move(dims));
}

bool rect_contains(const QueryRect& r, std::span<const double> q) {
    require_same_dim(r.dim(), q.size(), "rect_contains");
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (!r[k].contains(q[k])) return false;
    }
    return true;
}

bool rect_contains(const QueryRect& r, const FeaturePoint& q) { return rect_contains(r, q.coords()); }

int orientation(const RealPoint& a, const RealPoint& b, const RealPoint& c) {
    return orientation(planar2(a, "orientation"), planar2(b, "orientation"),
                       planar2(c, "orientation"));
}

int in_circle(const RealPoint& a, const RealPoint& b, const RealPoint& c, const RealPoint& d) {
    return in_circle(planar2(a, "in_circle"), planar2(b, "in_circle"), planar2(c, "in_circle"),
                     planar2(d, "in_circle"));
}

Dataset::Dataset(std::size_t d_real, std::size_t d_feat) : d_real_(d_real), d_feat_(d_feat) {
    if (d_real == 0) throw UsageError("Dataset: d_real must be at least 1");
    if (d_feat == 0) throw UsageError("Dataset: d_feat must be at least 1");
}

Dataset::Dataset(std::vector<RealPoint> real, std::vector<FeaturePoint> features)
    : Dataset(real.empty() ? 1 : real.front().dim(), features.empty() ? 1 : features.front().dim()) {
    if (real.size() != features.size()) {
        throw UsageError("Dataset: |P| and |Q| differ");
    }
    for (std::size_t i = 0; i < real.size(); ++i) add(real[i], features[i]);
}

void Dataset::add(std::span<const double> real, std::span<const double> features) {
    require_same_dim(real.size(), d_real_, "Dataset::add (real)");
    require_same_dim(features.size(), d_feat_, "Dataset::add (feature)");
    detail::require_finite(real, "real point");
    detail::require_finite(features, "feature point");
    if (n_ >= std::numeric_limits<PointId>::max()) throw UsageError("Dataset: too many points");
    real_.insert(real_.end(), real.begin(), real.end());
    feat_.insert(feat_.end(), features.begin(), features.end());
    ++n_;
}

Vec2 to_planar(const RealPoint& p) {
    if (p.dim() == 1) return {p[0], 0.0};
    if (p.dim() == 2) return {p[0], p[1]};
    throw UsageError("indexed queries support one- or two-dimensional real points only");
}

} // namespace domgeo
