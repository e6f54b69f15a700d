// Orientation and in-circle tests with exact signs.
//
// A floating-point evaluation is accepted when its magnitude exceeds a
// forward error bound; otherwise the determinant is re-evaluated exactly with
// floating-point expansions (nonoverlapping sums of doubles). Inputs whose
// products overflow or underflow are outside the supported range.

#include "domgeo/geometry.hpp"

#include <cmath>
#include <vector>

namespace domgeo {

namespace {

constexpr double kEpsilon = 0x1p-53;
constexpr double kSplitter = 134217729.0; // 2^27 + 1
constexpr double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIccErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

using Expansion = std::vector<double>;

inline void fast_two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bvirt = x - a;
    y = b - bvirt;
}

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bvirt = x - a;
    const double avirt = x - bvirt;
    const double bround = b - bvirt;
    const double around = a - avirt;
    y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    const double bvirt = a - x;
    const double avirt = x + bvirt;
    const double bround = bvirt - b;
    const double around = a - avirt;
    y = around + bround;
}

inline void split(double a, double& hi, double& lo) {
    const double c = kSplitter * a;
    const double abig = c - a;
    hi = c - abig;
    lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    const double err1 = x - (ahi * bhi);
    const double err2 = err1 - (alo * bhi);
    const double err3 = err2 - (ahi * blo);
    y = (alo * blo) - err3;
}

// Exact a - b as an expansion of at most two components.
Expansion difference(double a, double b) {
    double x, y;
    two_diff(a, b, x, y);
    Expansion e;
    if (y != 0.0) e.push_back(y);
    if (x != 0.0) e.push_back(x);
    return e;
}

// Sum of two expansions, zero components removed.
Expansion sum(const Expansion& e, const Expansion& f) {
    if (e.empty()) return f;
    if (f.empty()) return e;
    Expansion h;
    h.reserve(e.size() + f.size());
    std::size_t ei = 0, fi = 0;
    double enow = e[0], fnow = f[0];
    double q, hh;
    auto next_smallest = [&]() {
        double v;
        if ((fnow > enow) == (fnow > -enow)) {
            v = enow;
            ++ei;
            if (ei < e.size()) enow = e[ei];
        } else {
            v = fnow;
            ++fi;
            if (fi < f.size()) fnow = f[fi];
        }
        return v;
    };
    q = next_smallest();
    if (ei < e.size() && fi < f.size()) {
        double nxt = next_smallest();
        fast_two_sum(nxt, q, q, hh);
        if (hh != 0.0) h.push_back(hh);
        while (ei < e.size() && fi < f.size()) {
            nxt = next_smallest();
            two_sum(q, nxt, q, hh);
            if (hh != 0.0) h.push_back(hh);
        }
    }
    while (ei < e.size()) {
        two_sum(q, enow, q, hh);
        if (hh != 0.0) h.push_back(hh);
        ++ei;
        if (ei < e.size()) enow = e[ei];
    }
    while (fi < f.size()) {
        two_sum(q, fnow, q, hh);
        if (hh != 0.0) h.push_back(hh);
        ++fi;
        if (fi < f.size()) fnow = f[fi];
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    if (h.size() == 1 && h[0] == 0.0) h.clear();
    return h;
}

// Expansion times a double, zero components removed.
Expansion scale(const Expansion& e, double b) {
    Expansion h;
    if (e.empty() || b == 0.0) return h;
    h.reserve(2 * e.size());
    double q, hh, product1, product0, sum_;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h.push_back(hh);
    for (std::size_t i = 1; i < e.size(); ++i) {
        two_product(e[i], b, product1, product0);
        two_sum(q, product0, sum_, hh);
        if (hh != 0.0) h.push_back(hh);
        fast_two_sum(product1, sum_, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0) h.push_back(q);
    return h;
}

Expansion product(const Expansion& e, const Expansion& f) {
    Expansion acc;
    for (double c : f) acc = sum(acc, scale(e, c));
    return acc;
}

Expansion negate(Expansion e) {
    for (double& c : e) c = -c;
    return e;
}

int sign_of(const Expansion& e) {
    // Components are ordered by increasing magnitude; the last one carries the sign.
    if (e.empty()) return 0;
    return e.back() > 0.0 ? 1 : (e.back() < 0.0 ? -1 : 0);
}

int orientation_exact(Vec2 a, Vec2 b, Vec2 c) {
    const Expansion acx = difference(a.x, c.x);
    const Expansion bcy = difference(b.y, c.y);
    const Expansion acy = difference(a.y, c.y);
    const Expansion bcx = difference(b.x, c.x);
    return sign_of(sum(product(acx, bcy), negate(product(acy, bcx))));
}

int in_circle_exact(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const Expansion adx = difference(a.x, d.x), ady = difference(a.y, d.y);
    const Expansion bdx = difference(b.x, d.x), bdy = difference(b.y, d.y);
    const Expansion cdx = difference(c.x, d.x), cdy = difference(c.y, d.y);

    const Expansion bc = sum(product(bdx, cdy), negate(product(cdx, bdy)));
    const Expansion ca = sum(product(cdx, ady), negate(product(adx, cdy)));
    const Expansion ab = sum(product(adx, bdy), negate(product(bdx, ady)));

    const Expansion alift = sum(product(adx, adx), product(ady, ady));
    const Expansion blift = sum(product(bdx, bdx), product(bdy, bdy));
    const Expansion clift = sum(product(cdx, cdx), product(cdy, cdy));

    return sign_of(sum(sum(product(alift, bc), product(blift, ca)), product(clift, ab)));
}

} // namespace

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double errbound = kCcwErrBound * (std::fabs(detleft) + std::fabs(detright));
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return orientation_exact(a, b, c);
}

int in_circle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIccErrBound * permanent;
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return in_circle_exact(a, b, c, d);
}

} // namespace domgeo
