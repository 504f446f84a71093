#include "ivroot/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ivroot/rounding.hpp"

namespace ivroot {

namespace {

// Shared exit point for arithmetic: reject endpoints that left the finite
// range and normalize -0.0 so rendering is deterministic.
Interval finalize(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw OverflowError("interval endpoint overflowed binary64");
    return Interval(lo, hi);
}

} // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) // also catches NaN
        throw BadInterval("invalid interval endpoints: lo > hi or NaN");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw BadInterval("interval endpoints must be finite");
    if (lo_ == 0.0) lo_ = 0.0; // -0.0 -> +0.0
    if (hi_ == 0.0) hi_ = 0.0;
}

Interval operator+(const Interval& x, const Interval& y) {
    return finalize(detail::add_down(x.lo(), y.lo()), detail::add_up(x.hi(), y.hi()));
}

// X - Y = [x.lo - y.hi, x.hi - y.lo]
Interval operator-(const Interval& x, const Interval& y) {
    return finalize(detail::sub_down(x.lo(), y.hi()), detail::sub_up(x.hi(), y.lo()));
}

Interval operator-(const Interval& x) {
    return Interval(-x.hi(), -x.lo());
}

// X * Y = [min of the four endpoint products, max of the four]
Interval operator*(const Interval& x, const Interval& y) {
    double lo = std::min({detail::mul_down(x.lo(), y.lo()), detail::mul_down(x.lo(), y.hi()),
                          detail::mul_down(x.hi(), y.lo()), detail::mul_down(x.hi(), y.hi())});
    double hi = std::max({detail::mul_up(x.lo(), y.lo()), detail::mul_up(x.lo(), y.hi()),
                          detail::mul_up(x.hi(), y.lo()), detail::mul_up(x.hi(), y.hi())});
    return finalize(lo, hi);
}

// X / Y = X * (1/Y), 0 not in Y.  As a set this equals the corner-quotient
// hull, which is computed directly so each endpoint pays one rounding.
Interval operator/(const Interval& x, const Interval& y) {
    if (y.lo() <= 0.0 && 0.0 <= y.hi())
        throw ZeroInDenominator("division by an interval containing zero");
    double lo = std::min({detail::div_down(x.lo(), y.lo()), detail::div_down(x.lo(), y.hi()),
                          detail::div_down(x.hi(), y.lo()), detail::div_down(x.hi(), y.hi())});
    double hi = std::max({detail::div_up(x.lo(), y.lo()), detail::div_up(x.lo(), y.hi()),
                          detail::div_up(x.hi(), y.lo()), detail::div_up(x.hi(), y.hi())});
    return finalize(lo, hi);
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
    double lo = std::max(x.lo(), y.lo());
    double hi = std::min(x.hi(), y.hi());
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

double midpoint(const Interval& x) {
    double m = 0.5 * (x.lo() + x.hi());
    if (!std::isfinite(m)) m = 0.5 * x.lo() + 0.5 * x.hi();
    return std::clamp(m, x.lo(), x.hi());
}

double width(const Interval& x) {
    return detail::sub_up(x.hi(), x.lo());
}

double radius(const Interval& x) {
    return detail::mul_up(0.5, width(x));
}

double magnitude(const Interval& x) {
    return std::max(std::fabs(x.lo()), std::fabs(x.hi()));
}

bool contains(const Interval& x, double t) {
    return x.lo() <= t && t <= x.hi();
}

bool is_subset(const Interval& x, const Interval& y) {
    return y.lo() <= x.lo() && x.hi() <= y.hi();
}

std::string to_string(const Interval& x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", x.lo(), x.hi());
    return buf;
}

} // namespace ivroot
