#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ivroot {

class IntervalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction with lo > hi, NaN, or infinite endpoints.
class BadInterval : public IntervalError {
public:
    using IntervalError::IntervalError;
};

// An arithmetic endpoint left the finite binary64 range.
class OverflowError : public IntervalError {
public:
    using IntervalError::IntervalError;
};

// Division by an interval containing zero (no extended division).
class ZeroInDenominator : public IntervalError {
public:
    using IntervalError::IntervalError;
};

// Closed interval [lo, hi] over finite binary64 endpoints, lo <= hi.
// The empty set is not representable; operations that can produce it
// (intersection) return std::nullopt instead.  All operations are pure
// values; nothing here touches global state, so concurrent use is free.
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double lo, double hi);

    static Interval thin(double v) { return Interval(v, v); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool operator==(const Interval&) const = default;

private:
    double lo_;
    double hi_;
};

// Outward-rounded arithmetic: every result is a superset of the exact set
// operation.  Exact endpoint computations are kept exact (no widening).
Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
Interval operator/(const Interval& x, const Interval& y); // 0 not in y
Interval operator-(const Interval& x);

// [max(lo), min(hi)], exact; nullopt when the intervals are disjoint.
std::optional<Interval> intersect(const Interval& x, const Interval& y);

// Round-to-nearest midpoint, clamped into the interval.
double midpoint(const Interval& x);

// Upper-rounded hi - lo, so a stopping test never under-reports size.
double width(const Interval& x);

// Upper-rounded half width.
double radius(const Interval& x);

// max(|lo|, |hi|), exact.
double magnitude(const Interval& x);

bool contains(const Interval& x, double t);
bool is_subset(const Interval& x, const Interval& y); // x subset of y, non-strict

// "[<lo>, <hi>]" with 17 significant digits (round-trip exact).
std::string to_string(const Interval& x);

} // namespace ivroot
