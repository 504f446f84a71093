#pragma once

#include <cmath>
#include <limits>

// Directed-rounding helpers built on round-to-nearest arithmetic.  Each
// operation computes the nearest result and an exact residual (two-sum for
// addition, fma for products/quotients); the residual decides whether the
// nearest result already bounds the exact value or must be stepped one ULP
// outward.  No FP environment state is touched, so everything here is
// thread-safe and safe to inline into OpenMP regions.
//
// Requires round-to-nearest mode (the process default, never changed by
// this library) and a correctly rounded std::fma.

namespace ivroot::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kSmallestNormal = std::numeric_limits<double>::min();

inline double next_up(double v) { return std::nextafter(v, kInf); }
inline double next_down(double v) { return std::nextafter(v, -kInf); }

inline double step_up(double v, int ulps) {
    for (int i = 0; i < ulps; ++i) v = next_up(v);
    return v;
}
inline double step_down(double v, int ulps) {
    for (int i = 0; i < ulps; ++i) v = next_down(v);
    return v;
}

// Knuth two-sum error term: a + b == s + err exactly, for finite s.
inline double two_sum_err(double a, double b, double s) {
    double bv = s - a;
    double av = s - bv;
    return (a - av) + (b - bv);
}

inline double add_down(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s;
    double e = two_sum_err(a, b, s);
    return e < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s;
    double e = two_sum_err(a, b, s);
    return e > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

// A zero fma residual proves the product exact only when the product is
// outside the subnormal range (or an operand is zero); below that the
// residual itself may have been flushed.
inline bool product_residual_trusted(double a, double b, double p) {
    if (a == 0.0 || b == 0.0) return true;
    return std::fabs(p) >= kSmallestNormal;
}

inline double mul_down(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) return p;
    double r = std::fma(a, b, -p); // a*b == p + r
    if (r > 0.0) return p;
    if (r < 0.0) return next_down(p);
    return product_residual_trusted(a, b, p) ? p : next_down(p);
}

inline double mul_up(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) return p;
    double r = std::fma(a, b, -p);
    if (r < 0.0) return p;
    if (r > 0.0) return next_up(p);
    return product_residual_trusted(a, b, p) ? p : next_up(p);
}

// Quotient direction from r = q*b - a: exact quotient is q - r/b.
inline double div_down(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return q;
    double r = std::fma(q, b, -a);
    if (r == 0.0) {
        if (a == 0.0 || std::fabs(a) >= kSmallestNormal) return q;
        return next_down(q); // residual may have underflowed; widen
    }
    bool q_above_exact = (r > 0.0) == (b > 0.0);
    return q_above_exact ? next_down(q) : q;
}

inline double div_up(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return q;
    double r = std::fma(q, b, -a);
    if (r == 0.0) {
        if (a == 0.0 || std::fabs(a) >= kSmallestNormal) return q;
        return next_up(q);
    }
    bool q_below_exact = (r > 0.0) != (b > 0.0);
    return q_below_exact ? next_up(q) : q;
}

inline bool sqrt_exact(double x, double s) {
    double p = s * s;
    if (p != x) return false;
    double r = std::fma(s, s, -p);
    return r == 0.0 && (x == 0.0 || std::fabs(p) >= kSmallestNormal);
}

// IEEE sqrt is correctly rounded, so one ULP out is always enough.
inline double sqrt_down(double x) {
    double s = std::sqrt(x);
    return sqrt_exact(x, s) ? s : next_down(s);
}

inline double sqrt_up(double x) {
    double s = std::sqrt(x);
    return sqrt_exact(x, s) ? s : next_up(s);
}

// Slack applied around libm transcendentals (exp, ln, sin, cos, tan), whose
// worst-case documented error on glibc is below 2 ULP for binary64.
inline constexpr int kLibmSlackUlps = 2;

inline double libm_down(double v) { return step_down(v, kLibmSlackUlps); }
inline double libm_up(double v) { return step_up(v, kLibmSlackUlps); }

// Bracket of pi: the nearest binary64 lies below pi, its successor above.
// Halving and doubling are exact, so the same mantissa brackets pi/2 and 2*pi.
inline constexpr double kPiLo = 0x1.921fb54442d18p+1;
inline constexpr double kPiHi = 0x1.921fb54442d19p+1;
inline constexpr double kHalfPiLo = 0x1.921fb54442d18p+0;
inline constexpr double kHalfPiHi = 0x1.921fb54442d19p+0;
inline constexpr double kTwoPiLo = 0x1.921fb54442d18p+2;
inline constexpr double kTwoPiHi = 0x1.921fb54442d19p+2;

} // namespace ivroot::detail
