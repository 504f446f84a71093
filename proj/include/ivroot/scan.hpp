#pragma once

#include "ivroot/expr.hpp"
#include "ivroot/interval.hpp"

namespace ivroot {

// Dense-grid scan of f over an interval: n+1 equally spaced samples
// evaluated in plain binary64.  Used by the certificate-soundness oracles;
// non-rigorous by design.
struct ScanResult {
    long long sign_changes = 0; // strict sign flips between adjacent samples
    double min_abs = 0.0;       // min |f| over finite samples
    bool has_bracket = false;   // first sign-change bracket below, if any
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// OpenMP-parallel sample fill when compiled with OpenMP; the aggregation
// pass is serial, so results are identical across thread counts.
ScanResult scan_function(const Expr& f, const Interval& x, long long n);

// Single-threaded reference used to cross-check the parallel kernel.
ScanResult scan_function_serial(const Expr& f, const Interval& x, long long n);

// Bisection on a sign-change bracket down to adjacent doubles; returns the
// final midpoint.  Requires sign(f(a)) * sign(f(b)) < 0.
double refine_sign_change(const Expr& f, double a, double b);

} // namespace ivroot
