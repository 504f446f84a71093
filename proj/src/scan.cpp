#include "ivroot/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ivroot {

namespace {

double grid_point(const Interval& x, long long i, long long n) {
    if (i == 0) return x.lo();
    if (i == n) return x.hi();
    double t = x.lo() + (static_cast<double>(i) / static_cast<double>(n)) * (x.hi() - x.lo());
    return std::clamp(t, x.lo(), x.hi());
}

// Zero samples count toward min_abs but stay transparent to the flip scan,
// so a grid point landing exactly on a root does not hide the crossing.
ScanResult aggregate(const std::vector<double>& vals, const std::vector<double>& pts) {
    ScanResult out;
    out.min_abs = std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::quiet_NaN();
    double prev_t = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double v = vals[i];
        if (std::isnan(v)) continue;
        out.min_abs = std::min(out.min_abs, std::fabs(v));
        if (v == 0.0) continue;
        if (!std::isnan(prev) && ((prev < 0.0 && v > 0.0) || (prev > 0.0 && v < 0.0))) {
            ++out.sign_changes;
            if (!out.has_bracket) {
                out.has_bracket = true;
                out.bracket_lo = prev_t;
                out.bracket_hi = pts[i];
            }
        }
        prev = v;
        prev_t = pts[i];
    }
    return out;
}

ScanResult scan_impl(const Expr& f, const Interval& x, long long n, bool parallel) {
    if (n < 1) throw std::invalid_argument("scan needs at least one subdivision");
    std::vector<double> pts(static_cast<std::size_t>(n) + 1);
    std::vector<double> vals(static_cast<std::size_t>(n) + 1);

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i <= n; ++i) {
            pts[static_cast<std::size_t>(i)] = grid_point(x, i, n);
            vals[static_cast<std::size_t>(i)] = eval_scalar(f, pts[static_cast<std::size_t>(i)]);
        }
    } else {
        for (long long i = 0; i <= n; ++i) {
            pts[static_cast<std::size_t>(i)] = grid_point(x, i, n);
            vals[static_cast<std::size_t>(i)] = eval_scalar(f, pts[static_cast<std::size_t>(i)]);
        }
    }
    return aggregate(vals, pts);
}

} // namespace

ScanResult scan_function(const Expr& f, const Interval& x, long long n) {
    return scan_impl(f, x, n, true);
}

ScanResult scan_function_serial(const Expr& f, const Interval& x, long long n) {
    return scan_impl(f, x, n, false);
}

double refine_sign_change(const Expr& f, double a, double b) {
    double fa = eval_scalar(f, a);
    double fb = eval_scalar(f, b);
    if (!((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)))
        throw std::invalid_argument("refine_sign_change requires a sign-change bracket");
    for (;;) {
        double m = 0.5 * (a + b);
        if (!(a < m && m < b)) return m; // endpoints adjacent
        double fm = eval_scalar(f, m);
        if (fm == 0.0) return m;
        if (std::isnan(fm)) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
}

} // namespace ivroot
