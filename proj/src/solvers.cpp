#include "ivroot/solvers.hpp"

#include <cmath>

#include "ivroot/rounding.hpp"

namespace ivroot {

std::string_view method_name(MethodKind k) {
    switch (k) {
    case MethodKind::Newton: return "newton";
    case MethodKind::King: return "king";
    case MethodKind::Ostrowski: return "ostrowski";
    case MethodKind::Traub3: return "traub3";
    case MethodKind::KungTraub3: return "kungtraub3";
    }
    return "?";
}

std::optional<MethodKind> method_from_name(std::string_view name) {
    if (name == "newton") return MethodKind::Newton;
    if (name == "king") return MethodKind::King;
    if (name == "ostrowski") return MethodKind::Ostrowski;
    if (name == "traub3") return MethodKind::Traub3;
    if (name == "kungtraub3") return MethodKind::KungTraub3;
    return std::nullopt;
}

std::string_view fallback_name(Fallback f) {
    switch (f) {
    case Fallback::None: return "none";
    case Fallback::KDegenerate: return "k_degenerate";
    case Fallback::TDegenerate: return "t_degenerate";
    }
    return "?";
}

std::string_view certificate_name(Certificate c) {
    switch (c) {
    case Certificate::UniqueRootEnclosed: return "unique";
    case Certificate::NoRoot: return "noroot";
    case Certificate::ToleranceReached: return "tolerance";
    case Certificate::Inconclusive: return "inconclusive";
    }
    return "?";
}

void validate(const MethodSpec& spec) {
    if (!(spec.tol > 0.0) || !std::isfinite(spec.tol))
        throw std::invalid_argument("tol must be positive and finite");
    if (spec.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (!std::isfinite(spec.beta)) throw std::invalid_argument("beta must be finite");
}

namespace {

// F'(X), rejected when it encloses zero.
Interval derivative_range(const Expr& fprime, const Interval& x) {
    Interval d = eval_interval(fprime, x);
    if (contains(d, 0.0))
        throw DerivativeContainsZero("0 in F'(X): " + to_string(d));
    return d;
}

Interval require_nonzero(const Interval& denom) {
    if (contains(denom, 0.0))
        throw DegenerateDenominator("correction denominator encloses zero: " + to_string(denom));
    return denom;
}

} // namespace

Interval newton_operator(const Expr& f, const Expr& fprime, const Interval& x) {
    Interval d = derivative_range(fprime, x);
    double m = midpoint(x);
    Interval fm = eval_point(f, m);
    return Interval::thin(m) - fm / d;
}

Interval king_operator(const Expr& f, const Expr& fprime, const Interval& x, const Interval& y,
                       double beta) {
    Interval d = derivative_range(fprime, x);
    double my = midpoint(y);
    Interval fmx = eval_point(f, midpoint(x));
    Interval fmy = eval_point(f, my);
    Interval b = Interval::thin(beta);
    Interval num = fmx + b * fmy;
    Interval den = require_nonzero(fmx + (b - Interval::thin(2.0)) * fmy);
    return Interval::thin(my) - (num / den) * (fmy / d);
}

Interval kung_k_operator(const Expr& f, const Expr& fprime, const Interval& x,
                         const Interval& y) {
    Interval d = derivative_range(fprime, x);
    double my = midpoint(y);
    Interval fmx = eval_point(f, midpoint(x));
    Interval fmy = eval_point(f, my);
    Interval den = require_nonzero(interval_pow(fmx - fmy, 2));
    return Interval::thin(my) - ((fmx * fmy) / den) * (fmx / d);
}

Interval kung_t_operator(const Expr& f, const Expr& fprime, const Interval& x, const Interval& y,
                         const Interval& z) {
    Interval d = derivative_range(fprime, x);
    double mz = midpoint(z);
    Interval fmx = eval_point(f, midpoint(x));
    Interval fmy = eval_point(f, midpoint(y));
    Interval fmz = eval_point(f, mz);
    Interval dxy = require_nonzero(fmx - fmy);
    Interval dxz = require_nonzero(fmx - fmz);
    Interval dyz = require_nonzero(fmy - fmz);
    Interval den = interval_pow(dxy, 2) * interval_pow(dxz, 2) * dyz;
    Interval num = fmx * fmy * fmz * (interval_pow(fmx, 2) + fmy * dyz);
    return Interval::thin(mz) - (num / require_nonzero(den)) * (fmx / d);
}

Traub3Stages traub3_step(const Expr& f, const Expr& fprime, const Interval& x) {
    Interval d = derivative_range(fprime, x);
    auto newton_with_fixed_d = [&](const Interval& v) {
        double m = midpoint(v);
        return Interval::thin(m) - eval_point(f, m) / d;
    };

    Traub3Stages out;
    Interval n = newton_with_fixed_d(x);
    out.unique_witness = is_subset(n, x);
    out.y = intersect(n, x);
    if (!out.y) return out;
    out.z = intersect(newton_with_fixed_d(*out.y), *out.y);
    if (!out.z) return out;
    out.x_next = intersect(newton_with_fixed_d(*out.z), *out.z);
    return out;
}

KungTraub3Stages kungtraub3_step(const Expr& f, const Expr& fprime, const Interval& x) {
    KungTraub3Stages out;
    Interval n = newton_operator(f, fprime, x);
    out.y = intersect(n, x);
    if (!out.y) return out;

    bool k_in_y = false;
    try {
        Interval k = kung_k_operator(f, fprime, x, *out.y);
        k_in_y = is_subset(k, *out.y);
        out.z = intersect(k, *out.y);
    } catch (const DegenerateDenominator&) {
        out.z = out.y;
        out.fallback = Fallback::KDegenerate;
    }
    if (!out.z) return out;

    bool t_in_z = false;
    try {
        Interval t = kung_t_operator(f, fprime, x, *out.y, *out.z);
        t_in_z = is_subset(t, *out.z);
        out.x_next = intersect(t, *out.z);
    } catch (const DegenerateDenominator&) {
        out.x_next = out.z;
        if (out.fallback == Fallback::None) out.fallback = Fallback::TDegenerate;
    }
    out.unique_witness = k_in_y && t_in_z && out.fallback == Fallback::None;
    return out;
}

namespace {

struct StageResult {
    std::optional<Interval> y;
    std::optional<Interval> z;
    std::optional<Interval> x_next;
    Fallback fallback = Fallback::None;
    bool unique_witness = false;
};

StageResult run_step(const Expr& f, const Expr& fprime, const Interval& x, MethodKind kind,
                     double beta) {
    StageResult r;
    switch (kind) {
    case MethodKind::Newton: {
        Interval n = newton_operator(f, fprime, x);
        r.unique_witness = is_subset(n, x);
        r.x_next = intersect(n, x);
        return r;
    }
    case MethodKind::Ostrowski:
        beta = 0.0;
        [[fallthrough]];
    case MethodKind::King: {
        Interval n = newton_operator(f, fprime, x);
        r.unique_witness = is_subset(n, x);
        r.y = intersect(n, x);
        if (!r.y) return r;
        try {
            // The paper's scheme intersects the King correction with X.
            r.x_next = intersect(king_operator(f, fprime, x, *r.y, beta), x);
        } catch (const DegenerateDenominator&) {
            r.x_next = r.y;
            r.fallback = Fallback::KDegenerate;
        }
        return r;
    }
    case MethodKind::Traub3: {
        Traub3Stages s = traub3_step(f, fprime, x);
        return {s.y, s.z, s.x_next, Fallback::None, s.unique_witness};
    }
    case MethodKind::KungTraub3: {
        KungTraub3Stages s = kungtraub3_step(f, fprime, x);
        return {s.y, s.z, s.x_next, s.fallback, s.unique_witness};
    }
    }
    throw SolverError("unknown method");
}

StepRecord make_record(int k, const Interval& x) {
    StepRecord rec;
    rec.k = k;
    rec.x = x;
    rec.width_x = width(x);
    return rec;
}

SolveOutcome finish(Certificate cert, std::optional<Interval> enclosure, Trace trace,
                    std::string reason = {}) {
    return SolveOutcome{cert, std::move(enclosure), std::move(trace), std::move(reason)};
}

} // namespace

Certificate certify(const Trace& trace) {
    for (const StepRecord& rec : trace)
        if (rec.unique_witness) return Certificate::UniqueRootEnclosed;
    return Certificate::ToleranceReached;
}

SolveOutcome iterate(const Expr& f, const Expr& fprime, const Interval& x0,
                     const MethodSpec& spec) {
    validate(spec);
    // Domain problems of f or f' on X0 are input errors, not solver
    // outcomes; they surface here before the loop starts.
    eval_interval(f, x0);
    eval_interval(fprime, x0);

    double beta = spec.kind == MethodKind::King ? spec.beta : 0.0;

    Trace trace;
    trace.push_back(make_record(0, x0));
    Interval x = x0;

    for (int k = 0;; ++k) {
        if (width(x) <= spec.tol) {
            Certificate cert = certify(trace);
            return finish(cert, x, std::move(trace));
        }
        if (k == spec.max_iter)
            return finish(Certificate::Inconclusive, x, std::move(trace), "max-iter");

        StageResult step;
        try {
            step = run_step(f, fprime, x, spec.kind, beta);
        } catch (const DerivativeContainsZero&) {
            return finish(Certificate::Inconclusive, x, std::move(trace),
                          "derivative-contains-zero");
        }

        StepRecord& rec = trace.back();
        rec.y = step.y;
        rec.z = step.z;
        if (step.y) rec.width_y = width(*step.y);
        if (step.z) rec.width_z = width(*step.z);
        rec.fallback = step.fallback;
        rec.unique_witness = step.unique_witness;

        if (!step.x_next) return finish(Certificate::NoRoot, std::nullopt, std::move(trace));

        bool fixed_point = *step.x_next == x;
        x = *step.x_next;
        trace.push_back(make_record(k + 1, x));
        if (fixed_point) {
            Certificate cert = certify(trace);
            return finish(cert, x, std::move(trace));
        }
    }
}

SolveOutcome iterate(std::string_view f_text, const Interval& x0, const MethodSpec& spec) {
    ExprPtr f = parse(f_text);
    ExprPtr fprime = derive(*f);
    return iterate(*f, *fprime, x0, spec);
}

std::vector<double> point_kung_traub(const Expr& f, const Expr& fprime, double x0, int n_steps) {
    std::vector<double> iterates;
    double x = x0;
    for (int step = 0; step < n_steps; ++step) {
        double fx = eval_scalar(f, x);
        if (!std::isfinite(fx) || fx == 0.0) break; // converged or left the domain
        double dfx = eval_scalar(fprime, x);
        if (!std::isfinite(dfx) || dfx == 0.0) break;

        double y = x - fx / dfx;
        double fy = eval_scalar(f, y);
        if (!std::isfinite(y) || !std::isfinite(fy)) break;
        if (fy == 0.0) { // root hit: the remaining corrections vanish exactly
            iterates.push_back(y);
            x = y;
            continue;
        }

        double dxy = fx - fy;
        if (dxy == 0.0) break;
        double z = y - (fx * fy) / (dxy * dxy) * (fx / dfx);
        if (!std::isfinite(z)) break;
        if (z == y) { // correction below one ULP: saturated at this stage
            iterates.push_back(z);
            x = z;
            continue;
        }
        double fz = eval_scalar(f, z);
        if (!std::isfinite(fz)) break;
        if (fz == 0.0) {
            iterates.push_back(z);
            x = z;
            continue;
        }

        double dxz = fx - fz;
        double dyz = fy - fz;
        double den = dxy * dxy * dxz * dxz * dyz;
        if (den == 0.0 || !std::isfinite(den)) break;
        double num = fx * fy * fz * (fx * fx + fy * dyz);
        double x_next = z - num / den * (fx / dfx);
        if (!std::isfinite(x_next)) break;

        iterates.push_back(x_next);
        x = x_next;
    }
    return iterates;
}

std::vector<double> empirical_orders(const std::vector<double>& widths) {
    auto admissible = [](double w) { return w > 0.0 && w < 1.0; };
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
        if (!admissible(widths[i]) || !admissible(widths[i + 1])) continue;
        orders.push_back(std::log(widths[i + 1]) / std::log(widths[i]));
    }
    return orders;
}

std::vector<double> admissible_widths(const Trace& trace) {
    if (trace.empty()) return {};
    double m = std::fabs(midpoint(trace.back().x));
    double saturation = 10.0 * (detail::next_up(m) - m);

    std::vector<double> ws;
    for (const StepRecord& rec : trace) ws.push_back(rec.width_x);
    while (!ws.empty() && ws.back() <= saturation) ws.pop_back();

    std::vector<double> out;
    for (double w : ws)
        if (w > saturation && w < 1.0) out.push_back(w);
    return out;
}

} // namespace ivroot
