#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivroot/expr.hpp"
#include "ivroot/interval.hpp"

namespace ivroot {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 0 in F'(X): the schemes' shared precondition failed.
class DerivativeContainsZero : public SolverError {
public:
    using SolverError::SolverError;
};

// A point-value denominator of the K or T correction encloses zero
// (typically f(mX) == f(mY) at near-convergence); callers fall back.
class DegenerateDenominator : public SolverError {
public:
    using SolverError::SolverError;
};

enum class MethodKind { Newton, Ostrowski, King, Traub3, KungTraub3 };

std::string_view method_name(MethodKind k);
std::optional<MethodKind> method_from_name(std::string_view name);

struct MethodSpec {
    MethodKind kind = MethodKind::KungTraub3;
    double beta = 0.0; // King only; Ostrowski is King with beta = 0
    double tol = 1e-15;
    int max_iter = 100;
};

// Throws std::invalid_argument unless tol > 0, max_iter >= 1, beta finite.
void validate(const MethodSpec& spec);

enum class Fallback { None, KDegenerate, TDegenerate };

std::string_view fallback_name(Fallback f);

// Record k holds X^(k) plus the stage intervals computed from it; the final
// record carries only the terminal X.  Nesting Z <= Y <= X holds whenever
// the stages are present, and the X widths never increase over k.
struct StepRecord {
    int k = 0;
    Interval x;
    std::optional<Interval> y;
    std::optional<Interval> z;
    double width_x = 0.0;
    std::optional<double> width_y;
    std::optional<double> width_z;
    Fallback fallback = Fallback::None;
    // Inclusion witness at this step: N(X) in X for the one/two-step
    // schemes, K(X,Y) in Y and T(X,Y,Z) in Z (no fallback) for the
    // three-step Kung-Traub scheme.
    bool unique_witness = false;
};

using Trace = std::vector<StepRecord>;

enum class Certificate { UniqueRootEnclosed, NoRoot, ToleranceReached, Inconclusive };

std::string_view certificate_name(Certificate c);

struct SolveOutcome {
    Certificate certificate = Certificate::Inconclusive;
    std::optional<Interval> enclosure; // absent for NoRoot
    Trace trace;
    std::string reason; // machine-readable, set for Inconclusive
};

// N(X) = m(X) - f(m(X)) / F'(X), not yet intersected with X.
Interval newton_operator(const Expr& f, const Expr& fprime, const Interval& x);

// King correction: m(Y) - [(f(mX) + beta f(mY)) / (f(mX) + (beta-2) f(mY))]
//                  * f(mY) / F'(X).
Interval king_operator(const Expr& f, const Expr& fprime, const Interval& x, const Interval& y,
                       double beta);

// K(X,Y) = m(Y) - [f(mX) f(mY) / (f(mX) - f(mY))^2] * f(mX) / F'(X).
Interval kung_k_operator(const Expr& f, const Expr& fprime, const Interval& x, const Interval& y);

// T(X,Y,Z) = m(Z) - [f(mX) f(mY) f(mZ) (f(mX)^2 + f(mY)(f(mY) - f(mZ))))
//            / ((f(mX)-f(mY))^2 (f(mX)-f(mZ))^2 (f(mY)-f(mZ)))] * f(mX)/F'(X).
Interval kung_t_operator(const Expr& f, const Expr& fprime, const Interval& x, const Interval& y,
                         const Interval& z);

// Three chained Newton-type corrections, all dividing by F'(X); an absent
// intersection short-circuits the later stages.
struct Traub3Stages {
    std::optional<Interval> y;
    std::optional<Interval> z;
    std::optional<Interval> x_next;
    bool unique_witness = false;
};
Traub3Stages traub3_step(const Expr& f, const Expr& fprime, const Interval& x);

// Y = N(X) cap X; Z = K(X,Y) cap Y; X' = T(X,Y,Z) cap Z.  A degenerate K
// falls back to Z = Y, a degenerate T to X' = Z (both flagged); the
// fallbacks keep the rigorously enclosed root.
struct KungTraub3Stages {
    std::optional<Interval> y;
    std::optional<Interval> z;
    std::optional<Interval> x_next;
    Fallback fallback = Fallback::None;
    bool unique_witness = false;
};
KungTraub3Stages kungtraub3_step(const Expr& f, const Expr& fprime, const Interval& x);

// Full driver.  Stop conditions in priority order: empty intersection ->
// NoRoot; width <= tol -> certify; fixed point -> certify; max_iter ->
// Inconclusive("max-iter").  0 in F'(X) at any step ->
// Inconclusive("derivative-contains-zero").  Bad input (parse failures,
// domain violations of f or f' on X0) throws instead of returning an
// outcome.  Pure: concurrent solves never share state.
SolveOutcome iterate(std::string_view f_text, const Interval& x0, const MethodSpec& spec);
SolveOutcome iterate(const Expr& f, const Expr& fprime, const Interval& x0,
                     const MethodSpec& spec);

// UniqueRootEnclosed when some recorded step carries the inclusion witness,
// ToleranceReached otherwise.  Expects a trace without absent intersections.
Certificate certify(const Trace& trace);

// Plain floating-point three-step Kung-Traub iterates x_1..x_n (order 8);
// the list is truncated when a denominator vanishes or an iterate leaves
// the finite range.  Non-rigorous; serves as an oracle.
std::vector<double> point_kung_traub(const Expr& f, const Expr& fprime, double x0, int n_steps);

// rho_k = ln w_{k+1} / ln w_k over consecutive admissible (positive, < 1)
// widths; pairs touching an inadmissible width are skipped.
std::vector<double> empirical_orders(const std::vector<double>& widths);

// w(X^(k)) for k = 0.. with the machine-precision-saturated tail removed:
// drops trailing widths <= 10 ulp of the final enclosure midpoint, plus any
// width outside (0, 1).
std::vector<double> admissible_widths(const Trace& trace);

} // namespace ivroot
