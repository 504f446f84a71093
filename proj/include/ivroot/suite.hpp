#pragma once

#include <map>
#include <string>
#include <vector>

#include "ivroot/solvers.hpp"

namespace ivroot {

// One embedded benchmark function: expression, starting interval, and the
// published root / enclosure it must reproduce.
struct SuiteEntry {
    int id = 0;
    std::string expr_text;
    Interval x0;
    double reference_root = 0.0;
    Interval reference_enclosure;
    // 14-significant-digit decimal endpoints of the reference enclosure.
    std::string enclosure_lo_text;
    std::string enclosure_hi_text;
};

// The five embedded functions, validated on first use (expressions parse,
// the root lies in x0 and in the enclosure, and F'(x0) excludes zero).
// Throws on validation failure.
const std::vector<SuiteEntry>& load_suite();

// The five benchmark method columns: Newton, Ostrowski, King(beta=2),
// Traub3, KungTraub3.
std::vector<MethodSpec> default_methods();

// Expected widths per (function, method, iteration k >= 1).
struct ReferenceWidths {
    // key: (function id, method)
    std::map<std::pair<int, MethodKind>, std::vector<double>> widths;
};

// CSV with header `function_id,method,beta,k,width`; method names are
// newton|ostrowski|king|traub3|kungtraub3, beta empty except for king.
ReferenceWidths parse_reference_csv(std::string_view csv);

// Reference data embedded from data/reference_widths.csv.
const ReferenceWidths& paper_reference();

struct BenchCell {
    int function_id = 0;
    MethodKind method = MethodKind::Newton;
    double beta = 0.0; // meaningful for king only
    Certificate certificate = Certificate::Inconclusive;
    std::string reason;
    std::vector<double> widths; // w(X^(k)) for k = 1..iterations
    int iterations = 0;
    std::optional<Interval> enclosure;
};

struct BenchReport {
    std::vector<BenchCell> cells; // function-major, method-minor order
    double tol = 0.0;
    int max_iter = 0;
};

// Runs iterate() for every (suite entry, method) pair; tol and max_iter
// override the per-spec values for a uniform run.  Pairs execute in
// parallel under OpenMP and are re-sorted, so the report is deterministic;
// individual failures are recorded in their cell, never aborting the run.
BenchReport run_suite(const std::vector<MethodSpec>& methods, double tol, int max_iter);

// Serial twin kept as the reference for the parallel runner.
BenchReport run_suite_serial(const std::vector<MethodSpec>& methods, double tol, int max_iter);

struct CompareSummary {
    bool all_pass = true;
    int cells_checked = 0;
    std::vector<std::string> failures;
};

// A width cell passes when measured/reference lies within a factor of 100,
// or both widths are precision-saturated (<= 10 ulp of the reference
// root); iteration counts must agree within +/-1.
CompareSummary compare_reference(const BenchReport& report, const ReferenceWidths& ref);

enum class ReportFormat { Markdown, Csv };

// Markdown: one table per function (rows k, columns methods, widths with 3
// significant digits).  CSV long form:
// function_id,method,beta,k,width,certificate.
std::string emit_report(const BenchReport& report, ReportFormat format);

} // namespace ivroot
