#include "ivroot/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "ivroot/rounding.hpp"

namespace ivroot {

namespace detail {
extern const char* const kReferenceWidthsCsv;
}

namespace {

double parse_decimal(const std::string& text) {
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v))
        throw std::runtime_error("bad decimal literal: " + text);
    return v;
}

SuiteEntry make_entry(int id, std::string expr_text, double x0_lo, double x0_hi, double root,
                      std::string enc_lo, std::string enc_hi) {
    SuiteEntry e;
    e.id = id;
    e.expr_text = std::move(expr_text);
    e.x0 = Interval(x0_lo, x0_hi);
    e.reference_root = root;
    e.enclosure_lo_text = std::move(enc_lo);
    e.enclosure_hi_text = std::move(enc_hi);
    e.reference_enclosure = Interval(parse_decimal(e.enclosure_lo_text),
                                     parse_decimal(e.enclosure_hi_text));
    return e;
}

std::vector<SuiteEntry> build_suite() {
    std::vector<SuiteEntry> suite;
    suite.push_back(make_entry(1, "x^3 + sin(x/sqrt(3)) - 1/4", 0.0, 0.8, 0.3568342187225045,
                               "0.35683421872250", "0.35683421872251"));
    suite.push_back(make_entry(2, "cos(x) + x - x^2 + x^5", -0.9, -0.2, -0.5333964635678204,
                               "-0.53339646356783", "-0.53339646356782"));
    suite.push_back(make_entry(3, "exp(x) - sin(x)^3", -3.5, -3.4, -3.4623979938206757,
                               "-3.46239799382068", "-3.46239799382067"));
    suite.push_back(make_entry(4, "(x - 1)*exp(-2*x) + x^3", 0.4, 0.6, 0.5391809932576055,
                               "0.53918099325760", "0.53918099325761"));
    suite.push_back(make_entry(5, "sin(x^2+1)^2 - sqrt(x+1)/3", 1.0, 1.2, 1.1684762578039694,
                               "1.16847625780396", "1.16847625780397"));

    for (const SuiteEntry& e : suite) {
        if (!contains(e.x0, e.reference_root))
            throw std::runtime_error("suite entry root outside x0");
        if (!contains(e.reference_enclosure, e.reference_root))
            throw std::runtime_error("suite entry root outside reference enclosure");
        ExprPtr f = parse(e.expr_text);
        ExprPtr fp = derive(*f);
        Interval d = eval_interval(*fp, e.x0);
        if (contains(d, 0.0))
            throw std::runtime_error("suite entry derivative extension contains zero on x0");
    }
    return suite;
}

} // namespace

const std::vector<SuiteEntry>& load_suite() {
    static const std::vector<SuiteEntry> suite = build_suite();
    return suite;
}

std::vector<MethodSpec> default_methods() {
    return {
        MethodSpec{MethodKind::Newton, 0.0, 1e-15, 100},
        MethodSpec{MethodKind::Ostrowski, 0.0, 1e-15, 100},
        MethodSpec{MethodKind::King, 2.0, 1e-15, 100},
        MethodSpec{MethodKind::Traub3, 0.0, 1e-15, 100},
        MethodSpec{MethodKind::KungTraub3, 0.0, 1e-15, 100},
    };
}

ReferenceWidths parse_reference_csv(std::string_view csv) {
    ReferenceWidths ref;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream fields(line);
        std::string fid_s, method_s, beta_s, k_s, width_s;
        if (!std::getline(fields, fid_s, ',') || !std::getline(fields, method_s, ',') ||
            !std::getline(fields, beta_s, ',') || !std::getline(fields, k_s, ',') ||
            !std::getline(fields, width_s))
            throw std::runtime_error("reference csv: malformed line " + std::to_string(line_no));
        auto method = method_from_name(method_s);
        if (!method)
            throw std::runtime_error("reference csv: unknown method on line " +
                                     std::to_string(line_no));
        int fid = std::stoi(fid_s);
        int k = std::stoi(k_s);
        double w = parse_decimal(width_s);
        if (w <= 0.0)
            throw std::runtime_error("reference csv: nonpositive width on line " +
                                     std::to_string(line_no));
        auto& col = ref.widths[{fid, *method}];
        if (static_cast<int>(col.size()) + 1 != k)
            throw std::runtime_error("reference csv: non-consecutive k on line " +
                                     std::to_string(line_no));
        if (!col.empty() && w > col.back())
            throw std::runtime_error("reference csv: widths increase on line " +
                                     std::to_string(line_no));
        col.push_back(w);
    }
    return ref;
}

const ReferenceWidths& paper_reference() {
    static const ReferenceWidths ref = [] {
        std::string_view csv = detail::kReferenceWidthsCsv;
        // The raw-string embedding keeps a leading newline.
        if (!csv.empty() && csv.front() == '\n') csv.remove_prefix(1);
        return parse_reference_csv(csv);
    }();
    return ref;
}

namespace {

BenchCell run_one(const SuiteEntry& entry, const MethodSpec& method) {
    BenchCell cell;
    cell.function_id = entry.id;
    cell.method = method.kind;
    cell.beta = method.kind == MethodKind::King ? method.beta : 0.0;
    try {
        SolveOutcome outcome = iterate(entry.expr_text, entry.x0, method);
        cell.certificate = outcome.certificate;
        cell.reason = outcome.reason;
        cell.enclosure = outcome.enclosure;
        for (std::size_t i = 1; i < outcome.trace.size(); ++i)
            cell.widths.push_back(outcome.trace[i].width_x);
        cell.iterations = static_cast<int>(cell.widths.size());
    } catch (const std::exception& e) {
        cell.certificate = Certificate::Inconclusive;
        cell.reason = std::string("error: ") + e.what();
    }
    return cell;
}

BenchReport run_suite_impl(const std::vector<MethodSpec>& methods, double tol, int max_iter,
                           bool parallel) {
    if (methods.empty()) throw std::invalid_argument("run_suite needs at least one method");
    const auto& suite = load_suite();

    std::vector<std::pair<SuiteEntry, MethodSpec>> jobs;
    for (const SuiteEntry& entry : suite) {
        for (MethodSpec m : methods) {
            m.tol = tol;
            m.max_iter = max_iter;
            jobs.emplace_back(entry, m);
        }
    }

    BenchReport report;
    report.tol = tol;
    report.max_iter = max_iter;
    report.cells.resize(jobs.size());

    long long count = static_cast<long long>(jobs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i)
            report.cells[static_cast<std::size_t>(i)] =
                run_one(jobs[static_cast<std::size_t>(i)].first,
                        jobs[static_cast<std::size_t>(i)].second);
    } else {
        for (long long i = 0; i < count; ++i)
            report.cells[static_cast<std::size_t>(i)] =
                run_one(jobs[static_cast<std::size_t>(i)].first,
                        jobs[static_cast<std::size_t>(i)].second);
    }

    // Deterministic ordering regardless of execution interleaving.
    std::stable_sort(report.cells.begin(), report.cells.end(),
                     [](const BenchCell& a, const BenchCell& b) {
                         if (a.function_id != b.function_id) return a.function_id < b.function_id;
                         return static_cast<int>(a.method) < static_cast<int>(b.method);
                     });
    return report;
}

double ulp_of(double v) {
    double m = std::fabs(v);
    return detail::next_up(m) - m;
}

std::string format_width(double w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", w);
    return buf;
}

} // namespace

BenchReport run_suite(const std::vector<MethodSpec>& methods, double tol, int max_iter) {
    return run_suite_impl(methods, tol, max_iter, true);
}

BenchReport run_suite_serial(const std::vector<MethodSpec>& methods, double tol, int max_iter) {
    return run_suite_impl(methods, tol, max_iter, false);
}

CompareSummary compare_reference(const BenchReport& report, const ReferenceWidths& ref) {
    CompareSummary summary;
    const auto& suite = load_suite();

    auto fail = [&](std::string msg) {
        summary.all_pass = false;
        summary.failures.push_back(std::move(msg));
    };

    for (const BenchCell& cell : report.cells) {
        auto it = ref.widths.find({cell.function_id, cell.method});
        if (it == ref.widths.end()) {
            fail("no reference column for f" + std::to_string(cell.function_id) + "/" +
                 std::string(method_name(cell.method)));
            continue;
        }
        const std::vector<double>& expected = it->second;

        std::string label =
            "f" + std::to_string(cell.function_id) + "/" + std::string(method_name(cell.method));

        int count_delta = cell.iterations - static_cast<int>(expected.size());
        if (count_delta < -1 || count_delta > 1)
            fail(label + ": iteration count " + std::to_string(cell.iterations) + " vs reference " +
                 std::to_string(expected.size()));

        double root = suite[static_cast<std::size_t>(cell.function_id - 1)].reference_root;
        double saturation = 10.0 * ulp_of(root);

        std::size_t shared = std::min(cell.widths.size(), expected.size());
        for (std::size_t k = 0; k < shared; ++k) {
            ++summary.cells_checked;
            double measured = cell.widths[k];
            double reference = expected[k];
            bool saturated = measured <= saturation && reference <= saturation;
            bool within_factor =
                measured > 0.0 && measured / reference <= 100.0 && reference / measured <= 100.0;
            if (!saturated && !within_factor)
                fail(label + " k=" + std::to_string(k + 1) + ": width " + format_width(measured) +
                     " vs reference " + format_width(reference));
        }
    }
    return summary;
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
    const auto& suite = load_suite();
    std::string out;

    if (format == ReportFormat::Csv) {
        out += "function_id,method,beta,k,width,certificate\n";
        for (const BenchCell& cell : report.cells) {
            for (std::size_t k = 0; k < cell.widths.size(); ++k) {
                char beta_buf[32] = "";
                if (cell.method == MethodKind::King)
                    std::snprintf(beta_buf, sizeof(beta_buf), "%g", cell.beta);
                out += std::to_string(cell.function_id);
                out += ',';
                out += method_name(cell.method);
                out += ',';
                out += beta_buf;
                out += ',';
                out += std::to_string(k + 1);
                out += ',';
                out += format_width(cell.widths[k]);
                out += ',';
                out += certificate_name(cell.certificate);
                out += '\n';
            }
        }
        return out;
    }

    // Markdown: one table per function, methods as columns.
    std::vector<std::pair<MethodKind, double>> columns;
    for (const BenchCell& cell : report.cells) {
        std::pair<MethodKind, double> col{cell.method, cell.beta};
        if (std::find(columns.begin(), columns.end(), col) == columns.end())
            columns.push_back(col);
    }

    for (const SuiteEntry& entry : suite) {
        std::vector<const BenchCell*> cells;
        std::size_t rows = 0;
        for (const auto& col : columns) {
            const BenchCell* found = nullptr;
            for (const BenchCell& cell : report.cells)
                if (cell.function_id == entry.id && cell.method == col.first) found = &cell;
            cells.push_back(found);
            if (found) rows = std::max(rows, found->widths.size());
        }
        if (std::all_of(cells.begin(), cells.end(), [](const BenchCell* c) { return !c; }))
            continue;

        out += "## f" + std::to_string(entry.id) + ": " + entry.expr_text + "\n\n";
        out += "| k |";
        for (const auto& col : columns) {
            out += " ";
            out += method_name(col.first);
            if (col.first == MethodKind::King) {
                char b[32];
                std::snprintf(b, sizeof(b), " (beta=%g)", col.second);
                out += b;
            }
            out += " |";
        }
        out += "\n|---|";
        for (std::size_t i = 0; i < columns.size(); ++i) out += "---|";
        out += "\n";
        for (std::size_t k = 0; k < rows; ++k) {
            out += "| " + std::to_string(k + 1) + " |";
            for (const BenchCell* cell : cells) {
                if (cell && k < cell->widths.size())
                    out += " " + format_width(cell->widths[k]) + " |";
                else
                    out += " |";
            }
            out += "\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace ivroot
