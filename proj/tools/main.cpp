// Command-line front end: solve / bench / parse with text, JSON, CSV, and
// Markdown output.  Exit codes for solve: 0 = enclosure produced (unique or
// tolerance), 1 = no root, 2 = inconclusive, 3 = usage/parse/domain error.
// bench exits 0 only when the run matches the embedded reference tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ivroot/expr.hpp"
#include "ivroot/solvers.hpp"
#include "ivroot/suite.hpp"

namespace {

using nlohmann::json;
using namespace ivroot;

constexpr int kExitEnclosed = 0;
constexpr int kExitNoRoot = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

Interval parse_interval_flag(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--interval expects LO,HI");
    auto parse_endpoint = [](const std::string& s) {
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || s.empty())
            throw std::invalid_argument("bad interval endpoint: '" + s + "'");
        return v;
    };
    double lo = parse_endpoint(text.substr(0, comma));
    double hi = parse_endpoint(text.substr(comma + 1));
    return Interval(lo, hi);
}

std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int certificate_exit_code(Certificate c) {
    switch (c) {
    case Certificate::UniqueRootEnclosed:
    case Certificate::ToleranceReached: return kExitEnclosed;
    case Certificate::NoRoot: return kExitNoRoot;
    case Certificate::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

json outcome_to_json(const SolveOutcome& out, const MethodSpec& spec, const Interval& x0) {
    json j;
    j["method"] = std::string(method_name(spec.kind));
    if (spec.kind == MethodKind::King)
        j["beta"] = spec.beta;
    else if (spec.kind == MethodKind::Ostrowski)
        j["beta"] = 0.0;
    else
        j["beta"] = nullptr;
    j["initial"] = {{"lo", x0.lo()}, {"hi", x0.hi()}};
    j["certificate"] = std::string(certificate_name(out.certificate));
    if (out.enclosure)
        j["enclosure"] = {{"lo", out.enclosure->lo()}, {"hi", out.enclosure->hi()}};
    else
        j["enclosure"] = nullptr;
    json steps = json::array();
    for (const StepRecord& rec : out.trace) {
        steps.push_back({{"k", rec.k},
                         {"x", {{"lo", rec.x.lo()}, {"hi", rec.x.hi()}}},
                         {"width", rec.width_x},
                         {"fallback", std::string(fallback_name(rec.fallback))}});
    }
    j["iterations"] = std::move(steps);
    if (out.reason.empty())
        j["reason"] = nullptr;
    else
        j["reason"] = out.reason;
    return j;
}

void print_outcome_text(const SolveOutcome& out, const MethodSpec& spec, const Interval& x0) {
    std::printf("method:      %s", std::string(method_name(spec.kind)).c_str());
    if (spec.kind == MethodKind::King) std::printf(" (beta=%g)", spec.beta);
    std::printf("\ninitial:     %s\n", to_string(x0).c_str());
    std::printf("certificate: %s\n", std::string(certificate_name(out.certificate)).c_str());
    if (out.certificate == Certificate::NoRoot)
        std::printf("no root of the function lies in the initial interval\n");
    if (out.enclosure) std::printf("enclosure:   %s\n", to_string(*out.enclosure).c_str());
    if (!out.reason.empty()) std::printf("reason:      %s\n", out.reason.c_str());
    std::printf("iterations:  %zu\n", out.trace.size() - 1);
    for (const StepRecord& rec : out.trace) {
        std::printf("  k=%-3d x=%s  width=%.3e", rec.k, to_string(rec.x).c_str(), rec.width_x);
        if (rec.fallback != Fallback::None)
            std::printf("  fallback=%s", std::string(fallback_name(rec.fallback)).c_str());
        std::printf("\n");
    }
}

void print_outcome_csv(const SolveOutcome& out) {
    std::printf("k,lo,hi,width,fallback\n");
    for (const StepRecord& rec : out.trace)
        std::printf("%d,%s,%s,%.17g,%s\n", rec.k, format_scalar(rec.x.lo()).c_str(),
                    format_scalar(rec.x.hi()).c_str(), rec.width_x,
                    std::string(fallback_name(rec.fallback)).c_str());
}

void print_outcome_md(const SolveOutcome& out) {
    std::printf("| k | x | width | fallback |\n|---|---|---|---|\n");
    for (const StepRecord& rec : out.trace)
        std::printf("| %d | %s | %.3e | %s |\n", rec.k, to_string(rec.x).c_str(), rec.width_x,
                    std::string(fallback_name(rec.fallback)).c_str());
}

int run_solve(const std::string& expr_text, const std::string& interval_text,
              const std::string& method_text, double beta, bool beta_given, double tol,
              int max_iter, const std::string& format) {
    auto kind = method_from_name(method_text);
    if (!kind) {
        std::cerr << "error: unknown method '" << method_text << "'\n";
        return kExitUsage;
    }
    if (beta_given && *kind != MethodKind::King) {
        std::cerr << "error: --beta is only accepted with --method king\n";
        return kExitUsage;
    }

    MethodSpec spec;
    spec.kind = *kind;
    spec.beta = *kind == MethodKind::King ? beta : 0.0;
    spec.tol = tol;
    spec.max_iter = max_iter;

    Interval x0 = parse_interval_flag(interval_text);
    SolveOutcome out = iterate(expr_text, x0, spec);

    if (format == "json")
        std::printf("%s\n", outcome_to_json(out, spec, x0).dump(2).c_str());
    else if (format == "csv")
        print_outcome_csv(out);
    else if (format == "md")
        print_outcome_md(out);
    else
        print_outcome_text(out, spec, x0);
    return certificate_exit_code(out.certificate);
}

int run_bench(const std::string& suite_name, const std::string& methods_text, double beta,
              double tol, int max_iter, const std::string& format, const std::string& out_path) {
    if (suite_name != "paper") {
        std::cerr << "error: unknown suite '" << suite_name << "' (only 'paper' is available)\n";
        return kExitUsage;
    }
    if (format == "json" || format == "text") {
        // bench emits tables; default to markdown for 'text'
    }

    std::vector<MethodSpec> methods;
    if (methods_text.empty()) {
        methods = default_methods();
    } else {
        std::string rest = methods_text;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string name = rest.substr(0, comma);
            rest = comma == std::string::npos ? std::string() : rest.substr(comma + 1);
            auto kind = method_from_name(name);
            if (!kind) {
                std::cerr << "error: unknown method '" << name << "'\n";
                return kExitUsage;
            }
            MethodSpec spec;
            spec.kind = *kind;
            spec.beta = *kind == MethodKind::King ? beta : 0.0;
            methods.push_back(spec);
        }
    }

    BenchReport report = run_suite(methods, tol, max_iter);
    std::string rendered =
        emit_report(report, format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown);

    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f || !(f << rendered)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
    } else {
        std::fputs(rendered.c_str(), stdout);
    }

    CompareSummary summary = compare_reference(report, paper_reference());
    if (summary.all_pass) {
        std::fprintf(stderr, "reference check: %d width cells pass\n", summary.cells_checked);
        return 0;
    }
    for (const std::string& failure : summary.failures)
        std::fprintf(stderr, "reference mismatch: %s\n", failure.c_str());
    return 1;
}

int run_parse(const std::string& expr_text) {
    ExprPtr e = parse(expr_text);
    ExprPtr d = derive(*e);
    std::printf("expression: %s\nderivative: %s\n", render(*e).c_str(), render(*d).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Guaranteed enclosures of simple roots via interval iteration schemes"};
    app.require_subcommand(1);

    std::string expr_text, interval_text, out_path;
    std::string method_text = "kungtraub3";
    std::string format = "text";
    std::string suite_name = "paper";
    std::string methods_text;
    double beta = 2.0;
    double tol = 1e-15;
    int max_iter = 100;

    CLI::App* solve = app.add_subcommand("solve", "Enclose a root of --expr over --interval");
    solve->add_option("--expr", expr_text, "expression in x")->required();
    solve->add_option("--interval", interval_text, "initial interval LO,HI")->required();
    solve->add_option("--method", method_text,
                      "newton|ostrowski|king|traub3|kungtraub3 (default kungtraub3)");
    CLI::Option* beta_opt = solve->add_option("--beta", beta, "King parameter (king only)");
    solve->add_option("--tol", tol, "width tolerance (default 1e-15)");
    solve->add_option("--max-iter", max_iter, "iteration cap (default 100)");
    solve->add_option("--format", format, "text|json|csv|md")
        ->check(CLI::IsMember({"text", "json", "csv", "md"}));

    CLI::App* bench = app.add_subcommand("bench", "Run the embedded five-function suite");
    bench->add_option("--suite", suite_name, "suite name (paper)");
    bench->add_option("--methods", methods_text, "comma list of methods (default: all five)");
    bench->add_option("--beta", beta, "King parameter (default 2)");
    bench->add_option("--tol", tol, "width tolerance (default 1e-15)");
    bench->add_option("--max-iter", max_iter, "iteration cap (default 100)");
    bench->add_option("--format", format, "md|csv (text maps to md)")
        ->check(CLI::IsMember({"text", "json", "csv", "md"}));
    bench->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* parse_cmd = app.add_subcommand("parse", "Print the normalized AST and derivative");
    parse_cmd->add_option("--expr", expr_text, "expression in x")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed())
            return run_solve(expr_text, interval_text, method_text, beta, beta_opt->count() > 0,
                             tol, max_iter, format);
        if (bench->parsed())
            return run_bench(suite_name, methods_text, beta, tol, max_iter, format, out_path);
        return run_parse(expr_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
