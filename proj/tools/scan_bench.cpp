// Benchmark: OpenMP kernels against their serial reference twins.  Verifies
// bit-identical results while timing, so a mismatch fails loudly.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ivroot/scan.hpp"
#include "ivroot/suite.hpp"

using namespace ivroot;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char** argv) {
    long long n = 2'000'000;
    if (argc > 1) n = std::atoll(argv[1]);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run serial code\n");
#endif

    std::printf("\ngrid scan, %lld samples per function\n", n);
    std::printf("%-4s %12s %12s %9s\n", "fn", "serial [s]", "parallel [s]", "speedup");

    const auto& suite = load_suite();
    bool all_match = true;
    for (const SuiteEntry& entry : suite) {
        ExprPtr f = parse(entry.expr_text);

        auto t0 = std::chrono::steady_clock::now();
        ScanResult serial = scan_function_serial(*f, entry.x0, n);
        auto t1 = std::chrono::steady_clock::now();
        ScanResult parallel = scan_function(*f, entry.x0, n);
        auto t2 = std::chrono::steady_clock::now();

        bool match = serial.sign_changes == parallel.sign_changes &&
                     serial.min_abs == parallel.min_abs &&
                     serial.bracket_lo == parallel.bracket_lo &&
                     serial.bracket_hi == parallel.bracket_hi;
        all_match = all_match && match;

        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("f%-3d %12.4f %12.4f %8.2fx%s\n", entry.id, ts, tp, ts / tp,
                    match ? "" : "  MISMATCH");
    }

    std::printf("\nbenchmark suite (25 solves)\n");
    auto t0 = std::chrono::steady_clock::now();
    BenchReport serial_report = run_suite_serial(default_methods(), 1e-15, 100);
    auto t1 = std::chrono::steady_clock::now();
    BenchReport parallel_report = run_suite(default_methods(), 1e-15, 100);
    auto t2 = std::chrono::steady_clock::now();

    bool report_match = emit_report(serial_report, ReportFormat::Csv) ==
                        emit_report(parallel_report, ReportFormat::Csv);
    all_match = all_match && report_match;
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-4s %12.4f %12.4f %8.2fx%s\n", "all", ts, tp, ts / tp,
                report_match ? "" : "  MISMATCH");

    if (!all_match) {
        std::fprintf(stderr, "parallel kernels diverged from the serial reference\n");
        return 1;
    }
    return 0;
}
