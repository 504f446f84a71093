#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ivroot/scan.hpp"
#include "oracles.hpp"

using namespace ivroot;

TEST_CASE("sign change counting") {
    ScanResult r = scan_function(*parse("x"), Interval(-1, 1), 100000);
    CHECK(r.sign_changes == 1);
    CHECK(r.min_abs == 0.0); // the grid hits the root exactly
    REQUIRE(r.has_bracket);
    CHECK(r.bracket_lo < 0.0);
    CHECK(r.bracket_hi > 0.0);

    ScanResult none = scan_function(*parse("x^2 + 1"), Interval(-3, 3), 100000);
    CHECK(none.sign_changes == 0);
    CHECK(none.min_abs >= 1.0);
    CHECK(!none.has_bracket);

    // sin has five roots in [-7, 7].
    ScanResult s = scan_function(*parse("sin(x)"), Interval(-7, 7), 100000);
    CHECK(s.sign_changes == 5);
}

TEST_CASE("NaN samples are skipped") {
    // sqrt(x) is NaN for x < 0 in scalar evaluation.
    ScanResult r = scan_function(*parse("sqrt(x) - 1"), Interval(-1, 4), 10000);
    CHECK(r.sign_changes == 1);
}

TEST_CASE("parallel scan matches the serial reference") {
    const char* exprs[] = {
        "x^3 + sin(x/sqrt(3)) - 1/4",
        "cos(x) + x - x^2 + x^5",
        "exp(x) - sin(x)^3",
        "(x - 1)*exp(-2*x) + x^3",
        "sin(x^2+1)^2 - sqrt(x+1)/3",
    };
    const Interval doms[] = {
        Interval(0.0, 0.8), Interval(-0.9, -0.2), Interval(-3.5, -3.4),
        Interval(0.4, 0.6), Interval(1.0, 1.2),
    };
    for (int i = 0; i < 5; ++i) {
        ExprPtr f = parse(exprs[i]);
        ScanResult par = scan_function(*f, doms[i], 200000);
        ScanResult ser = scan_function_serial(*f, doms[i], 200000);
        CHECK(par.sign_changes == ser.sign_changes);
        CHECK(par.min_abs == ser.min_abs); // bit-identical
        CHECK(par.has_bracket == ser.has_bracket);
        CHECK(par.bracket_lo == ser.bracket_lo);
        CHECK(par.bracket_hi == ser.bracket_hi);
        CHECK(par.sign_changes == 1);
    }
}

TEST_CASE("bisection refinement") {
    double r = refine_sign_change(*parse("x^2 - 2"), 1.0, 2.0);
    CHECK(abs(oracle::Float50(r) - sqrt(oracle::Float50(2))) < oracle::Float50(1e-15));

    CHECK_THROWS_AS(refine_sign_change(*parse("x^2 + 1"), 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(scan_function(*parse("x"), Interval(0, 1), 0), std::invalid_argument);
}
