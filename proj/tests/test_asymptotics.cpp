#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "polyheap/asymptotics.hpp"
#include "polyheap/gf.hpp"

using namespace polyheap;

namespace {

double partial_sum(const TruncatedSeries& s, double x) {
    double sum = 0.0;
    for (int n = s.order(); n >= 0; --n) sum = sum * x + s[n].get_d();
    return sum;
}

}  // namespace

TEST_CASE("radius of S") {
    CHECK(rho() == doctest::Approx(3.0 - std::sqrt(8.0)).epsilon(1e-15));
    CHECK(rho() * rho_bar() == doctest::Approx(1.0).epsilon(1e-15));
    // The discriminant of S vanishes at rho.
    CHECK(std::abs(1.0 - 6.0 * rho() + rho() * rho()) < 1e-14);
}

TEST_CASE("closed forms agree with 64-term partial sums") {
    const TruncatedSeries s = series_S(64);
    const TruncatedSeries r = series_R(64);
    const TruncatedSeries q = series_Q(64);
    const TruncatedSeries b = series_B(64);
    for (double x : {0.01, 0.05, 0.1}) {
        CAPTURE(x);
        CHECK(std::abs(eval_S(x) - partial_sum(s, x)) < 1e-12);
        CHECK(std::abs(eval_R(x) - partial_sum(r, x)) < 1e-12);
        CHECK(std::abs(eval_Q(x) - partial_sum(q, x)) < 1e-12);
        CHECK(std::abs(eval_B(x) - partial_sum(b, x)) < 1e-12);
    }
    CHECK(eval_S(0.0) == 0.0);
    CHECK(eval_B(0.0) == 0.0);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(eval_S(-0.01), std::domain_error);
    CHECK_THROWS_AS(eval_S(0.2), std::domain_error);
    CHECK_THROWS_AS(eval_B(0.17), std::domain_error);
    const AsymptoticConstants c = find_constants(0);
    CHECK_THROWS_AS(eval_B(c.rho_B), std::domain_error);
    CHECK_THROWS_AS(check_directed_asymptotics(99), std::invalid_argument);
    CHECK_THROWS_AS(check_multi_growth(49), std::invalid_argument);
}

TEST_CASE("B has a simple pole at rho_B") {
    const AsymptoticConstants c = find_constants(0);
    double previous = 0.0;
    for (double d : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const double b = eval_B(c.rho_B - d);
        CHECK(b > previous);
        previous = b;
    }
    CHECK(eval_B(c.rho_B - 1e-5) > 100.0);
    // (rho_B - x) B(x) tends to the residue.
    const double r4 = 1e-4 * eval_B(c.rho_B - 1e-4);
    const double r6 = 1e-6 * eval_B(c.rho_B - 1e-6);
    CHECK(r6 > 0.0);
    CHECK(std::abs(r4 - r6) < 0.02 * r6);
    BEvaluation near = eval_B_detailed(c.rho_B - 1e-4);
    BEvaluation far = eval_B_detailed(0.05);
    CHECK(near.terms > far.terms);
    CHECK(near.terms < 1000);
}

TEST_CASE("constants") {
    const AsymptoticConstants c = find_constants(300);
    CHECK(std::abs(rho_B_cubic(c.rho_B)) < 1e-12);
    CHECK(c.rho_B == doctest::Approx(0.163464621690502).epsilon(1e-11));
    CHECK(c.rho_M == doctest::Approx(0.154435472951276).epsilon(1e-11));
    CHECK(c.mu == doctest::Approx(6.47519628029693).epsilon(1e-11));
    CHECK(c.lambda_est == doctest::Approx(0.0350953509066295).epsilon(1e-9));
    CHECK(c.lambda_n == 300);
    CHECK(c.amp_d == doctest::Approx(std::pow(2.0, -1.75)));
    CHECK(std::abs(eval_B(c.rho_M) - 1.0) < 1e-10);
    for (const ReportEntry& e : check_constants(c)) {
        CAPTURE(e.constant);
        CHECK(e.pass);
    }
}

TEST_CASE("lambda estimates settle") {
    const AsymptoticConstants c = find_constants(0);
    auto lam = lambda_estimates(200, c.rho_M);
    REQUIRE(lam.size() == 201);
    CHECK(lam[1] == doctest::Approx(c.rho_M));
    CHECK(std::abs(lam[200] - lam[150]) < std::abs(lam[100] - lam[50]));
}

TEST_CASE("directed ratios approach their amplitudes") {
    auto rows = directed_ratios({50, 100, 200});
    REQUIRE(rows.size() == 3);
    CHECK(rows[2].rel_dev_d < rows[1].rel_dev_d);
    CHECK(rows[1].rel_dev_d < rows[0].rel_dev_d);
    CHECK(rows[2].rel_dev_lw < rows[0].rel_dev_lw);
    for (const ReportEntry& e : check_directed_asymptotics(200)) {
        CAPTURE(e.constant);
        CHECK(e.pass);
    }
}

TEST_CASE("connected heap statistics") {
    EnumerationStats s4 = connected_heap_stats(4);
    CHECK(s4.count == 110);
    CHECK(s4.mean_minimal >= 1.0);
    EnumerationStats s1 = connected_heap_stats(1);
    CHECK(s1.count == 1);
    CHECK(s1.mean_minimal == 1.0);
    CHECK(s1.mean_width == 1.0);
    for (const ReportEntry& e : check_multi_growth(300, 6)) {
        CAPTURE(e.constant);
        CHECK(e.pass);
    }
}
