#include <doctest.h>

#include <stdexcept>

#include "polyheap/gf.hpp"
#include "polyheap/heap_enum.hpp"

using namespace polyheap;

namespace {

// Expansions computed independently with exact rational arithmetic.
const std::vector<const char*> kS{"0",       "1",        "3",        "11",        "45",        "197",
                                  "903",     "4279",     "20793",    "103049",    "518859",    "2646723",
                                  "13648869", "71039373", "372693519", "1968801519", "10463578353"};
const std::vector<const char*> kR{"0", "2", "4", "14", "56", "242", "1100", "5182"};
const std::vector<const char*> kQ{"0", "1", "4", "16", "68", "304", "1412", "6752"};
const std::vector<const char*> kD{"0", "1", "4", "19", "96", "501", "2668", "14407", "78592", "432073", "2390004"};
const std::vector<const char*> kLW{"0", "0", "1", "10", "75", "508", "3277", "20566", "126871"};
const std::vector<const char*> kD1{"0", "0", "1", "6", "31", "156", "785", "3978", "20335"};
const std::vector<const char*> kD2{"0", "0", "0", "2", "16", "100", "576", "3206", "17568"};
const std::vector<const char*> kD3{"0", "0", "0", "0", "4", "40", "292", "1888", "11496"};
const std::vector<const char*> kM{"0",     "1",      "4",      "20",     "110",    "636",
                                  "3790",  "23036",  "141946", "883360", "5538098"};

std::vector<mpz_class> big(const std::vector<const char*>& v) {
    std::vector<mpz_class> out;
    for (const char* s : v) out.emplace_back(s);
    return out;
}

int order_of(const std::vector<const char*>& v) { return static_cast<int>(v.size()) - 1; }

TruncatedSeries from_fixture(const std::vector<const char*>& v) {
    std::vector<mpq_class> q;
    for (const char* s : v) q.emplace_back(mpz_class(s));
    return TruncatedSeries(order_of(v), q);
}

}  // namespace

TEST_CASE("basic series against reference expansions") {
    CHECK(series_S(order_of(kS)).integer_coefficients() == big(kS));
    CHECK(series_R(order_of(kR)).integer_coefficients() == big(kR));
    CHECK(series_Q(order_of(kQ)).integer_coefficients() == big(kQ));
    CHECK(series_D1(order_of(kD)).integer_coefficients() == big(kD));
    CHECK(series_lw_total(order_of(kLW)).integer_coefficients() == big(kLW));
    CHECK(series_Dj(order_of(kD1), 1).integer_coefficients() == big(kD1));
    CHECK(series_Dj(order_of(kD2), 2).integer_coefficients() == big(kD2));
    CHECK(series_Dj(order_of(kD3), 3).integer_coefficients() == big(kD3));
    CHECK(series_M(order_of(kM)).integer_coefficients() == big(kM));
}

TEST_CASE("alternative constructions agree") {
    CHECK(series_S(60) == series_S_closed_form(60));
    CHECK(series_D1(60) == series_D1_from_S(60));
    CHECK(series_Dj(20, 0) == series_S(20));
    for (int k = 0; k <= 4; ++k) CHECK(series_D_greater(25, k) == series_D_greater_geometric(25, k));
}

TEST_CASE("D is the sum of its half-width slices") {
    const int order = 12;
    TruncatedSeries sum(order);
    for (int j = 0; j <= order; ++j) sum += series_Dj(order, j);
    CHECK(sum == series_D1(order));
}

TEST_CASE("B from the M fixture") {
    // M = D / (1 - B), so B = 1 - D / M on the reference expansions.
    TruncatedSeries d = from_fixture(kD);
    TruncatedSeries m = from_fixture(kM);
    TruncatedSeries b =
        TruncatedSeries::constant(9, 1) - d.shifted(-1).truncated(9) * invert(m.shifted(-1).truncated(9));
    CHECK(series_B(9) == b);
    CHECK(series_B(8).integer_coefficients() ==
          big({"0", "0", "1", "10", "75", "512", "3345", "21334", "134095"}));
}

TEST_CASE("B terms start at t^(k+2)") {
    for (int n : {2, 5, 12}) {
        TruncatedSeries term = series_B_term(n, n - 1);
        CHECK(term.valuation() == n + 1);
    }
    CHECK(series_B_term(10, 2).valuation() == 4);
}

TEST_CASE("A_k brute force matches S(1+S)^k") {
    for (int k = 0; k <= 2; ++k) {
        auto counts = count_ak_heaps(k, 10);
        auto coeffs = series_Ak(10, k).integer_coefficients();
        for (int n = 0; n <= 10; ++n) CHECK(mpz_class(std::to_string(counts[n])) == coeffs[n]);
    }
}

TEST_CASE("strip heaps times D_{>k}") {
    LemmaHDReport report = check_lemma_HD(10, 3);
    CHECK(report.pass());
    CHECK(report.rows.size() == 4);
}

TEST_CASE("named series") {
    CHECK(named_series("S", 5) == series_S(5));
    CHECK(named_series("Dj", 6, 2) == series_Dj(6, 2));
    CHECK(named_series("LW", 6) == series_lw_total(6));
    CHECK_THROWS_AS(named_series("X", 5), std::invalid_argument);
    TruncatedSeries half(2, {0, 1});
    half[2] = mpq_class(1, 2);
    CHECK_THROWS(assert_integral(half, "half"));
}
