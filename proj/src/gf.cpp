#include "polyheap/gf.hpp"

#include <stdexcept>

#include "polyheap/heap_enum.hpp"

namespace polyheap {

namespace {

TruncatedSeries one(int order) { return TruncatedSeries::constant(order, 1); }
TruncatedSeries t(int order) { return TruncatedSeries::variable(order); }

TruncatedSeries checked(TruncatedSeries s, std::string_view name) {
    assert_integral(s, name);
    return s;
}

TruncatedSeries from_counts(const std::vector<std::uint64_t>& counts, int order) {
    TruncatedSeries s(order);
    for (int n = 0; n <= order && n < static_cast<int>(counts.size()); ++n) {
        s[n] = mpq_class(mpz_class(std::to_string(counts[n])));
    }
    return s;
}

}  // namespace

void assert_integral(const TruncatedSeries& s, std::string_view name) {
    if (!s.is_integral()) throw std::logic_error("series " + std::string(name) + " is not integral");
}

TruncatedSeries series_S(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    // Pass p of the iteration S <- t(1 + 3S + 2S^2) fixes coefficient p for good,
    // so each pass only recomputes that coefficient.
    std::vector<mpz_class> s(static_cast<std::size_t>(order) + 1, 0);
    for (int p = 1; p <= order; ++p) {
        const int m = p - 1;
        mpz_class square = 0;
        for (int i = 1; i < m; ++i) square += s[i] * s[m - i];
        mpz_class value = 3 * s[m] + 2 * square;
        if (m == 0) value += 1;
        s[p] = value;
    }
    std::vector<mpq_class> coeffs(s.begin(), s.end());
    return checked(TruncatedSeries(order, std::move(coeffs)), "S");
}

TruncatedSeries series_S_closed_form(int order) {
    const int n = order + 1;
    TruncatedSeries disc(n, {1, -6, 1});
    TruncatedSeries numerator = one(n) - 3 * t(n) - sqrt(disc);
    TruncatedSeries s = numerator.shifted(-1).truncated(order) * mpq_class(1, 4);
    return checked(s, "S (closed form)");
}

TruncatedSeries series_R(int order) {
    TruncatedSeries s = series_S(order);
    return checked(s + t(order) * (one(order) + s), "R");
}

TruncatedSeries series_Q(int order) {
    TruncatedSeries s = series_S(order);
    TruncatedSeries two_minus_2t(order, {2, -2});
    return checked(two_minus_2t * s - t(order), "Q");
}

TruncatedSeries series_D1(int order) {
    TruncatedSeries disc(order, {1, -6, 1});
    TruncatedSeries one_plus_t(order, {1, 1});
    TruncatedSeries d = (one_plus_t * invert(sqrt(disc)) - one(order)) * mpq_class(1, 4);
    return checked(d, "D");
}

TruncatedSeries series_D1_from_S(int order) {
    TruncatedSeries s = series_S(order);
    TruncatedSeries r = series_R(order);
    return checked(s + s * s * invert(one(order) - r), "D (functional form)");
}

TruncatedSeries series_Dj(int order, int j) {
    if (j < 0) throw std::invalid_argument("series_Dj: j must be non-negative");
    TruncatedSeries s = series_S(order);
    if (j == 0) return s;
    return checked(s * s * pow(series_R(order), j - 1), "D_j");
}

TruncatedSeries series_D_greater(int order, int k) {
    return checked(series_D1(order) * series_Q(order) * pow(series_R(order), k), "D_>k");
}

TruncatedSeries series_D_greater_geometric(int order, int k) {
    TruncatedSeries s = series_S(order);
    TruncatedSeries r = series_R(order);
    return checked(s * s * pow(r, k) * invert(one(order) - r), "D_>k (geometric)");
}

TruncatedSeries series_lw_total(int order) {
    TruncatedSeries s = series_S(order);
    TruncatedSeries gap = one(order) - series_R(order);
    return checked(s * s * invert(gap * gap), "LW");
}

TruncatedSeries series_Ak(int order, int k) {
    TruncatedSeries s = series_S(order);
    return checked(s * pow(one(order) + s, k), "A_k");
}

TruncatedSeries series_B_term(int order, int k) {
    TruncatedSeries g = series_Q(order) * pow(series_R(order), k);
    return checked(series_Ak(order, k) * g * invert(one(order) - g), "B term");
}

TruncatedSeries series_B(int order) {
    const TruncatedSeries s = series_S(order);
    const TruncatedSeries r = series_R(order);
    const TruncatedSeries q = series_Q(order);
    const TruncatedSeries one_plus_s = one(order) + s;

    TruncatedSeries b(order);
    TruncatedSeries ak = s;          // S(1+S)^k
    TruncatedSeries rk = one(order);  // R^k
    for (int k = 0; k + 2 <= order; ++k) {
        // Term k starts at t^(k+2): QR^k contributes t^(k+1) and S(1+S)^k at
        // least t. Work with QR^k / t^(k+1), so only N-k-1 orders are needed.
        const int m = order - k - 1;
        TruncatedSeries g = (q * rk).truncated(order);
        TruncatedSeries g_low = g.shifted(-(k + 1)).truncated(m);
        TruncatedSeries geometric = invert(one(m) - g.truncated(m));
        TruncatedSeries term = ak.truncated(m) * g_low * geometric;
        b += term.truncated(order).shifted(k + 1);
        ak = ak.truncated(m) * one_plus_s;
        rk = rk * r;
    }
    return checked(b, "B");
}

TruncatedSeries series_M(int order) {
    return checked(series_D1(order) * invert(one(order) - series_B(order)), "M");
}

TruncatedSeries named_series(std::string_view which, int order, int j) {
    if (which == "S") return series_S(order);
    if (which == "R") return series_R(order);
    if (which == "Q") return series_Q(order);
    if (which == "D") return series_D1(order);
    if (which == "M") return series_M(order);
    if (which == "B") return series_B(order);
    if (which == "LW") return series_lw_total(order);
    if (which == "Dj") return series_Dj(order, j);
    throw std::invalid_argument("unknown series '" + std::string(which) + "'");
}

bool LemmaHDReport::pass() const {
    for (const LemmaHDRow& row : rows) {
        if (!row.pass) return false;
    }
    return true;
}

LemmaHDReport check_lemma_HD(int order, int kmax) {
    LemmaHDReport report;
    report.order = order;
    for (int k = 0; k <= kmax; ++k) {
        TruncatedSeries hk = from_counts(count_strip_heaps(k, order), order);
        TruncatedSeries lhs = hk * series_D_greater(order, k);
        TruncatedSeries rhs = series_B_term(order, k);
        LemmaHDRow row;
        row.k = k;
        row.brute_force = lhs.integer_coefficients();
        row.closed_form = rhs.integer_coefficients();
        row.pass = true;
        for (int n = 0; n <= order; ++n) {
            if (row.brute_force[n] != row.closed_form[n]) {
                row.pass = false;
                row.first_failure = n;
                break;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace polyheap
