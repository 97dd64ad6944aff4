#include "polyheap/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyheap {

namespace {

void check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

bool all_integral(const std::vector<mpq_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<mpq_class> coefficients)
    : TruncatedSeries(order) {
    const std::size_t n = std::min(coeffs_.size(), coefficients.size());
    for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coefficients[i]);
}

TruncatedSeries::TruncatedSeries(int order, std::initializer_list<long> coefficients)
    : TruncatedSeries(order) {
    std::size_t i = 0;
    for (long c : coefficients) {
        if (i >= coeffs_.size()) break;
        coeffs_[i++] = c;
    }
}

TruncatedSeries TruncatedSeries::constant(int order, const mpq_class& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

int TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return order() + 1;
}

bool TruncatedSeries::is_integral() const { return all_integral(coeffs_); }

std::vector<mpz_class> TruncatedSeries::integer_coefficients() const {
    std::vector<mpz_class> out;
    out.reserve(coeffs_.size());
    for (const mpq_class& q : coeffs_) {
        if (q.get_den() != 1) throw std::domain_error("series has a non-integer coefficient");
        out.push_back(q.get_num());
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    check_order(order);
    TruncatedSeries s(order);
    const std::size_t n = std::min(coeffs_.size(), s.coeffs_.size());
    std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries s(order());
    const int n = order();
    for (int i = 0; i <= n; ++i) {
        const int j = i + k;
        if (j < 0) {
            if (coeffs_[i] != 0) throw std::domain_error("shift would create negative powers");
            continue;
        }
        if (j <= n) s.coeffs_[j] = coeffs_[i];
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpq_class& c) {
    for (mpq_class& q : coeffs_) q *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s = *this;
    for (mpq_class& q : s.coeffs_) q = -q;
    return s;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, const mpq_class& c) { return a *= c; }
TruncatedSeries operator*(const mpq_class& c, TruncatedSeries a) { return a *= c; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    const int va = a.valuation();
    const int vb = b.valuation();
    if (va + vb > n) return out;

    if (a.is_integral() && b.is_integral()) {
        // Integer fast path: accumulate with fused multiply-add on the numerators.
        mpz_class acc;
        for (int k = va + vb; k <= n; ++k) {
            acc = 0;
            for (int i = va; i <= k - vb; ++i) {
                mpz_addmul(acc.get_mpz_t(), a[i].get_num_mpz_t(), b[k - i].get_num_mpz_t());
            }
            out[k] = mpq_class(acc);
        }
        return out;
    }
    for (int k = va + vb; k <= n; ++k) {
        mpq_class acc = 0;
        for (int i = va; i <= k - vb; ++i) acc += a[i] * b[k - i];
        out[k] = acc;
    }
    return out;
}

TruncatedSeries invert(const TruncatedSeries& s) {
    if (s[0] == 0) throw std::domain_error("invert: constant term is zero");
    const int n = s.order();
    TruncatedSeries y(n);
    const mpq_class c0_inv = 1 / s[0];
    y[0] = c0_inv;
    const bool integral = s.is_integral() && (s[0] == 1 || s[0] == -1);
    mpz_class acc;
    for (int k = 1; k <= n; ++k) {
        if (integral) {
            acc = 0;
            for (int i = 1; i <= k; ++i) {
                if (s[i] != 0) mpz_addmul(acc.get_mpz_t(), s[i].get_num_mpz_t(), y[k - i].get_num_mpz_t());
            }
            y[k] = -mpq_class(acc) * c0_inv;
        } else {
            mpq_class sum = 0;
            for (int i = 1; i <= k; ++i) sum += s[i] * y[k - i];
            y[k] = -sum * c0_inv;
        }
    }
    return y;
}

TruncatedSeries sqrt(const TruncatedSeries& s) {
    if (s[0] != 1) throw std::domain_error("sqrt: constant term must be 1");
    const int n = s.order();
    TruncatedSeries y = TruncatedSeries::constant(0, 1);
    // y is exact through order `known`; each step doubles the number of exact terms.
    int known = 0;
    const mpq_class half(1, 2);
    while (known < n) {
        const int target = std::min(2 * known + 1, n);
        TruncatedSeries yt = y.truncated(target);
        y = (yt + s.truncated(target) * invert(yt)) * half;
        known = target;
    }
    return y;
}

TruncatedSeries pow(const TruncatedSeries& s, int exponent) {
    if (exponent < 0) return pow(invert(s), -exponent);
    TruncatedSeries result = TruncatedSeries::constant(s.order(), 1);
    TruncatedSeries base = s;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

}  // namespace polyheap
