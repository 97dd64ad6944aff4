#pragma once

// Exact power series truncated at a fixed order, with rational coefficients.

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace polyheap {

class TruncatedSeries {
public:
    /// Zero series keeping coefficients 0..order.
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<mpq_class> coefficients);
    TruncatedSeries(int order, std::initializer_list<long> coefficients);

    static TruncatedSeries constant(int order, const mpq_class& c);
    /// The series t.
    static TruncatedSeries variable(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    mpq_class& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    /// Index of the first non-zero coefficient, order()+1 for the zero series.
    int valuation() const;
    bool is_integral() const;
    /// Throws std::domain_error if some coefficient is not an integer.
    std::vector<mpz_class> integer_coefficients() const;

    TruncatedSeries truncated(int order) const;
    /// Multiplies by t^k (k may be negative when the low coefficients vanish).
    TruncatedSeries shifted(int k) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const mpq_class& c);
    TruncatedSeries operator-() const;

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<mpq_class> coeffs_;
};

/// Results of binary operations keep the smaller of the two orders.
TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const mpq_class& c);
TruncatedSeries operator*(const mpq_class& c, TruncatedSeries a);

/// 1/s; throws std::domain_error when s(0) = 0.
TruncatedSeries invert(const TruncatedSeries& s);
/// Square root with constant term 1, by Newton iteration; throws
/// std::domain_error when s(0) != 1.
TruncatedSeries sqrt(const TruncatedSeries& s);
TruncatedSeries pow(const TruncatedSeries& s, int exponent);

}  // namespace polyheap
