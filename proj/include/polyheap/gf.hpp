#pragma once

// Generating functions of half-animals, directed animals and multi-directed
// animals on N, as exact truncated series. Every named series has integer
// coefficients; the constructors assert it.
//
//   S = t(1 + 2S)(1 + S)                     half-animals (little Schroeder numbers)
//   R = S + t(1 + S)
//   Q = (2 - 2t)S - t
//   D(t,u) = S + u S^2 / (1 - uR)           directed animals, u marking left half-width
//   D_j = S^2 R^(j-1) for j >= 1, D_0 = S    slices of D(t,u) by left half-width
//   B = sum_k S(1+S)^k QR^k / (1 - QR^k)
//   M = D(t,1) / (1 - B)                     multi-directed animals
//
// The total left half-width series is dD/du at u = 1. Differentiating
// uS^2/(1 - uR) in u gives S^2/(1 - uR)^2, so at u = 1 it is S^2/(1 - R)^2.

#include <string>
#include <string_view>
#include <vector>

#include "polyheap/series.hpp"

namespace polyheap {

/// Fixed-point iteration of S = t(1+2S)(1+S), N+1 passes.
TruncatedSeries series_S(int order);
/// (1 - 3t - sqrt(1 - 6t + t^2)) / (4t).
TruncatedSeries series_S_closed_form(int order);
TruncatedSeries series_R(int order);
TruncatedSeries series_Q(int order);
/// (1/4)((1 + t)/sqrt(1 - 6t + t^2) - 1).
TruncatedSeries series_D1(int order);
/// S + S^2/(1 - R), i.e. D(t,u) at u = 1 from the functional form.
TruncatedSeries series_D1_from_S(int order);
TruncatedSeries series_Dj(int order, int j);
/// Sum over j > k of D_j, computed as D Q R^k.
TruncatedSeries series_D_greater(int order, int k);
/// Sum over j > k of S^2 R^(j-1), computed as S^2 R^k / (1 - R).
TruncatedSeries series_D_greater_geometric(int order, int k);
TruncatedSeries series_lw_total(int order);
/// S(1+S)^k
TruncatedSeries series_Ak(int order, int k);
/// S(1+S)^k QR^k / (1 - QR^k)
TruncatedSeries series_B_term(int order, int k);
/// Terms k = 0..order-2; later terms start at t^(k+2).
TruncatedSeries series_B(int order);
TruncatedSeries series_M(int order);

/// Looks a series up by CLI name: S R Q D M B LW Dj.
TruncatedSeries named_series(std::string_view which, int order, int j = 1);

/// Throws std::logic_error if some coefficient is not an integer.
void assert_integral(const TruncatedSeries& s, std::string_view name);

struct LemmaHDRow {
    int k = 0;
    bool pass = false;
    int first_failure = -1;  // coefficient index, -1 when pass
    std::vector<mpz_class> brute_force;  // H_k * D Q R^k with H_k counted
    std::vector<mpz_class> closed_form;  // S(1+S)^k QR^k / (1 - QR^k)
};

struct LemmaHDReport {
    int order = 0;
    std::vector<LemmaHDRow> rows;
    bool pass() const;
};

/// For k = 0..kmax, counts strip heaps H_k exhaustively and compares
/// H_k * D Q R^k with the closed form coefficient-wise through `order`.
LemmaHDReport check_lemma_HD(int order, int kmax);

}  // namespace polyheap
