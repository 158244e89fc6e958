#pragma once

#include <functional>
#include <span>
#include <vector>

namespace weightlab {

struct PowerLawFit {
  double exponent = 0.0;
  double log_constant = 0.0;
};

// Least squares of log_y against log_x.
PowerLawFit fit_power_law(std::span<const double> log_x, std::span<const double> log_y);

// Fit log_term(n) ~ exponent * log n over n in [N, factor * N].
PowerLawFit fit_tail(const std::function<double(long)>& log_term, long N, long factor = 4);

// Same fit on a table indexed from n = 0.
PowerLawFit fit_tail(std::span<const double> log_terms, long N, long factor = 4);

// Slope of log2 of the dyadic block sums sum_{2^j <= n < 2^{j+1}} term_n, j in [j_lo, j_hi).
// A power law n^tau yields tau + 1.
double dyadic_block_slope(std::span<const double> log_terms, int j_lo, int j_hi);

// log(exp(x) + exp(y)) without overflow.
double log_add(double x, double y);

}  // namespace weightlab
