#include "weightlab/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "weightlab/errors.hpp"

namespace weightlab {

PowerLawFit fit_power_law(std::span<const double> log_x, std::span<const double> log_y) {
  const std::size_t n = log_x.size();
  if (n < 2 || log_y.size() != n) throw Error(ErrorCode::OutOfRange, "power-law fit needs two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += log_x[i];
    my += log_y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (log_x[i] - mx) * (log_x[i] - mx);
    sxy += (log_x[i] - mx) * (log_y[i] - my);
  }
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.log_constant = my - fit.exponent * mx;
  return fit;
}

PowerLawFit fit_tail(const std::function<double(long)>& log_term, long N, long factor) {
  std::vector<double> xs, ys;
  for (long n = N; n <= factor * N; ++n) {
    xs.push_back(std::log(double(n)));
    ys.push_back(log_term(n));
  }
  return fit_power_law(xs, ys);
}

PowerLawFit fit_tail(std::span<const double> log_terms, long N, long factor) {
  if (static_cast<long>(log_terms.size()) <= factor * N) {
    throw Error(ErrorCode::OutOfRange, "term table shorter than the fit window");
  }
  return fit_tail([&](long n) { return log_terms[n]; }, N, factor);
}

double log_add(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  double m = std::max(x, y);
  return m + std::log(std::exp(x - m) + std::exp(y - m));
}

double dyadic_block_slope(std::span<const double> log_terms, int j_lo, int j_hi) {
  std::vector<double> js, logs;
  for (int j = j_lo; j < j_hi; ++j) {
    std::size_t lo = std::size_t(1) << j, hi = std::size_t(1) << (j + 1);
    if (hi > log_terms.size()) throw Error(ErrorCode::OutOfRange, "term table too short for the blocks");
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t n = lo; n < hi; ++n) acc = log_add(acc, log_terms[n]);
    js.push_back(double(j));
    logs.push_back(acc / std::log(2.0));
  }
  return fit_power_law(js, logs).exponent;
}

}  // namespace weightlab
