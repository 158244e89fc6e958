#pragma once

#include <utility>
#include <vector>

#include "weightlab/scalar.hpp"

namespace weightlab {

struct Hyp2F1Params {
  Complex alpha, beta, gamma;
};

struct SeriesValue {
  Complex value;
  long terms = 0;
};

// Gauss series for |z| <= 1. At z = 1 the partial sums are Richardson-extrapolated.
SeriesValue hyp2f1_series(const Hyp2F1Params& p, Complex z, const Tolerance& tol = {});
inline Complex hyp2f1(const Hyp2F1Params& p, Complex z, const Tolerance& tol = {}) {
  return hyp2f1_series(p, z, tol).value;
}
Complex hyp2f1_derivative(const Hyp2F1Params& p, Complex z, const Tolerance& tol = {});

Complex gamma_fn(Complex z);
// 1 / Gamma(z), zero at the poles.
Complex rgamma_fn(Complex z);

// Gamma(g) Gamma(g - a - b) / (Gamma(g - a) Gamma(g - b)), needs Re(g - a - b) > 0.
Complex gauss_value_at_one(const Hyp2F1Params& p);

// (g - b)_n / (g)_n
Complex chu_vandermonde(long n, Complex beta, Complex gamma);

// 2F1(g + n, b; g; z) = (1 - z)^exponent P_n(z)
struct EulerFactorization {
  Complex exponent;
  long degree = 0;
  Complex poly_value_at_1;
  std::vector<Complex> poly_coeffs;

  Complex poly(Complex z) const;
};

EulerFactorization euler_factorization(const Hyp2F1Params& p, const Tolerance& tol = {});

// Normalised integral of |1 - t e^{i theta}|^{2 nu} over the circle, 0 <= t < 1.
double theta_integral(double nu, double t, const Tolerance& tol = {});
double theta_integral_quadrature(double nu, double t);

// Roots of alpha^2 + (3 + s) alpha + s + 2 - mu = 0, the "+" root first.
std::pair<Complex, Complex> indicial_exponents(Complex s, Complex mu);

}  // namespace weightlab
