#include "weightlab/hypergeometric.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace weightlab {

namespace {

constexpr long kMaxTerms = 1'000'000;
constexpr int kQuietTerms = 5;

std::optional<long> nonpositive_integer(Complex x, const Tolerance& tol) {
  auto n = as_integer(Scalar(x), tol);
  if (n && *n <= 0) return -*n;
  return std::nullopt;
}

Complex next_ratio(const Hyp2F1Params& p, long n) {
  double m = double(n);
  return (p.alpha + m) * (p.beta + m) / ((p.gamma + m) * (m + 1.0));
}

}  // namespace

Complex gamma_fn(Complex z) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = std::numbers::pi;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
  z -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex rgamma_fn(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) return 0.0;
  return 1.0 / gamma_fn(z);
}

SeriesValue hyp2f1_series(const Hyp2F1Params& p, Complex z, const Tolerance& tol) {
  if (std::abs(z) > 1.0 + tol.abs_eps) throw Error(ErrorCode::OutOfDomain, "|z| > 1");
  auto ma = nonpositive_integer(p.alpha, tol);
  auto mb = nonpositive_integer(p.beta, tol);
  std::optional<long> m;
  if (ma) m = ma;
  if (mb && (!m || *mb < *m)) m = mb;
  if (auto g = nonpositive_integer(p.gamma, tol); g && !(m && *m <= *g)) {
    throw Error(ErrorCode::GammaPole, "gamma is a non-positive integer");
  }
  if (m) {
    Complex term = 1.0, sum = 1.0;
    for (long n = 0; n < *m; ++n) {
      term *= next_ratio(p, n) * z;
      sum += term;
    }
    return {sum, *m + 1};
  }

  const Complex c = p.gamma - p.alpha - p.beta;
  const bool on_circle = std::abs(std::abs(z) - 1.0) <= tol.abs_eps;
  if (on_circle && c.real() <= 0.0) {
    throw Error(ErrorCode::DivergentAtBoundary, "Re(gamma - alpha - beta) <= 0 on |z| = 1");
  }

  if (on_circle && std::abs(z - 1.0) <= tol.abs_eps) {
    // partial sums approach the limit like N^-c (1 + O(1/N)); two Richardson steps
    constexpr long N = 1L << 16;
    Complex term = 1.0, sum = 1.0;
    std::array<Complex, 3> partial{};
    long n = 0;
    for (int stage = 0; stage < 3; ++stage) {
      long upto = N << stage;
      for (; n < upto; ++n) {
        term *= next_ratio(p, n);
        sum += term;
      }
      partial[stage] = sum;
    }
    Complex f1 = std::pow(2.0, c), f2 = std::pow(2.0, c + 1.0);
    Complex r1 = (f1 * partial[1] - partial[0]) / (f1 - 1.0);
    Complex r2 = (f1 * partial[2] - partial[1]) / (f1 - 1.0);
    return {(f2 * r2 - r1) / (f2 - 1.0), n + 1};
  }

  const double eps = tol.abs_eps;
  Complex term = 1.0, sum = 1.0;
  int quiet = 0;
  long n = 0;
  for (; n < kMaxTerms; ++n) {
    Complex ratio = next_ratio(p, n);
    term *= ratio * z;
    sum += term;
    double rho = std::max(std::abs(ratio) * std::abs(z), std::abs(z));
    double tail;
    if (on_circle) tail = std::abs(term) / std::abs(1.0 - z);
    else tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho) : INFINITY;
    if (std::abs(term) < eps * std::abs(sum) && tail < eps * std::abs(sum)) {
      if (++quiet >= kQuietTerms) break;
    } else {
      quiet = 0;
    }
  }
  return {sum, n + 1};
}

Complex hyp2f1_derivative(const Hyp2F1Params& p, Complex z, const Tolerance& tol) {
  Hyp2F1Params q{p.alpha + 1.0, p.beta + 1.0, p.gamma + 1.0};
  return p.alpha * p.beta / p.gamma * hyp2f1(q, z, tol);
}

Complex gauss_value_at_one(const Hyp2F1Params& p) {
  Complex c = p.gamma - p.alpha - p.beta;
  if (c.real() <= 0.0) throw Error(ErrorCode::DivergentAtBoundary, "Re(gamma - alpha - beta) <= 0");
  Complex rg = rgamma_fn(p.gamma);
  if (rg == 0.0) throw Error(ErrorCode::GammaPole, "gamma is a non-positive integer");
  return gamma_fn(c) / rg * rgamma_fn(p.gamma - p.alpha) * rgamma_fn(p.gamma - p.beta);
}

Complex chu_vandermonde(long n, Complex beta, Complex gamma) {
  return pochhammer(gamma - beta, n) / pochhammer(gamma, n);
}

Complex EulerFactorization::poly(Complex z) const {
  Complex out = 0.0;
  for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) out = out * z + *it;
  return out;
}

EulerFactorization euler_factorization(const Hyp2F1Params& p, const Tolerance& tol) {
  Hyp2F1Params q = p;
  auto n = as_integer(Scalar(q.alpha - q.gamma), tol);
  if (!n || *n < 0) {
    std::swap(q.alpha, q.beta);
    n = as_integer(Scalar(q.alpha - q.gamma), tol);
  }
  if (!n || *n < 0) throw Error(ErrorCode::NotInConfiguration, "neither alpha nor beta is gamma + n");
  EulerFactorization out;
  out.degree = *n;
  out.exponent = q.gamma - q.alpha - q.beta;
  // Euler: 2F1(a, b; g; z) = (1 - z)^(g - a - b) 2F1(g - a, g - b; g; z) with g - a = -n
  Complex gb = q.gamma - q.beta;
  Complex coef = 1.0;
  for (long k = 0; k <= *n; ++k) {
    out.poly_coeffs.push_back(coef);
    double kk = double(k);
    coef *= (kk - double(*n)) * (gb + kk) / ((q.gamma + kk) * (kk + 1.0));
  }
  out.poly_value_at_1 = chu_vandermonde(*n, gb, q.gamma);
  return out;
}

double theta_integral(double nu, double t, const Tolerance& tol) {
  if (t < 0.0 || t >= 1.0) throw Error(ErrorCode::OutOfDomain, "theta integral needs 0 <= t < 1");
  return hyp2f1({-nu, -nu, 1.0}, t * t, tol).real();
}

double theta_integral_quadrature(double nu, double t) {
  auto integrand = [&](double theta) {
    double m2 = 1.0 - 2.0 * t * std::cos(theta) + t * t;
    return std::pow(m2, nu);
  };
  // periodic trapezoid rule, refined by doubling
  long n = 64;
  double prev = 0.0;
  for (long i = 0; i < n; ++i) prev += integrand(2.0 * std::numbers::pi * i / n);
  prev /= n;
  while (n < (1L << 22)) {
    double add = 0.0;
    for (long i = 0; i < n; ++i) add += integrand(2.0 * std::numbers::pi * (i + 0.5) / n);
    double next = 0.5 * (prev + add / n);
    n *= 2;
    if (std::abs(next - prev) <= 1e-15 * std::abs(next)) return next;
    prev = next;
  }
  return prev;
}

std::pair<Complex, Complex> indicial_exponents(Complex s, Complex mu) {
  Complex half = (1.0 + s) / 2.0;
  Complex root = std::sqrt(mu + half * half);
  Complex mid = (-s - 3.0) / 2.0;
  return {mid + root, mid - root};
}

}  // namespace weightlab
