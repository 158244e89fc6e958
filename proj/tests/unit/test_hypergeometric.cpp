#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "weightlab/asymptotics.hpp"
#include "weightlab/hypergeometric.hpp"

using namespace weightlab;

namespace {

double gauss_oracle(double a, double b, double c) {
  return std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
}

// Direct summation of the series for |z| well inside the disc.
Complex series_oracle(Complex a, Complex b, Complex c, Complex z, long terms = 4000) {
  Complex sum = 0.0, term = 1.0;
  for (long n = 0; n < terms; ++n) {
    sum += term;
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
  }
  return sum;
}

double trapezoid_theta(double nu, double t, int points) {
  double acc = 0.0;
  for (int i = 0; i < points; ++i) {
    double th = 2.0 * std::numbers::pi * i / points;
    acc += std::pow(1.0 + t * t - 2.0 * t * std::cos(th), nu);
  }
  return acc / points;
}

}  // namespace

TEST_CASE("value at the origin") {
  CHECK(std::abs(hyp2f1({0.3, -1.7, 2.2}, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(hyp2f1({{0.3, 1.0}, -1.7, 2.2}, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("series inside the disc") {
  const Complex zs[] = {0.3, {-0.4, 0.5}, 0.85, {0.0, -0.9}};
  for (Complex z : zs) {
    CHECK(std::abs(hyp2f1({0.3, -1.7, 2.2}, z) - series_oracle(0.3, -1.7, 2.2, z)) < 1e-10);
    CHECK(std::abs(hyp2f1({{0.2, 0.3}, {0.1, -0.2}, 1.1}, z) - series_oracle({0.2, 0.3}, {0.1, -0.2}, 1.1, z)) <
          1e-10);
  }
}

TEST_CASE("Gamma function") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, -0.5, -2.7}) {
    CHECK(std::abs(gamma_fn(x) - std::tgamma(x)) < 1e-12 * std::abs(std::tgamma(x)));
  }
  CHECK(std::abs(gamma_fn(Complex(0.5, 0.0)) - std::sqrt(std::numbers::pi)) < 1e-13);
  CHECK(std::abs(rgamma_fn(-3.0)) == 0.0);
  CHECK(std::abs(rgamma_fn(0.0)) == 0.0);
  // Gamma(1 + z) = z Gamma(z) off the real axis
  Complex z(0.7, 1.3);
  CHECK(std::abs(gamma_fn(z + 1.0) - z * gamma_fn(z)) < 1e-12 * std::abs(gamma_fn(z + 1.0)));
}

TEST_CASE("Gauss value at one") {
  const double params[][3] = {{0.3, -0.4, 1.2}, {-0.5, 0.25, 1.5}, {0.1, 0.2, 0.9}, {1.5, -2.5, 0.7}};
  for (const auto& p : params) {
    double oracle = gauss_oracle(p[0], p[1], p[2]);
    CHECK(std::abs(gauss_value_at_one({p[0], p[1], p[2]}) - oracle) < 1e-9);
    CHECK(std::abs(hyp2f1({p[0], p[1], p[2]}, 1.0) - oracle) < 1e-9);
  }
  CHECK_THROWS_AS(hyp2f1({1.0, 1.0, 1.0}, 1.0), Error);
  CHECK_THROWS_AS(hyp2f1({0.5, 0.5, 0.8}, Complex(0.0, 1.0)), Error);
  CHECK_THROWS_AS(hyp2f1({0.5, 0.3, -2.0}, 0.5), Error);
  CHECK_NOTHROW(hyp2f1({-1.0, 0.3, -2.0}, 0.5));
  CHECK_THROWS_AS(hyp2f1({0.5, 0.3, 1.0}, 1.2), Error);
}

TEST_CASE("polynomial cases") {
  // 2F1(-2, 0.5; 1.5; 0.3) = 1 - 0.2 + 0.018
  CHECK(std::abs(hyp2f1({-2.0, 0.5, 1.5}, 0.3) - 0.818) < 1e-14);
  for (long n : {1L, 2L, 3L, 6L, 10L}) {
    const double b = 0.35, c = 1.45;
    Complex direct = series_oracle(double(-n), b, c, 1.0, n + 1);
    CHECK(std::abs(chu_vandermonde(n, b, c) - direct) < 1e-12);
    CHECK(std::abs(hyp2f1({double(-n), b, c}, 1.0) - direct) < 1e-12);
    // polynomial on the unit circle needs no convergence condition
    CHECK(std::abs(hyp2f1({double(-n), 3.0, 0.5}, Complex(0.0, 1.0)) -
                   series_oracle(double(-n), 3.0, 0.5, Complex(0.0, 1.0), n + 1)) < 1e-9);
  }
}

TEST_CASE("derivative") {
  Hyp2F1Params p{0.3, -1.7, 2.2};
  Complex d0 = hyp2f1_derivative(p, 0.0);
  CHECK(std::abs(d0 - 0.3 * -1.7 / 2.2) < 1e-14);

  const double h = 1e-5;
  Complex fd = (hyp2f1(p, 0.3 + h) - hyp2f1(p, 0.3 - h)) / (2 * h);
  CHECK(std::abs(hyp2f1_derivative(p, 0.3) - fd) < 1e-6);

  Complex term_by_term = 0.0, term = 1.0;
  for (long n = 0; n < 4000; ++n) {
    term_by_term += double(n + 1) * term * (0.3 + double(n)) * (-1.7 + double(n)) / ((2.2 + double(n)) * double(n + 1));
    term *= (0.3 + double(n)) * (-1.7 + double(n)) / ((2.2 + double(n)) * double(n + 1)) * 0.5;
  }
  CHECK(std::abs(hyp2f1_derivative(p, 0.5) - term_by_term) < 1e-9);
}

TEST_CASE("Euler factorization") {
  const double a1 = -0.4, r = -0.15, a2 = -0.3;
  Hyp2F1Params zero{1.0 + a1, r - a2, 1.0 + a1};
  EulerFactorization e0 = euler_factorization(zero);
  CHECK(e0.degree == 0);
  CHECK(std::abs(e0.exponent - (a2 - r)) < 1e-14);
  CHECK(std::abs(e0.poly(0.7) - 1.0) < 1e-14);

  Hyp2F1Params two{1.0 + a1 + 2.0, r - a2, 1.0 + a1};
  EulerFactorization e2 = euler_factorization(two);
  CHECK(e2.degree == 2);
  CHECK(std::abs(e2.exponent - (a2 - r - 2.0)) < 1e-14);
  double quoted = (r - a2) * (r - a2 + 1.0) / ((1.0 + a1) * (2.0 + a1));
  CHECK(std::abs(e2.poly_value_at_1 - quoted) < 1e-12);
  CHECK(std::abs(e2.poly(1.0) - quoted) < 1e-12);

  for (double z : {0.1, 0.5, 0.9}) {
    Complex lhs = std::pow(1.0 - z, -e2.exponent) * hyp2f1(two, z);
    CHECK(std::abs(lhs - e2.poly(z)) < 1e-7);
  }
  // the parameters may come in either order
  EulerFactorization swapped = euler_factorization({r - a2, 1.0 + a1 + 2.0, 1.0 + a1});
  CHECK(swapped.degree == 2);
  CHECK_THROWS_AS(euler_factorization({0.3, 0.2, 1.1}), Error);
}

TEST_CASE("theta integral") {
  CHECK(theta_integral(-0.3, 0.0) == doctest::Approx(1.0));
  CHECK(std::abs(theta_integral(-0.3, 0.7) - theta_integral_quadrature(-0.3, 0.7)) < 1e-10);
  CHECK(std::abs(theta_integral(-0.3, 0.7) - trapezoid_theta(-0.3, 0.7, 10000)) < 1e-10);
  for (double nu : {-0.9, -0.5, -0.3, 0.2}) {
    for (double t : {0.1, 0.5, 0.9}) {
      CHECK(std::abs(theta_integral(nu, t) - theta_integral_quadrature(nu, t)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(theta_integral(-0.3, 1.0), Error);
}

TEST_CASE("theta integral blows up like (1 - t^2)^(1 + 2 nu)") {
  for (double nu : {-0.8, -0.7}) {
    std::vector<double> xs, ys;
    for (int j = 3; j <= 5; ++j) {
      double t = 1.0 - std::pow(10.0, -j);
      xs.push_back(std::log(1.0 - t * t));
      ys.push_back(std::log(theta_integral(nu, t)));
    }
    CHECK(std::abs(fit_power_law(xs, ys).exponent - (1.0 + 2.0 * nu)) < 0.05);
  }
}

TEST_CASE("continuity at z = 1") {
  Hyp2F1Params p{0.3, -0.4, 1.6};
  double limit = gauss_oracle(0.3, -0.4, 1.6);
  double prev = 1e300;
  for (int j = 2; j <= 6; ++j) {
    double err = std::abs(hyp2f1(p, 1.0 - std::pow(10.0, -j)) - limit);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("power blowup at z = 1") {
  const double params[][3] = {{0.8, 0.9, 1.2}, {1.1, 0.6, 1.5}};
  for (const auto& p : params) {
    std::vector<double> xs, ys;
    for (int j = 2; j <= 4; ++j) {
      double z = 1.0 - std::pow(10.0, -j);
      xs.push_back(std::log(1.0 - z));
      ys.push_back(std::log(std::abs(hyp2f1({p[0], p[1], p[2]}, z))));
    }
    CHECK(std::abs(fit_power_law(xs, ys).exponent - (p[2] - p[0] - p[1])) < 0.05);
  }
}

TEST_CASE("logarithmic blowup at z = 1") {
  Hyp2F1Params p{0.4, 0.6, 1.0};
  std::vector<double> f;
  for (int j = 1; j <= 5; ++j) f.push_back(hyp2f1(p, 1.0 - std::pow(10.0, -j)).real());
  double first = f[2] - f[1];
  for (int j = 2; j + 1 < int(f.size()); ++j) CHECK(std::abs((f[j + 1] - f[j]) / first - 1.0) < 0.1);
  // the increment per decade is the coefficient of -log(1 - z)
  double expect = std::log(10.0) * std::tgamma(1.0) / (std::tgamma(0.4) * std::tgamma(0.6));
  CHECK(std::abs(first / expect - 1.0) < 0.1);
}

TEST_CASE("boundary products of S = (1 - z)^r F") {
  // F = 2F1(r - a, r - a2; 1 + a1; z) with 1 + s - 2r = 2 sqrt(d), d in (0, 1/4)
  const double a1 = -0.2, a2 = -0.3, a = -0.4;
  const double s = a + a1 + a2;
  const double samples[] = {0.2, 0.3};
  for (double sq : samples) {
    double r = (1.0 + s) / 2.0 - sq;
    Hyp2F1Params p{r - a, r - a2, 1.0 + a1};
    std::vector<double> xs, y1, y2, y3;
    for (int j = 3; j <= 5; ++j) {
      double z = 1.0 - std::pow(10.0, -j);
      Complex F = hyp2f1(p, z), dF = hyp2f1_derivative(p, z);
      double w = 1.0 - z;
      Complex S = std::pow(w, r) * F;
      Complex dS = std::pow(w, r) * dF - r * std::pow(w, r - 1.0) * F;
      xs.push_back(std::log(w));
      y1.push_back(std::log(std::abs(std::pow(w, 2 * r) * F * std::conj(dF * z))));
      y2.push_back(std::log(std::abs(std::pow(w, 2 * (r - 1.0)) * std::norm(F) * z * w)));
      y3.push_back(std::log(std::abs(S * std::conj(dS * z))));
    }
    CHECK(std::abs(fit_power_law(xs, y1).exponent - s) < 0.05);
    CHECK(std::abs(fit_power_law(xs, y2).exponent - 2.0 * (r - 0.5)) < 0.05);
    CHECK(std::abs(fit_power_law(xs, y3).exponent - 2.0 * (r - 0.5)) < 0.05);
  }
}

TEST_CASE("indicial exponents") {
  const Complex s(-0.7, 0.0);
  auto [p, m] = indicial_exponents(s, 0.0);
  std::vector<double> roots = {p.real(), m.real()};
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == doctest::Approx(std::min(-1.0, -s.real() - 2.0)));
  CHECK(roots[1] == doctest::Approx(std::max(-1.0, -s.real() - 2.0)));

  Complex mu = 0.25 - std::pow((1.0 + s) / 2.0, 2);
  auto [bp, bm] = indicial_exponents(s, mu);
  CHECK(std::abs(bp - ((-s - 3.0) / 2.0 + 0.5)) < 1e-12);
  CHECK(std::abs(bm - ((-s - 3.0) / 2.0 - 0.5)) < 1e-12);

  const Complex ss[] = {{-0.95, 0.0}, {-1.0, 2.0}, {-2.5, 0.0}};
  const Complex mus[] = {{-0.3, 0.0}, {1.7, 0.0}, {-5.0, 0.0}};
  for (Complex sv : ss) {
    for (Complex muv : mus) {
      auto [x, y] = indicial_exponents(sv, muv);
      for (Complex al : {x, y}) CHECK(std::abs(al * al + (3.0 + sv) * al + sv + 2.0 - muv) < 1e-12);
      CHECK(x.real() >= y.real());
    }
  }
}
