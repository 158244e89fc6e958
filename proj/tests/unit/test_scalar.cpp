#include <cstdlib>
#include <random>

#include "doctest.h"
#include "weightlab/scalar.hpp"

using namespace weightlab;

TEST_CASE("pochhammer small values") {
  CHECK(pochhammer(Scalar(Rational(7, 3)), 0) == Scalar(1));
  CHECK(pochhammer(Scalar(1), 5) == Scalar(120));
  CHECK(pochhammer(Scalar(-3), 5) == Scalar(0));
  CHECK(pochhammer(Scalar(0.37), 0) == Scalar(1.0));
  CHECK(pochhammer(1.0, 5) == doctest::Approx(120.0));
  CHECK(pochhammer(-3.0, 5) == 0.0);
}

TEST_CASE("pochhammer step identity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar b(Rational(num(rng), den(rng)));
    for (long n = 0; n <= 50; ++n) {
      CHECK(pochhammer(b, n + 1) == pochhammer(b, n) * (b + Scalar(n)));
    }
  }
  Complex b(0.3, -1.2);
  for (long n = 0; n <= 50; ++n) {
    CHECK(approx_eq(pochhammer(b, n + 1), pochhammer(b, n) * (b + double(n))));
  }
}

TEST_CASE("pochhammer exact agrees with float") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 10);
  for (int trial = 0; trial < 30; ++trial) {
    Rational q(num(rng), den(rng));
    double d = q.convert_to<double>();
    for (long n = 0; n <= 30; ++n) {
      Scalar exact = pochhammer(Scalar(q), n);
      CHECK(exact.is_exact());
      CHECK(approx_eq(exact.value(), Complex(pochhammer(d, n), 0.0)));
    }
  }
}

TEST_CASE("approx_eq") {
  CHECK(approx_eq(Scalar(1.0), Scalar(1.0)));
  CHECK(approx_eq(Scalar(0), Scalar(1e-30), Tolerance{1e-12, 1e-12}));
  CHECK_FALSE(approx_eq(Scalar(1.0), Scalar(1.1)));
  CHECK(approx_eq(Scalar(1e12), Scalar(1e12 + 1.0)));
}

TEST_CASE("exact arithmetic stays exact") {
  Scalar x(Rational(1, 3)), y(Rational(-5, 7));
  CHECK((x + y).is_exact());
  CHECK((x * y).is_exact());
  CHECK((x / y) == Scalar(Rational(-7, 15)));
  CHECK((x - x).is_zero());
  CHECK_FALSE((x + Scalar(0.5)).is_exact());
  CHECK_THROWS_AS(x / Scalar(0), Error);
}

TEST_CASE("float round trip through exact mode") {
  Scalar exact(Rational(-7, 4));
  Scalar fl(-1.75);
  CHECK(approx_eq(exact, fl));
  CHECK(approx_eq((exact * exact).value(), (fl * fl).value()));
}

TEST_CASE("integer detection") {
  CHECK(is_negative_integer(Scalar(-3)));
  CHECK_FALSE(is_negative_integer(Scalar(0)));
  CHECK(is_nonneg_integer(Scalar(0)));
  CHECK(is_negative_integer(Scalar(-2.0 + 1e-13)));
  CHECK(near_integer_boundary(Scalar(-2.0 + 1e-13)));
  CHECK_FALSE(near_integer_boundary(Scalar(-2)));
  CHECK_FALSE(is_integer(Scalar(Rational(1, 2))));
  CHECK_FALSE(is_integer(Scalar(Complex(2.0, 0.5))));
  CHECK(as_integer(Scalar(Rational(12, 4))) == 3L);
}

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("-3") == Scalar(-3));
  CHECK(parse_scalar("-3").is_exact());
  CHECK(parse_scalar("5/4") == Scalar(Rational(5, 4)));
  CHECK_FALSE(parse_scalar("-0.25").is_exact());
  CHECK(parse_scalar("-0.25").real() == -0.25);
  CHECK(approx_eq(parse_scalar("-0.5+1i").value(), Complex(-0.5, 1.0)));
  CHECK(approx_eq(parse_scalar("i").value(), Complex(0.0, 1.0)));
  CHECK(approx_eq(parse_scalar("1e-3").value(), Complex(1e-3, 0.0)));
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
}

TEST_CASE("tolerance from environment") {
  setenv("WEIGHTLAB_EPS", "1e-6", 1);
  CHECK(tolerance_from_env().abs_eps == 1e-6);
  setenv("WEIGHTLAB_EPS", "junk", 1);
  CHECK(tolerance_from_env().abs_eps == 1e-10);
  unsetenv("WEIGHTLAB_EPS");
  CHECK(tolerance_from_env().abs_eps == 1e-10);
}
