#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "weightlab/errors.hpp"

namespace weightlab {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

struct Tolerance {
  double abs_eps = 1e-10;
  double rel_eps = 1e-10;
};

// Reads WEIGHTLAB_EPS; when set and parseable it replaces abs_eps.
Tolerance tolerance_from_env(Tolerance base = {});

// A complex number that stays exact while every operand is rational.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int v) : v_(Rational(v)) {}
  Scalar(long v) : v_(Rational(v)) {}
  Scalar(long long v) : v_(Rational(v)) {}
  Scalar(double v) : v_(Complex(v, 0.0)) {}
  Scalar(Complex v) : v_(v) {}
  Scalar(Rational v) : v_(std::move(v)) {}

  static Scalar ratio(long p, long q);

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational* exact() const { return std::get_if<Rational>(&v_); }
  Complex value() const;
  double real() const { return value().real(); }
  double imag() const { return value().imag(); }
  double abs() const { return std::abs(value()); }

  bool is_zero() const;
  Scalar conj() const;
  Scalar inexact() const { return Scalar(value()); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Structural equality: exact values compare exactly, anything else compares
  // the double representation bit for bit.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, Complex> v_;
};

bool approx_eq(const Complex& x, const Complex& y, const Tolerance& tol = {});
bool approx_eq(const Scalar& x, const Scalar& y, const Tolerance& tol = {});

// Integer detection; exact scalars are tested exactly, floats within abs_eps.
std::optional<long> as_integer(const Scalar& x, const Tolerance& tol = {});
bool is_integer(const Scalar& x, const Tolerance& tol = {});
bool is_negative_integer(const Scalar& x, const Tolerance& tol = {});
bool is_nonneg_integer(const Scalar& x, const Tolerance& tol = {});
// True when a float scalar is within tolerance of an integer without being one.
bool near_integer_boundary(const Scalar& x, const Tolerance& tol = {});

bool is_real(const Scalar& x, const Tolerance& tol = {});

Scalar pochhammer(const Scalar& b, long n);
Complex pochhammer(Complex b, long n);
double pochhammer(double b, long n);

Scalar parse_scalar(const std::string& text);

}  // namespace weightlab
