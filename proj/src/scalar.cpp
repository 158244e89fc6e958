#include "weightlab/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace weightlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedVector: return "MalformedVector";
    case ErrorCode::IndexOutOfSupport: return "IndexOutOfSupport";
    case ErrorCode::MalformedState: return "MalformedState";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::NotUnitarizable: return "NotUnitarizable";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::DivergentAtBoundary: return "DivergentAtBoundary";
    case ErrorCode::GammaPole: return "GammaPole";
    case ErrorCode::NotInConfiguration: return "NotInConfiguration";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Tolerance tolerance_from_env(Tolerance base) {
  const char* env = std::getenv("WEIGHTLAB_EPS");
  if (env == nullptr) return base;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) base.abs_eps = v;
  return base;
}

Scalar Scalar::ratio(long p, long q) {
  if (q == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return Scalar(Rational(p) / Rational(q));
}

Complex Scalar::value() const {
  if (auto r = exact()) return Complex(r->convert_to<double>(), 0.0);
  return std::get<Complex>(v_);
}

bool Scalar::is_zero() const {
  if (auto r = exact()) return *r == 0;
  return std::get<Complex>(v_) == Complex(0.0, 0.0);
}

Scalar Scalar::conj() const {
  if (is_exact()) return *this;
  return Scalar(std::conj(std::get<Complex>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) += *o.exact();
  } else {
    v_ = value() + o.value();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) -= *o.exact();
  } else {
    v_ = value() - o.value();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) *= *o.exact();
  } else {
    v_ = value() * o.value();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    if (*o.exact() == 0) throw Error(ErrorCode::DivisionByZero, "exact division by zero");
    std::get<Rational>(v_) /= *o.exact();
  } else {
    v_ = value() / o.value();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto r = exact()) return Scalar(Rational(-*r));
  return Scalar(-std::get<Complex>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return *a.exact() == *b.exact();
  return a.value() == b.value();
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (auto r = exact()) {
    os << *r;
    return os.str();
  }
  Complex z = std::get<Complex>(v_);
  os.precision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

bool approx_eq(const Complex& x, const Complex& y, const Tolerance& tol) {
  double d = std::abs(x - y);
  return d <= tol.abs_eps + tol.rel_eps * std::max(std::abs(x), std::abs(y));
}

bool approx_eq(const Scalar& x, const Scalar& y, const Tolerance& tol) {
  if (x.is_exact() && y.is_exact()) return *x.exact() == *y.exact();
  return approx_eq(x.value(), y.value(), tol);
}

std::optional<long> as_integer(const Scalar& x, const Tolerance& tol) {
  if (auto r = x.exact()) {
    if (denominator(*r) != 1) return std::nullopt;
    return numerator(*r).convert_to<long>();
  }
  Complex z = x.value();
  double n = std::round(z.real());
  if (std::abs(z.imag()) <= tol.abs_eps && std::abs(z.real() - n) <= tol.abs_eps) {
    return static_cast<long>(n);
  }
  return std::nullopt;
}

bool is_integer(const Scalar& x, const Tolerance& tol) { return as_integer(x, tol).has_value(); }

bool is_negative_integer(const Scalar& x, const Tolerance& tol) {
  auto n = as_integer(x, tol);
  return n && *n < 0;
}

bool is_nonneg_integer(const Scalar& x, const Tolerance& tol) {
  auto n = as_integer(x, tol);
  return n && *n >= 0;
}

bool near_integer_boundary(const Scalar& x, const Tolerance& tol) {
  if (x.is_exact()) return false;
  Complex z = x.value();
  double n = std::round(z.real());
  return as_integer(x, tol) && (z.real() != n || z.imag() != 0.0);
}

bool is_real(const Scalar& x, const Tolerance& tol) {
  if (x.is_exact()) return true;
  return std::abs(x.imag()) <= tol.abs_eps;
}

Scalar pochhammer(const Scalar& b, long n) {
  Scalar out(1);
  for (long j = 1; j <= n; ++j) out *= b + Scalar(j - 1);
  return out;
}

Complex pochhammer(Complex b, long n) {
  Complex out(1.0, 0.0);
  for (long j = 1; j <= n; ++j) out *= b + double(j - 1);
  return out;
}

double pochhammer(double b, long n) {
  double out = 1.0;
  for (long j = 1; j <= n; ++j) out *= b + double(j - 1);
  return out;
}

Scalar parse_scalar(const std::string& text) {
  static const std::regex rational(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex real(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*$)");
  static const std::regex imag_only(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij]\s*$)");
  static const std::regex cplx(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-])\s*((?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij]\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, rational)) {
    long p = std::stol(m[1].str());
    long q = m[2].matched ? std::stol(m[2].str()) : 1;
    if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Scalar::ratio(p, q);
  }
  if (std::regex_match(text, m, real)) return Scalar(std::stod(m[1].str()));
  auto coefficient = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return std::stod(s);
  };
  if (std::regex_match(text, m, imag_only)) return Scalar(Complex(0.0, coefficient(m[1].str())));
  if (std::regex_match(text, m, cplx)) {
    double re = std::stod(m[1].str());
    double im = coefficient(m[3].str());
    if (m[2].str() == "-") im = -im;
    return Scalar(Complex(re, im));
  }
  throw Error(ErrorCode::ParseError, "cannot parse scalar '" + text + "'");
}

}  // namespace weightlab
