#include "weightlab/unitarity.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace weightlab {

const char* series_name(Series s) {
  switch (s) {
    case Series::Principal: return "Principal";
    case Series::Complementary: return "Complementary";
    case Series::HighestWeight: return "HighestWeight";
    case Series::LowestWeight: return "LowestWeight";
    case Series::Trivial: return "Trivial";
    case Series::NotUnitarizable: return "NotUnitarizable";
  }
  return "?";
}

std::optional<ModuleSpec> SeriesLabel::canonical(const Tolerance& tol) const {
  switch (kind) {
    case Series::Principal:
      return ModuleSpec(Scalar(Complex(-1.0 - x, y)), Scalar(Complex(x, y)), tol);
    case Series::Complementary: return ModuleSpec(b1, b2, tol);
    case Series::HighestWeight: return ModuleSpec(-lambda, Scalar(0), tol);
    case Series::LowestWeight: return ModuleSpec(Scalar(0), -lambda, tol);
    case Series::Trivial: return ModuleSpec(Scalar(0), Scalar(0), tol);
    case Series::NotUnitarizable: return std::nullopt;
  }
  return std::nullopt;
}

std::string SeriesLabel::to_string() const {
  std::string out = series_name(kind);
  switch (kind) {
    case Series::Principal:
      out += "(x=" + Scalar(x).to_string() + ", y=" + Scalar(y).to_string() + ")";
      break;
    case Series::Complementary:
      out += "(" + b1.to_string() + ", " + b2.to_string() + ")";
      break;
    case Series::HighestWeight:
    case Series::LowestWeight:
      out += "(lambda=" + lambda.to_string() + ")";
      break;
    default: break;
  }
  if (boundary) out += " [boundary]";
  return out;
}

namespace {

long floor_of(const Scalar& x) {
  if (auto r = x.exact()) {
    using boost::multiprecision::cpp_int;
    cpp_int n = numerator(*r), d = denominator(*r);
    cpp_int q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q.convert_to<long>();
  }
  return static_cast<long>(std::floor(x.real()));
}

// Strict real comparison u < v that records near-ties in float mode.
struct Comparator {
  const Tolerance& tol;
  bool& boundary;

  bool less(const Scalar& u, const Scalar& v) const {
    if (u.is_exact() && v.is_exact()) return *u.exact() < *v.exact();
    double d = v.real() - u.real();
    if (std::abs(d) <= tol.abs_eps) boundary = true;
    return d > 0;
  }
};

SeriesLabel discrete(Series kind, const Scalar& lambda, bool boundary) {
  SeriesLabel out;
  out.kind = kind;
  out.lambda = lambda;
  out.boundary = boundary;
  return out;
}

}  // namespace

SeriesLabel classify(const ModuleSpec& spec) {
  const Tolerance& tol = spec.tol();
  const Scalar& a1 = spec.a1();
  const Scalar& a2 = spec.a2();
  bool boundary = near_integer_boundary(a1, tol) || near_integer_boundary(a2, tol);
  Comparator cmp{tol, boundary};
  SeriesLabel none;
  none.boundary = boundary;

  // weights a1 - a2 + 2k must be real
  if (!is_real(a1 - a2, tol)) return none;

  auto n1 = as_integer(a1, tol);
  auto n2 = as_integer(a2, tol);
  const Scalar sum = a1 + a2;

  switch (spec.module_case()) {
    case ModuleCase::I: {
      if (n1 && n2) {
        if (*n1 == 0 && *n2 == 0) return discrete(Series::Trivial, Scalar(0), boundary);
        return none;
      }
      if (!n1 && !n2) {
        if (is_real(a2, tol)) {
          Scalar m(floor_of(a2));
          // -m-2 < a1 < -m-1
          if (cmp.less(-m - Scalar(2), a1) && cmp.less(a1, -m - Scalar(1))) {
            SeriesLabel out;
            out.kind = Series::Complementary;
            out.b1 = a1 + m + Scalar(1);
            out.b2 = a2 - m - Scalar(1);
            if (!out.b1.is_exact()) out.b1 = Scalar(out.b1.real());
            if (!out.b2.is_exact()) out.b2 = Scalar(out.b2.real());
            out.boundary = boundary;
            return out;
          }
          return none;
        }
        // dense complex case: the norm ratio is 1 exactly when Re(a1 + a2) = -1
        if (std::abs(sum.real() + 1.0) <= tol.abs_eps) {
          if (std::abs(sum.real() + 1.0) != 0.0) boundary = true;
          SeriesLabel out;
          out.kind = Series::Principal;
          double x = a2.real();
          out.x = x - std::floor(x) - 1.0;
          out.y = std::abs(a2.imag());
          out.boundary = boundary;
          return out;
        }
        return none;
      }
      if (!is_real(a1, tol) || !is_real(a2, tol)) return none;
      // a1 non-integer with a2 >= 0 gives a highest weight module, the mirror a lowest weight one
      if (cmp.less(sum, Scalar(0))) {
        return discrete(n2 ? Series::HighestWeight : Series::LowestWeight, -sum, boundary);
      }
      return none;
    }
    case ModuleCase::II: {
      if (!is_real(a1, tol)) return none;
      if (!n1) {
        if (cmp.less(Scalar(0), sum + Scalar(2))) {
          return discrete(Series::LowestWeight, sum + Scalar(2), boundary);
        }
        return none;
      }
      if (-*n1 > *n2) return discrete(Series::LowestWeight, -sum, boundary);
      return discrete(Series::LowestWeight, sum + Scalar(2), boundary);
    }
    case ModuleCase::III: {
      if (!is_real(a2, tol)) return none;
      if (!n2) {
        if (cmp.less(Scalar(0), sum + Scalar(2))) {
          return discrete(Series::HighestWeight, sum + Scalar(2), boundary);
        }
        return none;
      }
      if (-*n1 > *n2) return discrete(Series::HighestWeight, -sum, boundary);
      return discrete(Series::HighestWeight, sum + Scalar(2), boundary);
    }
    case ModuleCase::IV:
      if (*n1 == -1 && *n2 == -1) return discrete(Series::Trivial, Scalar(0), boundary);
      return none;
  }
  return none;
}

namespace {

enum class LawKind { Constant, TwoSided, OneSided };

struct NormLaw {
  LawKind kind = LawKind::Constant;
  long anchor = 0;
  int direction = 1;  // one-sided: m = direction * (k - anchor) >= 0
  int sigma = 1;      // factor j * (j + c)^sigma
  double c = 0.0;
};

NormLaw norm_law(const ModuleSpec& spec) {
  SeriesLabel label = classify(spec);
  if (!label.unitarizable()) {
    throw Error(ErrorCode::NotUnitarizable, spec.to_string() + " is not unitarizable");
  }
  const Tolerance& tol = spec.tol();
  NormLaw law;
  if (label.kind == Series::Principal || label.kind == Series::Trivial) return law;
  if (label.kind == Series::Complementary) {
    law.kind = LawKind::TwoSided;
    return law;
  }
  auto n1 = as_integer(spec.a1(), tol);
  auto n2 = as_integer(spec.a2(), tol);
  const double sum = spec.a1().real() + spec.a2().real();
  law.kind = LawKind::OneSided;
  switch (spec.module_case()) {
    case ModuleCase::I:
      if (n2) {
        law = {LawKind::OneSided, *n2, -1, -1, -1.0 - sum};
      } else {
        law = {LawKind::OneSided, -*n1, 1, -1, -1.0 - sum};
      }
      break;
    case ModuleCase::II:
      if (n1 && -*n1 > *n2) {
        law = {LawKind::OneSided, -*n1, 1, 1, -1.0 - sum};
      } else {
        law = {LawKind::OneSided, *n2 + 1, 1, 1, 1.0 + sum};
      }
      break;
    case ModuleCase::III:
      if (n2 && -*n1 > *n2) {
        law = {LawKind::OneSided, *n2, -1, 1, -1.0 - sum};
      } else {
        law = {LawKind::OneSided, -*n1 - 1, -1, 1, 1.0 + sum};
      }
      break;
    case ModuleCase::IV: law.kind = LawKind::Constant; break;
  }
  return law;
}

double positive_log(double v) {
  if (!(v > 0.0)) throw Error(ErrorCode::NotUnitarizable, "non-positive norm factor");
  return std::log(v);
}

}  // namespace

long anchor_index(const ModuleSpec& spec) { return norm_law(spec).anchor; }

double log_norm_sq(const ModuleSpec& spec, long k) {
  if (!spec.contains(k)) throw Error(ErrorCode::IndexOutOfSupport, "index outside the index set");
  NormLaw law = norm_law(spec);
  double out = 0.0;
  switch (law.kind) {
    case LawKind::Constant: return 0.0;
    case LawKind::TwoSided: {
      const double a1 = spec.a1().real(), a2 = spec.a2().real();
      if (k > 0) {
        for (long j = 1; j <= k; ++j) out += positive_log((j + a1) / (j - 1 - a2));
      } else {
        for (long j = 1; j <= -k; ++j) out += positive_log((j + a2) / (j - 1 - a1));
      }
      return out;
    }
    case LawKind::OneSided: {
      long m = law.direction * (k - law.anchor);
      for (long j = 1; j <= m; ++j) {
        out += std::log(double(j)) + law.sigma * positive_log(j + law.c);
      }
      return out;
    }
  }
  return out;
}

double norm_sq(const ModuleSpec& spec, long k) { return std::exp(log_norm_sq(spec, k)); }

double log_norm_step(const ModuleSpec& spec, long k) {
  if (!spec.contains(k) || !spec.contains(k + 1)) {
    throw Error(ErrorCode::IndexOutOfSupport, "step leaves the index set");
  }
  NormLaw law = norm_law(spec);
  switch (law.kind) {
    case LawKind::Constant: return 0.0;
    case LawKind::TwoSided: {
      const double a1 = spec.a1().real(), a2 = spec.a2().real();
      if (k >= 0) return positive_log((k + 1 + a1) / (k - a2));
      return -positive_log((-k + a2) / (-k - 1 - a1));
    }
    case LawKind::OneSided: {
      long m = law.direction * (k - law.anchor);
      long j = law.direction > 0 ? m + 1 : m;
      double f = std::log(double(j)) + law.sigma * positive_log(j + law.c);
      return law.direction > 0 ? f : -f;
    }
  }
  return 0.0;
}

double verify_skew_adjoint(const ModuleSpec& spec, long K) {
  double worst = 0.0;
  for (long k = -K; k <= K; ++k) {
    if (!spec.contains(k)) continue;
    worst = std::max(worst, std::abs(spec.weight(k).imag()));
    if (!spec.contains(k + 1)) continue;
    // divide both sides by ||x(k)||^2
    double ratio = std::exp(log_norm_sq(spec, k + 1) - log_norm_sq(spec, k));
    Complex lhs = spec.coefficient(Sl2::F, k + 1).value();
    Complex rhs = std::conj(spec.coefficient(Sl2::E, k).value()) * ratio;
    double scale = std::abs(lhs) + std::abs(rhs);
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(lhs + rhs) / scale);
  }
  return worst;
}

double nelson_asymmetry(const ModuleSpec& spec, long K) {
  std::vector<long> idx;
  for (long k = -K; k <= K; ++k) {
    if (spec.contains(k)) idx.push_back(k);
  }
  const long n = static_cast<long>(idx.size());
  if (n == 0) return 0.0;
  std::vector<double> log_norm(n);
  for (long i = 0; i < n; ++i) log_norm[i] = log_norm_sq(spec, idx[i]);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 0; i + 1 < n; ++i) {
    double up = std::exp(0.5 * (log_norm[i + 1] - log_norm[i]));
    // E e_k lands on e_{k+1}, F e_{k+1} on e_k
    M(i + 1, i) += spec.coefficient(Sl2::E, idx[i]).value() * up;
    M(i, i + 1) -= spec.coefficient(Sl2::F, idx[i + 1]).value() / up;
  }
  Complex omega = casimir_scalar(spec).value();
  Eigen::MatrixXcd A = -0.5 * M * M;
  A.diagonal().array() += omega;
  return (A - A.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace weightlab
