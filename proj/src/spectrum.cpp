#include "weightlab/spectrum.hpp"

#include <cmath>
#include <limits>

#include "weightlab/asymptotics.hpp"
#include "weightlab/hypergeometric.hpp"

namespace weightlab {

namespace {

Complex cval(const Scalar& x) { return x.value(); }

// Largest integer n with 2n < bound, plus whether the decision was a near tie.
std::pair<long, bool> below_half(const Scalar& bound, const Tolerance& tol) {
  if (auto r = bound.exact()) {
    Rational h = *r / 2;
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(h), den = denominator(h);
    cpp_int q = num / den;
    if (num > 0 && q * den != num) q += 1;  // ceil
    return {q.convert_to<long>() - 1, false};
  }
  double v = bound.real() / 2.0;
  bool tie = std::abs(v - std::round(v)) <= tol.abs_eps;
  return {static_cast<long>(std::ceil(v)) - 1, tie && v != std::round(v)};
}

// Smallest integer n with 2n > bound.
std::pair<long, bool> above_half(const Scalar& bound, const Tolerance& tol) {
  if (auto r = bound.exact()) {
    Rational h = *r / 2;
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(h), den = denominator(h);
    cpp_int q = num / den;
    if (num < 0 && q * den != num) q -= 1;  // floor
    return {q.convert_to<long>() + 1, false};
  }
  double v = bound.real() / 2.0;
  bool tie = std::abs(v - std::round(v)) <= tol.abs_eps;
  return {static_cast<long>(std::floor(v)) + 1, tie && v != std::round(v)};
}

bool is_zero_param(const Scalar& x, const Tolerance& tol) {
  auto n = as_integer(x, tol);
  return n && *n == 0;
}

bool strictly_between(const Scalar& lo, const Scalar& x, const Scalar& hi, const Tolerance& tol, bool& boundary) {
  auto less = [&](const Scalar& u, const Scalar& v) {
    if (u.is_exact() && v.is_exact()) return *u.exact() < *v.exact();
    double d = v.real() - u.real();
    if (std::abs(d) <= tol.abs_eps) boundary = true;
    return d > 0;
  };
  return less(lo, x) && less(x, hi);
}

}  // namespace

Complex CSCandidate::mu() const {
  return xi - cval(spec.a2()) * (1.0 + cval(spec.a()) + cval(spec.a1()));
}

Complex CSCandidate::p() const { return cval(spec.a()) * cval(spec.a2()); }

Complex CSCandidate::discriminant() const {
  Complex h = (1.0 + cval(spec.s())) / 2.0;
  return mu() + h * h;
}

Complex CSCandidate::r() const {
  return (1.0 + cval(spec.s())) / 2.0 - std::sqrt(discriminant());
}

Complex xi_for_r(const TensorSpec& spec, Complex r) {
  Complex h = (1.0 + cval(spec.s())) / 2.0;
  Complex root = h - r;
  return root * root - h * h + cval(spec.a2()) * (1.0 + cval(spec.a()) + cval(spec.a1()));
}

XiWindows xi_windows(const TensorSpec& spec) {
  double c = (spec.a() + spec.a1() - spec.a2()).real();
  double lo = -std::pow((1.0 + c) / 2.0, 2);
  return {lo, lo, -(c / 2.0) * ((c + 2.0) / 2.0)};
}

long generator_start(const TensorSpec& spec, long n0) {
  const IndexRange& r = spec.left().index_range();
  return r.lo ? std::max(0L, *r.lo - n0) : 0L;
}

std::optional<std::vector<Scalar>> hw_coefficients(const TensorSpec& spec, long n0, long L) {
  const long l0 = generator_start(spec, n0);
  if (!spec.contains(l0 + n0, l0)) return std::nullopt;
  const ModuleSpec& left = spec.left();
  const ModuleSpec& right = spec.right();
  // coefficient of z(l0 + n0, l0 - 1) in E of the sum is u_{l0} b(l0)
  if (l0 > 0 && !right.coefficient(Sl2::E, -l0).is_zero()) return std::nullopt;
  std::vector<Scalar> u;
  u.reserve(L);
  Scalar cur(1);
  for (long i = 0; i < L; ++i) {
    u.push_back(cur);
    long l = l0 + i;
    Scalar a = left.coefficient(Sl2::E, l + n0);
    Scalar b = right.coefficient(Sl2::E, -(l + 1));
    cur = -cur * a / b;
  }
  return u;
}

std::optional<std::vector<Scalar>> lw_coefficients(const TensorSpec& spec, long n0, long L) {
  const long l0 = generator_start(spec, n0);
  if (!spec.contains(l0 + n0, l0)) return std::nullopt;
  const ModuleSpec& left = spec.left();
  const ModuleSpec& right = spec.right();
  // coefficient of z(l0 + n0 - 1, l0) in F of the sum is u_{l0} a'(l0 + n0)
  if (left.contains(l0 + n0 - 1) && !left.coefficient(Sl2::F, l0 + n0).is_zero()) return std::nullopt;
  std::vector<Scalar> u;
  u.reserve(L);
  Scalar cur(1);
  for (long i = 0; i < L; ++i) {
    u.push_back(cur);
    long l = l0 + i;
    Scalar b = right.coefficient(Sl2::F, -l);
    Scalar a = left.coefficient(Sl2::F, l + 1 + n0);
    cur = -cur * b / a;
  }
  return u;
}

const char* entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::HighestWeight: return "HighestWeight";
    case EntryKind::HighestWeightLattice: return "HighestWeightLattice";
    case EntryKind::LowestWeight: return "LowestWeight";
    case EntryKind::Complementary: return "Complementary";
  }
  return "?";
}

const char* generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::HwRecurrence: return "hw-recurrence";
    case GeneratorKind::LwRecurrence: return "lw-recurrence";
    case GeneratorKind::CsHypergeometric: return "cs-hypergeometric";
    case GeneratorKind::CsBinomial: return "cs-binomial";
  }
  return "?";
}

std::vector<SubmoduleDescriptor> hw_submodules(const TensorSpec& spec) {
  const Tolerance& tol = spec.tol();
  Scalar bound = Scalar(-1) - spec.a() - spec.a1() + spec.a2();
  if (!is_real(bound, tol)) return {};
  if (!bound.is_exact()) bound = Scalar(bound.real());
  auto [n_max, tie] = below_half(bound, tol);
  Scalar shift = spec.a1() + spec.a() - spec.a2();
  if (!shift.is_exact()) shift = Scalar(shift.real());
  std::vector<SubmoduleDescriptor> out;
  auto entry = [&](EntryKind kind, long n0) {
    SubmoduleDescriptor d;
    d.kind = kind;
    d.n0 = n0;
    d.b1 = shift + Scalar(2 * n0);
    d.b2 = Scalar(0);
    d.generator = GeneratorKind::HwRecurrence;
    d.boundary = tie;
    return d;
  };
  if (is_zero_param(spec.a1(), tol)) {
    for (long n0 = 0; n0 <= n_max; ++n0) out.push_back(entry(EntryKind::HighestWeight, n0));
  } else {
    out.push_back(entry(EntryKind::HighestWeightLattice, n_max));
  }
  return out;
}

std::vector<SubmoduleDescriptor> lw_submodules(const TensorSpec& spec) {
  const Tolerance& tol = spec.tol();
  if (!is_zero_param(spec.a1(), tol)) return {};
  // 1 + a2 - a < 2 n0 <= 0
  Scalar lower = Scalar(1) + spec.a2() - spec.a();
  if (!lower.is_exact()) lower = Scalar(lower.real());
  auto [n_min, tie] = above_half(lower, tol);
  std::vector<SubmoduleDescriptor> out;
  for (long n0 = n_min; n0 <= 0; ++n0) {
    SubmoduleDescriptor d;
    d.kind = EntryKind::LowestWeight;
    d.n0 = n0;
    d.b1 = Scalar(0);
    d.b2 = spec.a2() - spec.a() - Scalar(2 * n0);
    if (!d.b2.is_exact()) d.b2 = Scalar(d.b2.real());
    d.generator = GeneratorKind::LwRecurrence;
    d.boundary = tie;
    out.push_back(d);
  }
  return out;
}

std::vector<SubmoduleDescriptor> cs_submodules(const TensorSpec& spec) {
  const Tolerance& tol = spec.tol();
  std::vector<SubmoduleDescriptor> out;
  if (!is_real(spec.a1(), tol) || !is_real(spec.a2(), tol)) return out;
  const Scalar a = spec.a(), a1 = spec.a1(), a2 = spec.a2();
  bool boundary = false;
  if (strictly_between(Scalar(-1), spec.s(), Scalar(0), tol, boundary)) {
    SubmoduleDescriptor d;
    d.kind = EntryKind::Complementary;
    d.b1 = a + a1;
    d.b2 = a2;
    d.xi = cval(a2 * (Scalar(1) + a + a1));
    d.generator = GeneratorKind::CsHypergeometric;
    d.boundary = boundary;
    out.push_back(d);
  }
  boundary = false;
  bool complementary_left = strictly_between(Scalar(-1), a1, Scalar(0), tol, boundary) &&
                            strictly_between(Scalar(-1), a2, Scalar(0), tol, boundary);
  if (complementary_left && strictly_between(Scalar(-2), a1 + a2 - a, Scalar(-1), tol, boundary)) {
    SubmoduleDescriptor d;
    d.kind = EntryKind::Complementary;
    d.b1 = a1;
    d.b2 = a2 - a;
    d.xi = cval((a2 - a) * (a1 + Scalar(1)));
    d.generator = GeneratorKind::CsBinomial;
    d.boundary = boundary;
    out.push_back(d);
  }
  for (auto& d : out) {
    if (!d.b1.is_exact()) d.b1 = Scalar(d.b1.real());
    if (!d.b2.is_exact()) d.b2 = Scalar(d.b2.real());
  }
  return out;
}

std::vector<Scalar> generator_coefficients(const TensorSpec& spec, const SubmoduleDescriptor& d, long count) {
  switch (d.generator) {
    case GeneratorKind::HwRecurrence: {
      auto u = hw_coefficients(spec, d.n0, count);
      return u ? *u : std::vector<Scalar>(count, Scalar(0));
    }
    case GeneratorKind::LwRecurrence: {
      auto u = lw_coefficients(spec, d.n0, count);
      return u ? *u : std::vector<Scalar>(count, Scalar(0));
    }
    case GeneratorKind::CsHypergeometric:
    case GeneratorKind::CsBinomial: break;
  }
  const Scalar a = spec.a(), a1 = spec.a1(), a2 = spec.a2();
  std::vector<Scalar> u;
  u.reserve(count);
  Scalar cur(1);
  for (long n = 0; n < count; ++n) {
    u.push_back(cur);
    Scalar N(n);
    if (d.generator == GeneratorKind::CsHypergeometric) {
      cur = cur * (N - a) * (N - a2) / ((Scalar(1) + a1 + N) * (N + Scalar(1)));
    } else {
      cur = cur * (N - a) / (N + Scalar(1));
    }
  }
  return u;
}

namespace {

// Diagonal of the generator: z(k0 + i, l0 + i).
std::pair<long, long> generator_origin(const TensorSpec& spec, const SubmoduleDescriptor& d) {
  if (d.kind == EntryKind::Complementary) return {0, 0};
  long l0 = generator_start(spec, d.n0);
  return {l0 + d.n0, l0};
}

}  // namespace

double generator_residual(const TensorSpec& spec, const SubmoduleDescriptor& d, long K, ResidualRows rows) {
  auto [k0, l0] = generator_origin(spec, d);
  std::vector<Scalar> u = generator_coefficients(spec, d, K + 1);
  TensorState w(spec);
  for (long i = 0; i <= K; ++i) w.add(k0 + i, l0 + i, u[i]);

  TensorState res(spec);
  long last_row;  // rows (k, l) with l >= last_row are truncation artefacts
  switch (d.kind) {
    case EntryKind::Complementary: {
      res = act_tensor(Sl2::F, act_tensor(Sl2::E, w));
      Scalar xi(d.xi);
      for (const auto& [kl, c] : w.coeffs()) res.add(kl.first, kl.second, -xi * c);
      last_row = l0 + K;
      break;
    }
    case EntryKind::LowestWeight:
      res = act_tensor(Sl2::F, w);
      last_row = l0 + K + 1;
      break;
    default:
      res = act_tensor(Sl2::E, w);
      last_row = l0 + K;
      break;
  }
  double num = 0.0, den = 0.0;
  for (const auto& [kl, c] : res.coeffs()) {
    if (rows == ResidualRows::Interior && kl.second >= last_row) continue;
    num += std::norm(c.value()) * tensor_norm_sq(spec, kl.first, kl.second);
  }
  for (long i = 0; i <= K; ++i) den += std::norm(u[i].value()) * tensor_norm_sq(spec, k0 + i, l0 + i);
  return std::sqrt(num / den);
}

std::vector<double> generator_log_terms(const TensorSpec& spec, const SubmoduleDescriptor& d, long count) {
  auto [k0, l0] = generator_origin(spec, d);
  const Complex a = cval(spec.a()), a1 = cval(spec.a1()), a2 = cval(spec.a2());
  const ModuleSpec& left = spec.left();
  const ModuleSpec& right = spec.right();
  std::vector<double> out = diagonal_log_norms(spec, k0, l0, count);
  double log_u = 0.0;
  for (long i = 0; i < count; ++i) {
    out[i] += 2.0 * log_u;
    double n = double(i);
    long l = l0 + i;
    Complex ratio;
    switch (d.generator) {
      case GeneratorKind::CsHypergeometric: ratio = (n - a) * (n - a2) / ((1.0 + a1 + n) * (n + 1.0)); break;
      case GeneratorKind::CsBinomial: ratio = (n - a) / (n + 1.0); break;
      case GeneratorKind::HwRecurrence:
        ratio = left.coefficient(Sl2::E, l + d.n0).value() / right.coefficient(Sl2::E, -(l + 1)).value();
        break;
      case GeneratorKind::LwRecurrence:
        ratio = right.coefficient(Sl2::F, -l).value() / left.coefficient(Sl2::F, l + 1 + d.n0).value();
        break;
    }
    log_u += std::log(std::abs(ratio));
  }
  return out;
}

MembershipResult cs_membership(const CSCandidate& cand) {
  const Tolerance& tol = cand.spec.tol();
  Complex d = cand.discriminant();
  if (std::abs(d.imag()) > tol.abs_eps) throw Error(ErrorCode::OutOfRange, "complex discriminant");
  if (d.real() <= 0.0) return {Membership::NotMember, MembershipReason::PrincipalRange, 0};
  if (d.real() >= 0.25) throw Error(ErrorCode::OutOfRange, "discriminant >= 1/4");
  const Complex r = cand.r();
  const Complex a = cval(cand.spec.a()), a1 = cval(cand.spec.a1()), a2 = cval(cand.spec.a2());
  auto nonpos = [&](Complex x) -> std::optional<long> {
    auto n = as_integer(Scalar(x), tol);
    if (n && *n <= 0) return -*n;
    return std::nullopt;
  };
  if (auto n = nonpos(r - a)) return {Membership::NotMember, MembershipReason::PolynomialTruncation, *n};
  if (auto n = nonpos(r - a2)) return {Membership::NotMember, MembershipReason::PolynomialTruncation, *n};
  if (auto n = nonpos(1.0 + a1 + a - r)) return {Membership::Member, MembershipReason::HyperN, *n};
  if (auto n = nonpos(1.0 + a1 + a2 - r)) return {Membership::Member, MembershipReason::HyperN, *n};
  Complex s = cval(cand.spec.s());
  bool s_ok = std::abs(s.imag()) <= tol.abs_eps && s.real() > -1.0 && s.real() < 0.0;
  if (s_ok && std::abs(r) <= tol.abs_eps) return {Membership::Member, MembershipReason::RZero, 0};
  return {Membership::NotMember, MembershipReason::Generic, 0};
}

TensorSpec canonical_tensor(const ModuleSpec& left, const Scalar& a) {
  const Tolerance& tol = left.tol();
  if (!is_real(a, tol) || !(a.real() < 0.0)) {
    throw Error(ErrorCode::NotUnitarizable, "right factor N(a, 0) needs real a < 0");
  }
  SeriesLabel label = classify(left);
  if (!label.unitarizable()) throw Error(ErrorCode::NotUnitarizable, left.to_string() + " is not unitarizable");
  if (label.kind != Series::Principal && label.kind != Series::Complementary &&
      label.kind != Series::LowestWeight) {
    throw Error(ErrorCode::UnsupportedConfiguration,
                "left factor must be principal, complementary or lowest weight, got " + label.to_string());
  }
  Scalar ar = a.is_exact() ? a : Scalar(a.real());
  return TensorSpec(*label.canonical(tol), ar);
}

SpectrumReport full_spectrum(const ModuleSpec& left, const Scalar& a) {
  TensorSpec spec = canonical_tensor(left, a);
  SpectrumReport report;
  report.a1 = spec.a1();
  report.a2 = spec.a2();
  report.a = spec.a();
  report.left = classify(left);
  for (auto&& list : {hw_submodules(spec), lw_submodules(spec), cs_submodules(spec)}) {
    for (const auto& d : list) report.entries.push_back(d);
  }
  if (!approx_eq(left.a1(), spec.a1(), left.tol()) || !approx_eq(left.a2(), spec.a2(), left.tol())) {
    report.diagnostics.push_back("left factor replaced by " + spec.left().to_string());
  }
  report.diagnostics.push_back(std::string("tensor case ") + tensor_case_name(spec.tensor_case()));
  report.diagnostics.push_back("no principal-series summands");
  for (const auto& d : report.entries) {
    if (d.boundary) report.diagnostics.push_back("entry within tolerance of a window boundary");
  }
  return report;
}

std::vector<Complex> cs_recurrence(const TensorSpec& spec, Complex xi, long count) {
  const Complex a = cval(spec.a()), a1 = cval(spec.a1()), a2 = cval(spec.a2());
  const Complex s = a + a1 + a2;
  const CSCandidate cand{spec, xi};
  const Complex mu = cand.mu(), p = cand.p();
  std::vector<Complex> u(std::max(count, 2L));
  u[0] = 1.0;
  u[1] = (p + mu) / (a1 + 1.0);
  for (long n = 0; n + 2 < count; ++n) {
    double m = double(n);
    Complex lead = (m + 2.0) * (m + 2.0 + a1);
    Complex tail = (m - a) * (m - a2);
    Complex mid = s + 2.0 - mu - lead - tail;
    u[n + 2] = -(mid * u[n + 1] + tail * u[n]) / lead;
  }
  u.resize(count);
  return u;
}

std::vector<Scalar> fe_eigen_recurrence(const TensorSpec& spec, const Scalar& xi, long count) {
  TridiagonalFE fe(spec, 0);
  std::vector<Scalar> u;
  u.reserve(count);
  u.push_back(Scalar(1));
  FECoefficients prev{}, cur = fe.at(0);
  for (long j = 0; j + 1 < count; ++j) {
    FECoefficients next = fe.at(j + 1);
    Scalar rhs = (xi - cur.b) * u[j];
    if (j > 0) rhs -= prev.c * u[j - 1];
    u.push_back(rhs / next.a);
    prev = cur;
    cur = next;
  }
  return u;
}

std::vector<Complex> generating_function_coefficients(const CSCandidate& cand, long count) {
  const Complex a = cval(cand.spec.a()), a1 = cval(cand.spec.a1()), a2 = cval(cand.spec.a2());
  const Complex r = cand.r();
  std::vector<Complex> binom(count), hyp(count), out(count, 0.0);
  binom[0] = hyp[0] = 1.0;
  for (long k = 0; k + 1 < count; ++k) {
    double m = double(k);
    binom[k + 1] = binom[k] * (m - r) / (m + 1.0);
    hyp[k + 1] = hyp[k] * (r - a + m) * (r - a2 + m) / ((1.0 + a1 + m) * (m + 1.0));
  }
  for (long n = 0; n < count; ++n) {
    for (long k = 0; k <= n; ++k) out[n] += binom[k] * hyp[n - k];
  }
  return out;
}

double generating_function_ode_residual(const CSCandidate& cand, double t) {
  const Complex a = cval(cand.spec.a()), a1 = cval(cand.spec.a1()), a2 = cval(cand.spec.a2());
  const Complex s = a + a1 + a2, r = cand.r(), mu = cand.mu(), p = cand.p();
  const Tolerance tight{1e-15, 1e-15};
  Hyp2F1Params f{r - a, r - a2, 1.0 + a1};
  Hyp2F1Params f1{f.alpha + 1.0, f.beta + 1.0, f.gamma + 1.0};
  Complex F = hyp2f1(f, t, tight);
  Complex dF = hyp2f1_derivative(f, t, tight);
  Complex ddF = f.alpha * f.beta / f.gamma * hyp2f1_derivative(f1, t, tight);
  const double q = 1.0 - t;
  Complex w0 = std::pow(Complex(q), r), w1 = std::pow(Complex(q), r - 1.0), w2 = std::pow(Complex(q), r - 2.0);
  Complex S = w0 * F;
  Complex dS = -r * w1 * F + w0 * dF;
  Complex ddS = r * (r - 1.0) * w2 * F - 2.0 * r * w1 * dF + w0 * ddF;
  Complex t1 = t * q * ddS;
  Complex t2 = (1.0 + a1 - (1.0 + a1 - s) * t) * dS;
  Complex t3 = -(p + mu / q) * S;
  return std::abs(t1 + t2 + t3) / (std::abs(t1) + std::abs(t2) + std::abs(t3));
}

double principal_tail_exponent(const TensorSpec& spec, double xi, long N) {
  CSCandidate cand{spec, xi};
  Complex d = cand.discriminant();
  const Tolerance& tol = spec.tol();
  if (d.real() > tol.abs_eps) throw Error(ErrorCode::OutOfRange, "xi outside the principal range");
  std::vector<Complex> u = cs_recurrence(spec, xi, 4 * N + 2);
  const Complex s = cval(spec.s());
  const Complex alpha0 = (-s - 3.0) / 2.0;
  const double beta = std::sqrt(std::max(0.0, -d.real()));
  return fit_tail(
             [&](long n) {
               double q = std::norm(u[n]);
               if (beta > 1e-8) {
                 // u ~ n^alpha0 (A n^{i beta} + B n^{-i beta}); pair u with its quarter-phase partner
                 Complex nd = double(n) * (u[n + 1] - u[n - 1]) / 2.0;
                 Complex partner = (nd - alpha0 * u[n]) / Complex(0.0, beta);
                 q += std::norm(partner);
               }
               return std::log(q) + (2.0 + s.real()) * std::log(double(n));
             },
             N)
      .exponent;
}

bool in_smooth_window(const TensorSpec& spec) {
  const Tolerance& tol = spec.tol();
  if (!is_real(spec.a1(), tol) || !is_real(spec.a2(), tol) || !is_real(spec.a(), tol)) return false;
  double a = spec.a().real(), a1 = spec.a1().real(), a2 = spec.a2().real(), s = a + a1 + a2;
  return -1.0 < a1 && a1 <= 0.0 && -1.0 < a && a < 0.0 && -1.0 < a2 && a2 < 0.0 && -1.0 < s && s < 0.0;
}

std::vector<Complex> smooth_vector_coefficients(const TensorSpec& spec, long k, long count) {
  const Complex a = cval(spec.a()), a1 = cval(spec.a1()), a2 = cval(spec.a2());
  std::vector<Complex> c(count);
  if (k >= 0) {
    Complex cur = 1.0;
    for (long j = 1; j <= k; ++j) cur *= (a + a1 + double(j)) / (a1 + double(j));
    for (long n = 0; n < count; ++n) {
      c[n] = cur;
      double m = double(n);
      cur *= (m - a) * (m + double(k) - a2) / ((m + double(k) + 1.0 + a1) * (m + 1.0));
    }
    return c;
  }
  const long m = -k;
  Complex q = 1.0;
  for (long j = 1; j <= m; ++j) q *= a + a1 + 1.0 - double(j);
  // direct form up to n = m, where the lower Pochhammer symbol may vanish
  for (long n = 0; n < count && n <= m; ++n) {
    Complex r = 1.0;
    for (long i = n; i < m; ++i) r *= a1 - double(m) + 1.0 + double(i);
    Complex num = pochhammer(-a, n) * pochhammer(-double(m) - a2, n);
    double fact = std::tgamma(double(n) + 1.0);
    c[n] = num / fact * r / q;
  }
  for (long n = m; n + 1 < count; ++n) {
    double x = double(n);
    c[n + 1] = c[n] * (x - a) * (x - double(m) - a2) / ((x + 1.0) * (a1 + 1.0 + x - double(m)));
  }
  return c;
}

SmoothResult smooth_membership(const TensorSpec& spec, long k, int max_weight, long N) {
  if (!in_smooth_window(spec)) throw Error(ErrorCode::OutOfWindow, "parameters outside the smooth-vector window");
  const long n_start = std::max(0L, -k);
  const long count = 4 * N + 2;
  std::vector<Complex> c = smooth_vector_coefficients(spec, k, n_start + count);
  std::vector<double> norms = diagonal_log_norms(spec, k + n_start, n_start, count);
  SmoothResult out;
  for (int w = 0; w <= max_weight; ++w) {
    double e = fit_tail(
                   [&](long i) {
                     long n = n_start + i;
                     double kk = double(k + n), ll = double(n);
                     return std::log(std::norm(c[n])) + norms[i] + w * std::log(kk * kk + ll * ll);
                   },
                   N)
                   .exponent;
    out.exponents.push_back(e);
    if (!out.diverges_at && e >= -1.0) out.diverges_at = w;
  }
  return out;
}

}  // namespace weightlab
