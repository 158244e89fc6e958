#include "weightlab/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "weightlab/errors.hpp"
#include "weightlab/hypergeometric.hpp"
#include "weightlab/spectrum.hpp"
#include "weightlab/unitarity.hpp"
#include "weightlab/weyl.hpp"
#include "weightlab/xi_grid.hpp"

namespace weightlab {

namespace {

Scalar rat(long p, long q) { return Scalar(Rational(p, q)); }

// Exact samples of the requested case, deterministic.
std::vector<ModuleSpec> case_samples(ModuleCase c, int count) {
  std::mt19937 rng(1234 + int(c));
  std::uniform_int_distribution<long> num(-40, 40), den(2, 7), neg(1, 6);
  auto non_integer = [&]() {
    for (;;) {
      long q = den(rng), p = num(rng);
      if (p % q != 0) return rat(p, q);
    }
  };
  auto not_neg_int = [&]() { return (rng() % 4 == 0) ? Scalar(long(neg(rng) - 1)) : non_integer(); };
  std::vector<ModuleSpec> out;
  for (int i = 0; i < count; ++i) {
    switch (c) {
      case ModuleCase::I: out.emplace_back(not_neg_int(), not_neg_int()); break;
      case ModuleCase::II: out.emplace_back(not_neg_int(), Scalar(-neg(rng))); break;
      case ModuleCase::III: out.emplace_back(Scalar(-neg(rng)), not_neg_int()); break;
      case ModuleCase::IV: out.emplace_back(Scalar(-neg(rng)), Scalar(-neg(rng))); break;
    }
  }
  return out;
}

bool is_zero_vector(const WeightVector& v) {
  for (const auto& [k, c] : v.coeffs()) {
    if (!c.is_zero()) return false;
  }
  return true;
}

WeightVector minus(WeightVector x, WeightVector y) {
  y *= Scalar(-1);
  x += y;
  return x;
}

WeightVector commutator(Sl2 x, Sl2 y, const WeightVector& v) { return minus(act(x, act(y, v)), act(y, act(x, v))); }

std::vector<long> indices(const ModuleSpec& spec, long K) {
  std::vector<long> out;
  for (long k = -K; k <= K; ++k) {
    if (spec.contains(k)) out.push_back(k);
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

const ModuleCase kCases[] = {ModuleCase::I, ModuleCase::II, ModuleCase::III, ModuleCase::IV};

VerifyResult suite_sl2(long K) {
  VerifyResult r{"sl2-relations", true, {}};
  for (ModuleCase c : kCases) {
    int bad = 0, n = 0;
    for (const auto& spec : case_samples(c, 20)) {
      for (long k : indices(spec, K)) {
        WeightVector v = WeightVector::basis(spec, k);
        WeightVector he = act(Sl2::E, v), hf = act(Sl2::F, v);
        he *= Scalar(2);
        hf *= Scalar(-2);
        ++n;
        if (!is_zero_vector(minus(commutator(Sl2::H, Sl2::E, v), he)) ||
            !is_zero_vector(minus(commutator(Sl2::H, Sl2::F, v), hf)) ||
            !is_zero_vector(minus(commutator(Sl2::E, Sl2::F, v), act(Sl2::H, v)))) {
          ++bad;
        }
      }
    }
    r.passed &= bad == 0;
    r.lines.push_back(std::string("case ") + module_case_name(c) + ": " + std::to_string(n) + " vectors, " +
                      std::to_string(bad) + " violations");
  }
  return r;
}

VerifyResult suite_casimir(long K) {
  VerifyResult r{"casimir", true, {}};
  for (ModuleCase c : kCases) {
    int bad = 0, n = 0;
    for (const auto& spec : case_samples(c, 20)) {
      Scalar chi = casimir_scalar(spec);
      for (long k : indices(spec, K)) {
        WeightVector v = WeightVector::basis(spec, k);
        WeightVector cv = v;
        cv *= chi;
        ++n;
        if (!is_zero_vector(minus(apply_casimir(v), cv))) ++bad;
      }
    }
    r.passed &= bad == 0;
    r.lines.push_back(std::string("case ") + module_case_name(c) + ": " + std::to_string(n) + " vectors, " +
                      std::to_string(bad) + " violations");
  }
  return r;
}

VerifyResult suite_weyl(long K) {
  VerifyResult r{"weyl-oracle", true, {}};
  for (ModuleCase c : kCases) {
    int bad = 0, n = 0;
    for (const auto& spec : case_samples(c, 20)) {
      for (long k : indices(spec, K)) {
        WeightVector v = WeightVector::basis(spec, k);
        for (Sl2 x : {Sl2::H, Sl2::E, Sl2::F}) {
          ++n;
          WeightVector direct = act(x, v);
          WeightVector via = from_weyl(sl2_from_weyl(x, to_weyl(v)), spec);
          if (!is_zero_vector(minus(direct, via))) ++bad;
        }
      }
    }
    r.passed &= bad == 0;
    r.lines.push_back(std::string("case ") + module_case_name(c) + ": " + std::to_string(n) + " actions, " +
                      std::to_string(bad) + " mismatches");
  }
  return r;
}

std::vector<ModuleSpec> series_samples() {
  return {
      ModuleSpec(Scalar(Complex(-0.5, 1.3)), Scalar(Complex(-0.5, 1.3))),
      ModuleSpec(Scalar(Complex(-0.8, 0.4)), Scalar(Complex(-0.2, 0.4))),
      ModuleSpec(rat(-1, 2), rat(-1, 4)),
      ModuleSpec(rat(-2, 3), rat(-1, 5)),
      ModuleSpec(Scalar(-2.7), Scalar(1)),
      ModuleSpec(Scalar(1), Scalar(-2.6)),
      ModuleSpec(rat(-7, 3), Scalar(0)),
      ModuleSpec(rat(5, 4), Scalar(-3)),
      ModuleSpec(Scalar(0), rat(-3, 2)),
      ModuleSpec(Scalar(-3), rat(9, 4)),
      ModuleSpec(Scalar(-1), Scalar(-1)),
  };
}

VerifyResult suite_skew(long K) {
  VerifyResult r{"skew-adjoint", true, {}};
  for (const auto& spec : series_samples()) {
    double res = verify_skew_adjoint(spec, K);
    bool ok = res < 1e-10;
    r.passed &= ok;
    r.lines.push_back(spec.to_string() + " [" + classify(spec).to_string() + "] residual " + fmt(res) +
                      (ok ? "" : " FAIL"));
  }
  return r;
}

struct TensorSample {
  double a1, a2, a;
};

const TensorSample kCsSamples[] = {
    {-0.5, -0.25, -0.2}, {0.0, -0.3, -0.4}, {-0.7, -0.6, -0.1}, {-0.3, -0.8, -0.5}, {-0.6, -0.2, -0.15},
};

VerifyResult suite_generator(long K) {
  VerifyResult r{"generator-residual", true, {}};
  for (const auto& t : kCsSamples) {
    SpectrumReport sr = full_spectrum(ModuleSpec(Scalar(t.a1), Scalar(t.a2)), Scalar(t.a));
    TensorSpec spec(ModuleSpec(sr.a1, sr.a2), sr.a);
    for (const auto& d : sr.entries) {
      if (d.kind == EntryKind::HighestWeightLattice) continue;
      double res = generator_residual(spec, d, K);
      bool ok = res < 1e-8;
      r.passed &= ok;
      r.lines.push_back(spec.to_string() + " " + entry_kind_name(d.kind) + " " + d.module().to_string() +
                        " residual " + fmt(res) + (ok ? "" : " FAIL"));
    }
  }
  return r;
}

VerifyResult suite_theta() {
  VerifyResult r{"theta-integral", true, {}};
  for (double nu : {-0.9, -0.45, -0.1, 0.3, 1.7}) {
    for (double t : {0.0, 0.3, 0.8, 0.95}) {
      double err = std::abs(theta_integral(nu, t) - theta_integral_quadrature(nu, t));
      bool ok = err < 1e-8;
      r.passed &= ok;
      r.lines.push_back("nu=" + std::to_string(nu) + " t=" + std::to_string(t) + " error " + fmt(err) +
                        (ok ? "" : " FAIL"));
    }
  }
  return r;
}

VerifyResult suite_hypergeometric() {
  VerifyResult r{"hypergeometric", true, {}};
  const Hyp2F1Params gauss[] = {{0.3, -0.4, 1.2}, {-0.5, 0.25, 1.5}, {{0.2, 0.3}, {0.1, -0.2}, 2.1}};
  for (const auto& p : gauss) {
    double err = std::abs(hyp2f1(p, 1.0) - gauss_value_at_one(p));
    bool ok = err < 1e-9;
    r.passed &= ok;
    r.lines.push_back("Gauss value error " + fmt(err) + (ok ? "" : " FAIL"));
  }
  for (long n : {1L, 3L, 6L}) {
    Hyp2F1Params p{double(-n), 0.35, 1.45};
    double err = std::abs(hyp2f1(p, 1.0) - chu_vandermonde(n, p.beta, p.gamma));
    bool ok = err < 1e-9;
    r.passed &= ok;
    r.lines.push_back("Chu-Vandermonde n=" + std::to_string(n) + " error " + fmt(err) + (ok ? "" : " FAIL"));
  }
  return r;
}

VerifyResult suite_bridge() {
  VerifyResult r{"recurrence-bridge", true, {}};
  for (const auto& t : kCsSamples) {
    TensorSpec spec = canonical_tensor(ModuleSpec(Scalar(t.a1), Scalar(t.a2)), Scalar(t.a));
    XiWindows w = xi_windows(spec);
    for (double xi : {w.comp_lo + 0.1, w.principal_max - 0.5}) {
      CSCandidate cand{spec, xi};
      auto g = generating_function_coefficients(cand, 101);
      auto u = cs_recurrence(spec, xi, 101);
      double err = 0.0;
      for (long n = 0; n <= 100; ++n) err = std::max(err, std::abs(g[n] - u[n]) / std::max(1.0, std::abs(u[n])));
      bool ok = err < 1e-9;
      r.passed &= ok;
      r.lines.push_back(spec.to_string() + " xi=" + std::to_string(xi) + " error " + fmt(err) + (ok ? "" : " FAIL"));
    }
  }
  return r;
}

VerifyResult suite_principal() {
  VerifyResult r{"principal-exclusion", true, {}};
  for (const auto& t : kCsSamples) {
    TensorSpec spec = canonical_tensor(ModuleSpec(Scalar(t.a1), Scalar(t.a2)), Scalar(t.a));
    XiWindows w = xi_windows(spec);
    std::vector<double> xis;
    for (double d : {0.01, 0.05, 0.5, 2.0}) xis.push_back(w.principal_max - d);
    auto ex = principal_tail_exponents(spec, xis, 512);
    for (std::size_t i = 0; i < xis.size(); ++i) {
      bool ok = ex[i] >= -1.05;
      r.passed &= ok;
      r.lines.push_back(spec.to_string() + " xi=" + std::to_string(xis[i]) + " exponent " + std::to_string(ex[i]) +
                        (ok ? "" : " FAIL"));
    }
  }
  return r;
}

VerifyResult suite_smooth() {
  VerifyResult r{"smooth-vectors", true, {}};
  for (const auto& t : kCsSamples) {
    TensorSpec spec = canonical_tensor(ModuleSpec(Scalar(t.a1), Scalar(t.a2)), Scalar(t.a));
    if (!in_smooth_window(spec)) continue;
    SmoothResult sm = smooth_membership(spec, 0, 1);
    bool ok = sm.exponents.size() >= 2 && sm.exponents[0] < -1.0 && sm.exponents[1] >= -1.0;
    r.passed &= ok;
    r.lines.push_back(spec.to_string() + " exponents N=0: " + std::to_string(sm.exponents.at(0)) +
                      " N=1: " + std::to_string(sm.exponents.at(1)) + (ok ? "" : " FAIL"));
  }
  return r;
}

VerifyResult suite_oracle() {
  VerifyResult r{"spectrum-oracle", true, {}};
  for (const auto& t : kCsSamples) {
    SpectrumReport sr = full_spectrum(ModuleSpec(Scalar(t.a1), Scalar(t.a2)), Scalar(t.a));
    TensorSpec spec(ModuleSpec(sr.a1, sr.a2), sr.a);
    auto predicted = predicted_members(spec, sr.entries);
    auto grid = make_xi_grid(spec, {}, predicted);
    bool real_s = is_real(spec.s(), spec.tol());
    auto found = oracle_members(scan_xi_grid(spec, grid, 256), real_s);
    auto covered = [](const std::vector<double>& xs, const std::vector<double>& ys) {
      for (double x : xs) {
        bool hit = false;
        for (double y : ys) hit |= std::abs(x - y) < 1e-3;
        if (!hit) return false;
      }
      return true;
    };
    bool ok = covered(predicted, found) && covered(found, predicted);
    r.passed &= ok;
    r.lines.push_back(spec.to_string() + " predicted " + std::to_string(predicted.size()) + ", oracle " +
                      std::to_string(found.size()) + (ok ? "" : " FAIL"));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "sl2-relations", "casimir",   "weyl-oracle",         "skew-adjoint",   "generator-residual", "theta-integral",
      "hypergeometric", "recurrence-bridge", "principal-exclusion", "smooth-vectors", "spectrum-oracle",  "all"};
  return names;
}

std::vector<VerifyResult> run_verify(const std::string& suite, long K) {
  if (K < 1) throw Error(ErrorCode::OutOfRange, "K must be at least 1");
  const std::vector<std::pair<std::string, std::function<VerifyResult()>>> table = {
      {"sl2-relations", [&] { return suite_sl2(K); }},
      {"casimir", [&] { return suite_casimir(K); }},
      {"weyl-oracle", [&] { return suite_weyl(K); }},
      {"skew-adjoint", [&] { return suite_skew(K); }},
      {"generator-residual", [&] { return suite_generator(K); }},
      {"theta-integral", suite_theta},
      {"hypergeometric", suite_hypergeometric},
      {"recurrence-bridge", suite_bridge},
      {"principal-exclusion", suite_principal},
      {"smooth-vectors", suite_smooth},
      {"spectrum-oracle", suite_oracle},
  };
  std::vector<VerifyResult> out;
  for (const auto& [name, fn] : table) {
    if (suite == "all" || suite == name) out.push_back(fn());
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "unknown suite " + suite);
  return out;
}

}  // namespace weightlab
