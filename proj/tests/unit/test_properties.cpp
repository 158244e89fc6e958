#include <cmath>
#include <random>

#include "doctest.h"
#include "weightlab/spectrum.hpp"
#include "weightlab/unitarity.hpp"

using namespace weightlab;

namespace {

Scalar rat(long p, long q) { return Scalar(Rational(p, q)); }

// H^2/4 + H/2 + FE on the tensor product.
TensorState tensor_casimir(const TensorState& v) {
  TensorState fe = act_tensor(Sl2::F, act_tensor(Sl2::E, v));
  for (const auto& [kl, c] : v.coeffs()) {
    Scalar w = v.spec().weight(kl.first, kl.second);
    fe.add(kl.first, kl.second, c * (w * w / Scalar(4) + w / Scalar(2)));
  }
  return fe;
}

// Largest |(Omega - chi) w| over rows away from the truncation edge.
double casimir_defect(const TensorSpec& spec, const SubmoduleDescriptor& d, long K) {
  long k0 = 0, l0 = 0;
  if (d.kind != EntryKind::Complementary) {
    l0 = generator_start(spec, d.n0);
    k0 = l0 + d.n0;
  }
  auto u = generator_coefficients(spec, d, K + 1);
  TensorState w(spec);
  for (long i = 0; i <= K; ++i) w.add(k0 + i, l0 + i, u[i]);
  Scalar chi = casimir_scalar(d.module());
  TensorState om = tensor_casimir(w);
  double worst = 0.0;
  for (const auto& [kl, c] : om.coeffs()) {
    if (kl.second >= l0 + K - 1) continue;
    worst = std::max(worst, (c - chi * w.at(kl.first, kl.second)).abs());
  }
  return worst;
}

}  // namespace

TEST_CASE("generators are Casimir eigenvectors with the submodule's eigenvalue") {
  const TensorSpec exact[] = {
      TensorSpec(ModuleSpec(Scalar(0), rat(-1, 5)), rat(-11, 2)),
      TensorSpec(ModuleSpec(Scalar(0), rat(-7, 2)), rat(-1, 4)),
      TensorSpec(ModuleSpec(rat(-1, 2), rat(-1, 4)), rat(-1, 5)),
      TensorSpec(ModuleSpec(rat(-9, 10), rat(-4, 5)), rat(-1, 5)),
  };
  int checked = 0;
  for (const auto& spec : exact) {
    for (auto&& list : {hw_submodules(spec), lw_submodules(spec), cs_submodules(spec)}) {
      for (const auto& d : list) {
        if (d.kind == EntryKind::HighestWeightLattice) continue;
        CHECK(casimir_defect(spec, d, 30) == 0.0);
        ++checked;
      }
    }
  }
  CHECK(checked >= 7);
}

TEST_CASE("complementary eigenvalues match the Casimir on the base weight") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> num(-19, -1);
  for (int trial = 0; trial < 200; ++trial) {
    TensorSpec spec(ModuleSpec(rat(num(rng), 20), rat(num(rng), 20)), rat(num(rng), 20));
    for (const auto& d : cs_submodules(spec)) {
      Scalar w0 = spec.base_weight();
      Scalar chi = casimir_scalar(d.module()) - w0 * w0 / Scalar(4) - w0 / Scalar(2);
      CHECK(std::abs(chi.value() - d.xi) < 1e-12);
      CHECK(support(d.module()).contains(w0));
      XiWindows w = xi_windows(spec);
      CHECK(d.xi.real() > w.comp_lo);
      CHECK(d.xi.real() < w.comp_hi);
      CHECK(cs_membership({spec, d.xi}).verdict == Membership::Member);
    }
  }
}

TEST_CASE("entries are unitarizable modules") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(-0.97, -0.03), big(-4.0, -0.03);
  for (int trial = 0; trial < 200; ++trial) {
    bool lw = trial % 4 == 0;
    ModuleSpec left = lw ? ModuleSpec(Scalar(0), Scalar(big(rng))) : ModuleSpec(Scalar(u(rng)), Scalar(u(rng)));
    if (classify(left).kind == Series::NotUnitarizable) continue;
    SpectrumReport sr = full_spectrum(left, Scalar(big(rng)));
    for (const auto& d : sr.entries) {
      if (d.boundary) continue;
      SeriesLabel l = classify(d.module());
      CHECK(l.unitarizable());
      if (d.kind == EntryKind::Complementary) CHECK(l.kind == Series::Complementary);
      if (d.kind == EntryKind::LowestWeight) CHECK(l.kind == Series::LowestWeight);
    }
  }
}

TEST_CASE("canonical representatives keep the Casimir and the weights") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> num(-60, 60), den(2, 6);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    ModuleSpec spec(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
    SeriesLabel l = classify(spec);
    if (!l.unitarizable()) continue;
    auto c = l.canonical();
    REQUIRE(c);
    CHECK(casimir_scalar(*c) == casimir_scalar(spec));
    CHECK(classify(*c).kind == l.kind);
    SupportDescriptor a = support(spec), b = support(*c);
    for (long k = -10; k <= 10; ++k) {
      if (spec.contains(k)) CHECK(b.contains(spec.weight(k)));
      if (c->contains(k)) CHECK(a.contains(c->weight(k)));
    }
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("float evaluation tracks exact evaluation") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> num(-40, 40), den(2, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar a1 = rat(num(rng), den(rng)), a2 = rat(num(rng), den(rng)), a = rat(-std::abs(num(rng)) - 1, den(rng));
    if (ModuleSpec(a1, a2).index_range().hi) continue;
    TensorSpec exact(ModuleSpec(a1, a2), a);
    TensorSpec flt(ModuleSpec(Scalar(a1.real()), Scalar(a2.real())), Scalar(a.real()));
    REQUIRE(exact.tensor_case() == flt.tensor_case());
    CHECK(std::abs(casimir_scalar(exact.left()).real() - casimir_scalar(flt.left()).real()) < 1e-10);
    Scalar xi = rat(num(rng), 7);
    auto ue = fe_eigen_recurrence(exact, xi, 15);
    auto uf = fe_eigen_recurrence(flt, Scalar(xi.real()), 15);
    for (long n = 0; n < 15; ++n) CHECK(std::abs(ue[n].value() - uf[n].value()) < 1e-8 * std::max(1.0, ue[n].abs()));
  }
}

TEST_CASE("tensor weights add and H is diagonal") {
  TensorSpec spec(ModuleSpec(rat(3, 7), rat(-11, 5)), rat(-5, 3));
  for (long k = -5; k <= 5; ++k) {
    for (long l = 0; l <= 5; ++l) {
      if (!spec.contains(k, l)) continue;
      TensorState h = act_tensor(Sl2::H, TensorState::basis(spec, k, l));
      CHECK(h.at(k, l) == spec.left().weight(k) + spec.right().weight(-l));
      TensorState e = act_tensor(Sl2::E, TensorState::basis(spec, k, l));
      for (const auto& [kl, c] : e.coeffs()) CHECK(spec.weight(kl.first, kl.second) == spec.weight(k, l) + Scalar(2));
    }
  }
}
