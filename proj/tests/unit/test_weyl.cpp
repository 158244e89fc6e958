#include <random>
#include <vector>

#include "doctest.h"
#include "weightlab/weyl.hpp"

using namespace weightlab;

namespace {

Scalar rat(long p, long q) { return Scalar(Rational(p, q)); }

bool member(const WeylParams& params, std::vector<long> k) { return kset_member(params, k); }

WeylVector minus(WeylVector x, const WeylVector& y) {
  for (const auto& [k, c] : y.coeffs()) x.add(k, -c);
  return x;
}

bool same(const WeylVector& x, const WeylVector& y) { return minus(x, y).coeffs().empty(); }

}  // namespace

TEST_CASE("kset membership") {
  CHECK(member(WeylParams({Scalar(0.5), Scalar(-0.3)}), {-7, 4}));
  CHECK_FALSE(member(WeylParams({Scalar(0), Scalar(-0.3)}), {-1, 4}));
  // a2 = 1 >= 0 requires a2 + k2 >= 0, violated by k2 = -2.
  CHECK_FALSE(member(WeylParams({Scalar(-2), Scalar(1)}), {1, -2}));
  CHECK(member(WeylParams({Scalar(-2), Scalar(1)}), {1, -1}));
  CHECK_FALSE(member(WeylParams({Scalar(-2), Scalar(1)}), {2, 0}));
}

TEST_CASE("Weyl generators on rank one") {
  WeylParams half({Scalar(0.5)});
  WeylVector q = weyl_act(WeylGen::q, 0, WeylVector::basis(half, {0}));
  CHECK(q.coeffs().size() == 1);
  CHECK(q.at({1}) == Scalar(1));

  WeylParams neg({Scalar(-2)});
  WeylVector qn = weyl_act(WeylGen::q, 0, WeylVector::basis(neg, {0}));
  CHECK(qn.at({1}) == Scalar(-1));

  WeylVector p = weyl_act(WeylGen::p, 0, WeylVector::basis(half, {0}));
  CHECK(approx_eq(p.at({-1}), Scalar(0.5)));

  // the negative-integer boundary: q x(1) for a = -2 has coefficient a + k + 1 = 0
  CHECK(weyl_act(WeylGen::q, 0, WeylVector::basis(neg, {1})).coeffs().empty());
  // p x(0) for a = 0 has coefficient a + k = 0
  CHECK(weyl_act(WeylGen::p, 0, WeylVector::basis(WeylParams({Scalar(0)}), {0})).coeffs().empty());
}

TEST_CASE("canonical commutation relations") {
  const std::vector<std::vector<Scalar>> samples = {
      {rat(1, 2), rat(-3, 10)}, {Scalar(-2), Scalar(1)}, {Scalar(0), Scalar(-4)}, {rat(-7, 3), Scalar(-1)}};
  for (const auto& a : samples) {
    WeylParams params(a);
    for (long k1 = -20; k1 <= 20; ++k1) {
      for (long k2 = -20; k2 <= 20; ++k2) {
        if (!kset_member(params, std::vector<long>{k1, k2})) continue;
        WeylVector v = WeylVector::basis(params, {k1, k2});
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) {
            WeylVector pq = weyl_act(WeylGen::p, i, weyl_act(WeylGen::q, j, v));
            WeylVector qp = weyl_act(WeylGen::q, j, weyl_act(WeylGen::p, i, v));
            WeylVector expect = i == j ? v : WeylVector(params);
            CHECK(same(minus(pq, qp), expect));
          }
        }
      }
    }
  }
}

TEST_CASE("sl2 embedding examples") {
  WeylParams params({Scalar(0.5), Scalar(-0.3)});
  WeylVector x0 = WeylVector::basis(params, {0, 0});
  WeylVector h = sl2_from_weyl(Sl2::H, x0);
  CHECK(approx_eq(h.at({0, 0}), Scalar(0.8)));
  WeylVector e = sl2_from_weyl(Sl2::E, x0);
  CHECK(e.coeffs().size() == 1);
  CHECK(approx_eq(e.at({1, -1}), Scalar(-0.3)));
}

TEST_CASE("sl2 relations through the embedding") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 6), idx(-20, 20);
  for (int trial = 0; trial < 10; ++trial) {
    WeylParams params({rat(num(rng), den(rng)), rat(num(rng), den(rng))});
    WeylVector v(params);
    for (int t = 0; t < 5; ++t) {
      long k = idx(rng);
      if (kset_member(params, weyl_index(k))) v.add(weyl_index(k), rat(num(rng), den(rng)));
    }
    auto apply = [&](Sl2 x, const WeylVector& w) { return sl2_from_weyl(x, w); };
    WeylVector ef = minus(apply(Sl2::E, apply(Sl2::F, v)), apply(Sl2::F, apply(Sl2::E, v)));
    CHECK(same(ef, apply(Sl2::H, v)));
    WeylVector he = minus(apply(Sl2::H, apply(Sl2::E, v)), apply(Sl2::E, apply(Sl2::H, v)));
    WeylVector e2 = apply(Sl2::E, v);
    CHECK(same(he, minus(e2, minus(WeylVector(params), e2))));
    WeylVector f = apply(Sl2::F, v);
    for (const auto& [kk, c] : f.coeffs()) CHECK(kk[0] + kk[1] == 0);
  }
}

TEST_CASE("embedding reproduces the case I display") {
  // H x(k) = (a1 - a2 + 2k) x(k), E x(k) = (a2 - k) x(k + 1), F x(k) = (a1 + k) x(k - 1)
  const Scalar a1 = rat(3, 7), a2 = rat(-11, 5);
  ModuleSpec spec(a1, a2);
  for (long k = -20; k <= 20; ++k) {
    WeylVector v = to_weyl(WeightVector::basis(spec, k));
    WeightVector h = from_weyl(sl2_from_weyl(Sl2::H, v), spec);
    WeightVector e = from_weyl(sl2_from_weyl(Sl2::E, v), spec);
    WeightVector f = from_weyl(sl2_from_weyl(Sl2::F, v), spec);
    CHECK(h.at(k) == a1 - a2 + Scalar(2 * k));
    CHECK(e.at(k + 1) == a2 - Scalar(k));
    CHECK(f.at(k - 1) == a1 + Scalar(k));
  }
}

TEST_CASE("index identification matches weight_modules in every case") {
  const std::vector<std::pair<Scalar, Scalar>> samples = {
      {rat(1, 2), rat(-3, 10)}, {rat(5, 3), Scalar(-2)}, {Scalar(-3), rat(1, 4)},
      {Scalar(-2), Scalar(-4)}, {Scalar(2), Scalar(0)},  {Scalar(-4), Scalar(3)}};
  for (const auto& [a1, a2] : samples) {
    ModuleSpec spec(a1, a2);
    for (long k = -20; k <= 20; ++k) {
      if (!spec.contains(k)) continue;
      WeightVector v = WeightVector::basis(spec, k);
      for (Sl2 x : {Sl2::H, Sl2::E, Sl2::F}) {
        CHECK(approx_eq(act(x, v), from_weyl(sl2_from_weyl(x, to_weyl(v)), spec)));
      }
    }
  }
}
