#include "weightlab/weyl.hpp"

namespace weightlab {

WeylParams::WeylParams(std::vector<Scalar> a_, Tolerance tol_) : a(std::move(a_)), tol(tol_) {
  for (const auto& x : a) neg_int.push_back(is_negative_integer(x, tol));
}

bool kset_member(const WeylParams& params, std::span<const long> k) {
  if (k.size() != params.rank()) return false;
  for (std::size_t i = 0; i < k.size(); ++i) {
    auto n = as_integer(params.a[i], params.tol);
    if (!n) continue;
    if ((*n + k[i] < 0) != (*n < 0)) return false;
  }
  return true;
}

WeylVector WeylVector::basis(const WeylParams& params, const MultiIndex& k) {
  WeylVector v(params);
  v.add(k, Scalar(1));
  return v;
}

Scalar WeylVector::at(const MultiIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void WeylVector::add(const MultiIndex& k, const Scalar& c) {
  if (!kset_member(params_, k)) throw Error(ErrorCode::MalformedVector, "multi-index outside K(a)");
  auto [it, inserted] = coeffs_.emplace(k, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

WeylVector weyl_act(WeylGen g, std::size_t i, const WeylVector& v) {
  const WeylParams& params = v.params();
  if (i >= params.rank()) throw Error(ErrorCode::OutOfRange, "generator index");
  WeylVector out(params);
  for (const auto& [k, c] : v.coeffs()) {
    MultiIndex target = k;
    Scalar coef;
    Scalar aik = params.a[i] + Scalar(k[i]);
    if (g == WeylGen::q) {
      target[i] += 1;
      coef = params.neg_int[i] ? aik + Scalar(1) : Scalar(1);
    } else {
      target[i] -= 1;
      coef = params.neg_int[i] ? Scalar(1) : aik;
    }
    if (!kset_member(params, target)) {
      if (!approx_eq(coef, Scalar(0), params.tol)) {
        throw Error(ErrorCode::IndexOutOfSupport, "nonzero coefficient leaves K(a)");
      }
      continue;
    }
    if (coef.is_zero()) continue;
    out.add(target, coef * c);
  }
  return out;
}

namespace {

WeylVector sum(WeylVector x, const WeylVector& y, const Scalar& scale) {
  for (const auto& [k, c] : y.coeffs()) x.add(k, scale * c);
  return x;
}

}  // namespace

WeylVector sl2_from_weyl(Sl2 x, const WeylVector& v) {
  if (v.params().rank() != 2) throw Error(ErrorCode::OutOfRange, "sl2 embedding needs rank 2");
  switch (x) {
    case Sl2::E: return weyl_act(WeylGen::q, 0, weyl_act(WeylGen::p, 1, v));
    case Sl2::F: return weyl_act(WeylGen::q, 1, weyl_act(WeylGen::p, 0, v));
    case Sl2::H:
      return sum(weyl_act(WeylGen::q, 0, weyl_act(WeylGen::p, 0, v)),
                 weyl_act(WeylGen::q, 1, weyl_act(WeylGen::p, 1, v)), Scalar(-1));
  }
  return v;
}

MultiIndex weyl_index(long k) { return {k, -k}; }

WeylVector to_weyl(const WeightVector& v) {
  WeylVector out(WeylParams({v.spec().a1(), v.spec().a2()}, v.spec().tol()));
  for (const auto& [k, c] : v.coeffs()) out.add(weyl_index(k), c);
  return out;
}

WeightVector from_weyl(const WeylVector& v, const ModuleSpec& spec) {
  WeightVector out(spec);
  for (const auto& [k, c] : v.coeffs()) {
    if (k.size() != 2 || k[0] + k[1] != 0) {
      throw Error(ErrorCode::MalformedVector, "vector leaves the k1 + k2 = 0 slice");
    }
    out.add(k[0], c);
  }
  return out;
}

}  // namespace weightlab
