#pragma once

#include <map>
#include <span>
#include <vector>

#include "weightlab/scalar.hpp"
#include "weightlab/weight_module.hpp"

namespace weightlab {

using MultiIndex = std::vector<long>;

struct WeylParams {
  std::vector<Scalar> a;
  std::vector<bool> neg_int;
  Tolerance tol;

  explicit WeylParams(std::vector<Scalar> a, Tolerance tol = {});
  std::size_t rank() const { return a.size(); }
};

bool kset_member(const WeylParams& params, std::span<const long> k);

enum class WeylGen { q, p };

class WeylVector {
 public:
  explicit WeylVector(WeylParams params) : params_(std::move(params)) {}
  static WeylVector basis(const WeylParams& params, const MultiIndex& k);

  const WeylParams& params() const { return params_; }
  const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
  Scalar at(const MultiIndex& k) const;
  void add(const MultiIndex& k, const Scalar& c);

 private:
  WeylParams params_;
  std::map<MultiIndex, Scalar> coeffs_;
};

WeylVector weyl_act(WeylGen g, std::size_t i, const WeylVector& v);

// E = q1 p2, F = q2 p1, H = q1 p1 - q2 p2 on the rank-two module.
WeylVector sl2_from_weyl(Sl2 x, const WeylVector& v);

// x(k) of N(a1, a2) sits at (k, -k).
MultiIndex weyl_index(long k);
WeylVector to_weyl(const WeightVector& v);
WeightVector from_weyl(const WeylVector& v, const ModuleSpec& spec);

}  // namespace weightlab
