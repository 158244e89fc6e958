#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weightlab/weight_module.hpp"

namespace weightlab {

// A: generic, B: a in Z<0, C: a2 in Z<0 (with a1 = 0), D: both.
enum class TensorCase { A, B, C, D };

const char* tensor_case_name(TensorCase c);

// N(a1, a2) (x) N(a, 0); z(k, l) = x(k) (x) x(-l).
class TensorSpec {
 public:
  TensorSpec(ModuleSpec left, Scalar a);

  const ModuleSpec& left() const { return left_; }
  const ModuleSpec& right() const { return right_; }
  const Scalar& a1() const { return left_.a1(); }
  const Scalar& a2() const { return left_.a2(); }
  const Scalar& a() const { return right_.a1(); }
  const Tolerance& tol() const { return left_.tol(); }
  TensorCase tensor_case() const { return case_; }
  Scalar s() const { return a() + a1() + a2(); }
  // weight of z(k, l)
  Scalar weight(long k, long l) const;
  // weight of z(0, 0)
  Scalar base_weight() const { return weight(0, 0); }
  bool contains(long k, long l) const;

  std::string to_string() const;

 private:
  ModuleSpec left_;
  ModuleSpec right_;
  TensorCase case_;
};

using TensorIndex = std::pair<long, long>;

class TensorState {
 public:
  explicit TensorState(TensorSpec spec) : spec_(std::move(spec)) {}
  static TensorState basis(const TensorSpec& spec, long k, long l);

  const TensorSpec& spec() const { return spec_; }
  const std::map<TensorIndex, Scalar>& coeffs() const { return coeffs_; }
  Scalar at(long k, long l) const;
  void add(long k, long l, const Scalar& c);

 private:
  TensorSpec spec_;
  std::map<TensorIndex, Scalar> coeffs_;
};

TensorState act_tensor(Sl2 x, const TensorState& v);

double log_tensor_norm_sq(const TensorSpec& spec, long k, long l);
double tensor_norm_sq(const TensorSpec& spec, long k, long l);
// log ||z(k0 + j, l0 + j)||^2 for j = 0 .. count-1, built step by step.
std::vector<double> diagonal_log_norms(const TensorSpec& spec, long k0, long l0, long count);

// FE z(k,l) = a z(k-1,l-1) + b z(k,l) + c z(k+1,l+1)
struct FECoefficients {
  Scalar a, b, c;
};

// FE on the weight space spanned by z_j = z(l0 + n0 + j, l0 + j), j >= 0.
class TridiagonalFE {
 public:
  TridiagonalFE(TensorSpec spec, long n0);

  const TensorSpec& spec() const { return spec_; }
  long n0() const { return n0_; }
  long l0() const { return l0_; }
  TensorIndex index(long j) const { return {l0_ + n0_ + j, l0_ + j}; }
  FECoefficients at(long j) const;

 private:
  TensorSpec spec_;
  long n0_;
  long l0_;
};

inline TridiagonalFE fe_tridiagonal(const TensorSpec& spec, long n0) { return TridiagonalFE(spec, n0); }

// True when z_0, FE z_0, ..., (FE)^M z_0 are linearly independent.
bool cyclicity_witness(const TensorSpec& spec, long n0, long M);

// Smallest |c_{d-1} v_{d-1}| over unit eigenvectors v of the d x d truncation of FE.
// A finitely supported eigenvector of FE would make this vanish.
double finite_eigenvector_residual(const TensorSpec& spec, long n0, long d);

struct QuotientWitness {
  long n0;
  long target_index;
  Scalar chi;
};

QuotientWitness quotient_witness(const TensorSpec& spec, const ModuleSpec& target);

// Gaussian elimination rank; exact scalars are reduced exactly.
long matrix_rank(std::vector<std::vector<Scalar>> rows, const Tolerance& tol = {});

}  // namespace weightlab
