#pragma once

#include <map>
#include <optional>
#include <string>

#include "weightlab/scalar.hpp"

namespace weightlab {

enum class Sl2 { H, E, F };

// Which of a1, a2 is a negative integer: I neither, II a2, III a1, IV both.
enum class ModuleCase { I, II, III, IV };

const char* module_case_name(ModuleCase c);

struct IndexRange {
  std::optional<long> lo;
  std::optional<long> hi;

  bool contains(long k) const { return (!lo || k >= *lo) && (!hi || k <= *hi); }
  bool empty() const { return lo && hi && *lo > *hi; }
  bool finite() const { return lo && hi; }
  std::optional<long> size() const;
};

class ModuleSpec {
 public:
  ModuleSpec(Scalar a1, Scalar a2, Tolerance tol = {});

  const Scalar& a1() const { return a1_; }
  const Scalar& a2() const { return a2_; }
  const Tolerance& tol() const { return tol_; }
  ModuleCase module_case() const { return case_; }
  const IndexRange& index_range() const { return range_; }
  bool contains(long k) const { return range_.contains(k); }
  bool is_exact() const { return a1_.is_exact() && a2_.is_exact(); }

  // X x(k) = coefficient(X, k) x(k + shift(X)).
  Scalar coefficient(Sl2 x, long k) const;
  Scalar weight(long k) const;

  std::string to_string() const;

 private:
  Scalar a1_, a2_;
  Tolerance tol_;
  ModuleCase case_;
  IndexRange range_;
};

int shift(Sl2 x);

class WeightVector {
 public:
  explicit WeightVector(ModuleSpec spec) : spec_(std::move(spec)) {}
  static WeightVector basis(const ModuleSpec& spec, long k);

  const ModuleSpec& spec() const { return spec_; }
  const std::map<long, Scalar>& coeffs() const { return coeffs_; }
  Scalar at(long k) const;
  void add(long k, const Scalar& c);

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator*=(const Scalar& c);

 private:
  ModuleSpec spec_;
  std::map<long, Scalar> coeffs_;
};

WeightVector act(Sl2 x, const WeightVector& v);
WeightVector apply_casimir(const WeightVector& v);
Scalar casimir_scalar(const ModuleSpec& spec);

// Weights are base + 2m with m ranging over the direction's lattice.
enum class SupportKind { Full, Down, Up, Finite };

struct SupportDescriptor {
  Scalar base;
  SupportKind kind;
  long count = 0;  // only for Finite: weights base, base + 2, ..., base + 2(count - 1)

  bool contains(const Scalar& weight, const Tolerance& tol = {}) const;
  std::string to_string() const;
};

SupportDescriptor support(const ModuleSpec& spec);

bool approx_eq(const WeightVector& x, const WeightVector& y, const Tolerance& tol = {});

}  // namespace weightlab
