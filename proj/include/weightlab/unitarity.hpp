#pragma once

#include <optional>
#include <string>

#include "weightlab/weight_module.hpp"

namespace weightlab {

enum class Series { Principal, Complementary, HighestWeight, LowestWeight, Trivial, NotUnitarizable };

const char* series_name(Series s);

struct SeriesLabel {
  Series kind = Series::NotUnitarizable;
  // Principal: N(-1-x+iy, x+iy) with -1 <= x < 0, y > 0.
  double x = 0.0;
  double y = 0.0;
  // Complementary: N(b1, b2) with -1 < b1, b2 < 0.
  Scalar b1, b2;
  // Discrete series: N(-lambda, 0) or N(0, -lambda).
  Scalar lambda;
  // Set when a float decision fell within tolerance of a branch boundary.
  bool boundary = false;

  bool unitarizable() const { return kind != Series::NotUnitarizable; }
  std::optional<ModuleSpec> canonical(const Tolerance& tol = {}) const;
  std::string to_string() const;
};

SeriesLabel classify(const ModuleSpec& spec);
inline SeriesLabel classify(const Scalar& a1, const Scalar& a2, const Tolerance& tol = {}) {
  return classify(ModuleSpec(a1, a2, tol));
}

// Index where the closed-form norm is normalised to 1.
long anchor_index(const ModuleSpec& spec);
double log_norm_sq(const ModuleSpec& spec, long k);
double norm_sq(const ModuleSpec& spec, long k);
// log ||x(k+1)||^2 - log ||x(k)||^2 from the same closed form.
double log_norm_step(const ModuleSpec& spec, long k);

// Largest relative violation of <F x(k+1), x(k)> = -<x(k+1), E x(k)> over |k| <= K,
// plus the largest imaginary part of an H eigenvalue.
double verify_skew_adjoint(const ModuleSpec& spec, long K);

// max |A - A^*| for A = Omega - (E - F)^2 / 2 on the orthonormal truncation |k| <= K.
double nelson_asymmetry(const ModuleSpec& spec, long K);

}  // namespace weightlab
