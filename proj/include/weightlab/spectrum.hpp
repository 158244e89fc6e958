#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weightlab/tensor.hpp"
#include "weightlab/unitarity.hpp"

namespace weightlab {

// FE = xi on the weight space of z(0, 0), written through mu = xi - a2 (1 + a + a1).
struct CSCandidate {
  TensorSpec spec;
  Complex xi;

  Complex mu() const;
  Complex p() const;
  Complex discriminant() const;
  Complex r() const;
};

// xi for which the smaller root r takes the given value.
Complex xi_for_r(const TensorSpec& spec, Complex r);

struct XiWindows {
  double principal_max;  // principal range: xi <= principal_max
  double comp_lo;        // complementary range: comp_lo < xi < comp_hi
  double comp_hi;
};

XiWindows xi_windows(const TensorSpec& spec);

// Coefficients u_l of sum_l u_l z(l + n0, l) annihilated by E, starting at the
// first admissible l; nullopt when only the zero vector qualifies.
std::optional<std::vector<Scalar>> hw_coefficients(const TensorSpec& spec, long n0, long L);
// Same for F.
std::optional<std::vector<Scalar>> lw_coefficients(const TensorSpec& spec, long n0, long L);
// First l of the sums above.
long generator_start(const TensorSpec& spec, long n0);

enum class EntryKind { HighestWeight, HighestWeightLattice, LowestWeight, Complementary };
enum class GeneratorKind { HwRecurrence, LwRecurrence, CsHypergeometric, CsBinomial };

const char* entry_kind_name(EntryKind k);
const char* generator_kind_name(GeneratorKind k);

struct SubmoduleDescriptor {
  EntryKind kind = EntryKind::HighestWeight;
  // For a lattice this is the largest n0; the lattice runs over all n0' <= n0.
  long n0 = 0;
  // The submodule is N(b1, b2).
  Scalar b1, b2;
  // FE eigenvalue on the generator (complementary entries).
  Complex xi = 0.0;
  GeneratorKind generator = GeneratorKind::HwRecurrence;
  bool boundary = false;

  ModuleSpec module(const Tolerance& tol = {}) const { return ModuleSpec(b1, b2, tol); }
};

std::vector<SubmoduleDescriptor> hw_submodules(const TensorSpec& spec);
std::vector<SubmoduleDescriptor> lw_submodules(const TensorSpec& spec);
std::vector<SubmoduleDescriptor> cs_submodules(const TensorSpec& spec);

// Coefficients along the generator's diagonal, starting at generator_start for
// discrete entries and at z(0, 0) for complementary ones.
std::vector<Scalar> generator_coefficients(const TensorSpec& spec, const SubmoduleDescriptor& d, long count);

enum class ResidualRows { Interior, All };

// Relative V-norm of the defining residual of the generator truncated to K + 1
// terms. Interior drops the rows touched by the truncation boundary.
double generator_residual(const TensorSpec& spec, const SubmoduleDescriptor& d, long K,
                          ResidualRows rows = ResidualRows::Interior);

// log(|u_n|^2 ||z_n||^2) for n = 0 .. count-1 along the generator's diagonal.
std::vector<double> generator_log_terms(const TensorSpec& spec, const SubmoduleDescriptor& d, long count);

enum class Membership { Member, NotMember };

enum class MembershipReason {
  PrincipalRange,        // discriminant <= 0
  PolynomialTruncation,  // r - a or r - a2 in Z<=0
  HyperN,                // 1 + a1 + a - r or 1 + a1 + a2 - r in Z<=0
  RZero,                 // r = 0 with -1 < s < 0
  Generic,
};

struct MembershipResult {
  Membership verdict = Membership::NotMember;
  MembershipReason reason = MembershipReason::Generic;
  long n = 0;
};

MembershipResult cs_membership(const CSCandidate& cand);

struct SpectrumReport {
  Scalar a1, a2, a;
  SeriesLabel left;
  std::vector<SubmoduleDescriptor> entries;
  std::vector<std::string> diagnostics;
};

// Left factor must be principal, complementary or lowest weight; it is replaced
// by its canonical representative. Right factor N(a, 0) needs a < 0.
SpectrumReport full_spectrum(const ModuleSpec& left, const Scalar& a);
TensorSpec canonical_tensor(const ModuleSpec& left, const Scalar& a);

// Solution of the recurrence for FE = xi on the z(0, 0) weight space in the
// normalisation of the generic case, u_0 = 1.
std::vector<Complex> cs_recurrence(const TensorSpec& spec, Complex xi, long count);
// Same eigenproblem solved in the spec's own basis from the tridiagonal data.
std::vector<Scalar> fe_eigen_recurrence(const TensorSpec& spec, const Scalar& xi, long count);
// Taylor coefficients of (1 - t)^r 2F1(r - a, r - a2; 1 + a1; t).
std::vector<Complex> generating_function_coefficients(const CSCandidate& cand, long count);
// Relative residual of the ODE for S(t) = (1 - t)^r 2F1(...) at real t in (-1, 1).
double generating_function_ode_residual(const CSCandidate& cand, double t);

// Tail exponent of |u_n|^2 n^{2 + Re s} for a principal-range xi, measured on the
// non-oscillating envelope of the recurrence solution.
double principal_tail_exponent(const TensorSpec& spec, double xi, long N = 512);

struct SmoothResult {
  std::vector<double> exponents;  // fitted tail exponent for weights N = 0, 1, ...
  std::optional<int> diverges_at;
};

// Coefficients of w(k) on z(k + n, n), n = 0 .. count-1.
std::vector<Complex> smooth_vector_coefficients(const TensorSpec& spec, long k, long count);
SmoothResult smooth_membership(const TensorSpec& spec, long k, int max_weight = 3, long N = 512);
bool in_smooth_window(const TensorSpec& spec);

}  // namespace weightlab
