#include "weightlab/tensor.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "weightlab/unitarity.hpp"

namespace weightlab {

const char* tensor_case_name(TensorCase c) {
  switch (c) {
    case TensorCase::A: return "A";
    case TensorCase::B: return "B";
    case TensorCase::C: return "C";
    case TensorCase::D: return "D";
  }
  return "?";
}

TensorSpec::TensorSpec(ModuleSpec left, Scalar a)
    : left_(std::move(left)), right_(std::move(a), Scalar(0), left_.tol()) {
  bool b = is_negative_integer(this->a(), tol());
  bool c = is_negative_integer(a2(), tol());
  case_ = b ? (c ? TensorCase::D : TensorCase::B) : (c ? TensorCase::C : TensorCase::A);
}

Scalar TensorSpec::weight(long k, long l) const { return left_.weight(k) + right_.weight(-l); }

bool TensorSpec::contains(long k, long l) const { return left_.contains(k) && right_.contains(-l); }

std::string TensorSpec::to_string() const {
  return left_.to_string() + " (x) " + right_.to_string();
}

TensorState TensorState::basis(const TensorSpec& spec, long k, long l) {
  TensorState v(spec);
  v.add(k, l, Scalar(1));
  return v;
}

Scalar TensorState::at(long k, long l) const {
  auto it = coeffs_.find({k, l});
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void TensorState::add(long k, long l, const Scalar& c) {
  if (!spec_.contains(k, l)) {
    throw Error(ErrorCode::MalformedState,
                "z(" + std::to_string(k) + ", " + std::to_string(l) + ") outside " + spec_.to_string());
  }
  auto [it, inserted] = coeffs_.emplace(TensorIndex{k, l}, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

namespace {

bool lands(const ModuleSpec& m, Sl2 x, long k, const Scalar& coef) {
  if (m.contains(k + shift(x))) return !coef.is_zero();
  if (!approx_eq(coef, Scalar(0), m.tol())) {
    throw Error(ErrorCode::IndexOutOfSupport, "nonzero coefficient leaves the index set");
  }
  return false;
}

}  // namespace

TensorState act_tensor(Sl2 x, const TensorState& v) {
  const TensorSpec& spec = v.spec();
  TensorState out(spec);
  for (const auto& [kl, c] : v.coeffs()) {
    auto [k, l] = kl;
    Scalar cl = spec.left().coefficient(x, k);
    if (lands(spec.left(), x, k, cl)) out.add(k + shift(x), l, cl * c);
    Scalar cr = spec.right().coefficient(x, -l);
    if (lands(spec.right(), x, -l, cr)) out.add(k, l - shift(x), cr * c);
  }
  return out;
}

double log_tensor_norm_sq(const TensorSpec& spec, long k, long l) {
  return log_norm_sq(spec.left(), k) + log_norm_sq(spec.right(), -l);
}

double tensor_norm_sq(const TensorSpec& spec, long k, long l) {
  return std::exp(log_tensor_norm_sq(spec, k, l));
}

std::vector<double> diagonal_log_norms(const TensorSpec& spec, long k0, long l0, long count) {
  std::vector<double> out;
  out.reserve(count);
  if (count <= 0) return out;
  double cur = log_tensor_norm_sq(spec, k0, l0);
  for (long j = 0; j < count; ++j) {
    out.push_back(cur);
    long k = k0 + j, l = l0 + j;
    cur += log_norm_step(spec.left(), k) - log_norm_step(spec.right(), -l - 1);
  }
  return out;
}

TridiagonalFE::TridiagonalFE(TensorSpec spec, long n0) : spec_(std::move(spec)), n0_(n0), l0_(0) {
  const IndexRange& r = spec_.left().index_range();
  if (r.lo) l0_ = std::max(0L, *r.lo - n0_);
  if (!spec_.contains(l0_ + n0_, l0_)) {
    throw Error(ErrorCode::OutOfRange, "weight space n0 = " + std::to_string(n0) + " is empty");
  }
}

FECoefficients TridiagonalFE::at(long j) const {
  if (j < 0) throw Error(ErrorCode::OutOfRange, "negative position in the weight space");
  auto [k, l] = index(j);
  TensorState v = act_tensor(Sl2::F, act_tensor(Sl2::E, TensorState::basis(spec_, k, l)));
  for (const auto& [kl, c] : v.coeffs()) {
    if (kl.first - kl.second != n0_) throw Error(ErrorCode::MalformedState, "FE left the weight space");
  }
  return {v.at(k - 1, l - 1), v.at(k, l), v.at(k + 1, l + 1)};
}

long matrix_rank(std::vector<std::vector<Scalar>> rows, const Tolerance& tol) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (auto& row : rows) {
    // scale float rows to unit max so the pivot threshold is relative
    double m = 0.0;
    bool exact = true;
    for (const auto& x : row) {
      m = std::max(m, x.abs());
      exact = exact && x.is_exact();
    }
    if (!exact && m > 0.0) {
      for (auto& x : row) x = x / Scalar(m);
    }
  }
  long rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col].abs() > rows[best][col].abs()) best = i;
    }
    const Scalar& p = rows[best][col];
    bool zero = p.is_exact() ? p.is_zero() : p.abs() <= tol.rel_eps;
    if (zero) continue;
    std::swap(rows[r], rows[best]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col] / rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[i][c] -= f * rows[r][c];
    }
    ++r;
    ++rank;
  }
  return rank;
}

bool cyclicity_witness(const TensorSpec& spec, long n0, long M) {
  TridiagonalFE fe(spec, n0);
  auto [k0, l0] = fe.index(0);
  TensorState v = TensorState::basis(spec, k0, l0);
  std::vector<std::vector<Scalar>> rows;
  for (long m = 0; m <= M; ++m) {
    std::vector<Scalar> row(M + 1);
    for (long j = 0; j <= M; ++j) {
      auto [k, l] = fe.index(j);
      row[j] = v.at(k, l);
    }
    rows.push_back(std::move(row));
    v = act_tensor(Sl2::F, act_tensor(Sl2::E, v));
  }
  return matrix_rank(std::move(rows), spec.tol()) == M + 1;
}

double finite_eigenvector_residual(const TensorSpec& spec, long n0, long d) {
  TridiagonalFE fe(spec, n0);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(d, d);
  Complex last_c = 0.0;
  for (long j = 0; j < d; ++j) {
    FECoefficients co = fe.at(j);
    T(j, j) = co.b.value();
    if (j > 0) T(j - 1, j) = co.a.value();
    if (j + 1 < d) T(j + 1, j) = co.c.value();
    else last_c = co.c.value();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(T);
  double worst = std::numeric_limits<double>::infinity();
  for (long i = 0; i < d; ++i) {
    Eigen::VectorXcd v = solver.eigenvectors().col(i);
    v.normalize();
    worst = std::min(worst, std::abs(last_c * v(d - 1)));
  }
  return worst;
}

QuotientWitness quotient_witness(const TensorSpec& spec, const ModuleSpec& target) {
  const IndexRange& r = target.index_range();
  if (r.empty()) throw Error(ErrorCode::SupportMismatch, "empty target module");
  long kt = 0;
  if (!r.contains(0)) kt = (r.lo && *r.lo > 0) ? *r.lo : *r.hi;
  Scalar wt = target.weight(kt);
  auto n0 = as_integer((wt - spec.base_weight()) / Scalar(2), spec.tol());
  if (!n0) throw Error(ErrorCode::SupportMismatch, "target support is not inside the tensor support");
  Scalar chi = casimir_scalar(target) - wt * wt / Scalar(4) - wt / Scalar(2);
  return {*n0, kt, chi};
}

}  // namespace weightlab
