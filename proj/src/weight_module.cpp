#include "weightlab/weight_module.hpp"

#include <algorithm>
#include <sstream>

namespace weightlab {

const char* module_case_name(ModuleCase c) {
  switch (c) {
    case ModuleCase::I: return "I";
    case ModuleCase::II: return "II";
    case ModuleCase::III: return "III";
    case ModuleCase::IV: return "IV";
  }
  return "?";
}

std::optional<long> IndexRange::size() const {
  if (!finite()) return std::nullopt;
  return std::max(0L, *hi - *lo + 1);
}

namespace {

// If a_i is an integer then a_i + sign*k < 0 iff a_i < 0.
void constrain(IndexRange& r, const Scalar& a, int sign, const Tolerance& tol) {
  auto n = as_integer(a, tol);
  if (!n) return;
  // sign*k < -n  or  sign*k >= -n
  if (sign > 0) {
    if (*n < 0) r.hi = r.hi ? std::min(*r.hi, -*n - 1) : -*n - 1;
    else r.lo = r.lo ? std::max(*r.lo, -*n) : -*n;
  } else {
    if (*n < 0) r.lo = r.lo ? std::max(*r.lo, *n + 1) : *n + 1;
    else r.hi = r.hi ? std::min(*r.hi, *n) : *n;
  }
}

}  // namespace

ModuleSpec::ModuleSpec(Scalar a1, Scalar a2, Tolerance tol)
    : a1_(std::move(a1)), a2_(std::move(a2)), tol_(tol) {
  bool n1 = is_negative_integer(a1_, tol_);
  bool n2 = is_negative_integer(a2_, tol_);
  case_ = n1 ? (n2 ? ModuleCase::IV : ModuleCase::III) : (n2 ? ModuleCase::II : ModuleCase::I);
  constrain(range_, a1_, +1, tol_);
  constrain(range_, a2_, -1, tol_);
}

int shift(Sl2 x) {
  switch (x) {
    case Sl2::H: return 0;
    case Sl2::E: return 1;
    case Sl2::F: return -1;
  }
  return 0;
}

Scalar ModuleSpec::weight(long k) const { return a1_ - a2_ + Scalar(2 * k); }

Scalar ModuleSpec::coefficient(Sl2 x, long k) const {
  const Scalar K(k);
  if (x == Sl2::H) return weight(k);
  if (x == Sl2::E) {
    switch (case_) {
      case ModuleCase::I: return a2_ - K;
      case ModuleCase::II: return Scalar(1);
      case ModuleCase::III: return (a1_ + K + Scalar(1)) * (a2_ - K);
      case ModuleCase::IV: return a1_ + K + Scalar(1);
    }
  }
  switch (case_) {
    case ModuleCase::I: return a1_ + K;
    case ModuleCase::II: return (a1_ + K) * (a2_ - K + Scalar(1));
    case ModuleCase::III: return Scalar(1);
    case ModuleCase::IV: return a2_ - K + Scalar(1);
  }
  return Scalar(0);
}

std::string ModuleSpec::to_string() const {
  return "N(" + a1_.to_string() + ", " + a2_.to_string() + ")";
}

WeightVector WeightVector::basis(const ModuleSpec& spec, long k) {
  WeightVector v(spec);
  v.add(k, Scalar(1));
  return v;
}

Scalar WeightVector::at(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void WeightVector::add(long k, const Scalar& c) {
  if (!spec_.contains(k)) {
    throw Error(ErrorCode::MalformedVector, "index " + std::to_string(k) + " outside " + spec_.to_string());
  }
  auto [it, inserted] = coeffs_.emplace(k, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

WeightVector& WeightVector::operator*=(const Scalar& c) {
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

WeightVector act(Sl2 x, const WeightVector& v) {
  const ModuleSpec& spec = v.spec();
  WeightVector out(spec);
  for (const auto& [k, c] : v.coeffs()) {
    if (!spec.contains(k)) throw Error(ErrorCode::MalformedVector, "support violates index set");
    Scalar coef = spec.coefficient(x, k);
    long target = k + shift(x);
    if (!spec.contains(target)) {
      // the formulas vanish at the boundary of the index set
      if (!approx_eq(coef, Scalar(0), spec.tol())) {
        throw Error(ErrorCode::IndexOutOfSupport, "nonzero coefficient leaves the index set");
      }
      continue;
    }
    if (coef.is_zero()) continue;
    out.add(target, coef * c);
  }
  return out;
}

Scalar casimir_scalar(const ModuleSpec& spec) {
  Scalar h = (spec.a1() + spec.a2()) / Scalar(2);
  return h * (Scalar(1) + h);
}

WeightVector apply_casimir(const WeightVector& v) {
  WeightVector h = act(Sl2::H, v);
  WeightVector hh = act(Sl2::H, h);
  WeightVector out = act(Sl2::F, act(Sl2::E, v));
  hh *= Scalar::ratio(1, 4);
  h *= Scalar::ratio(1, 2);
  out += hh;
  out += h;
  return out;
}

SupportDescriptor support(const ModuleSpec& spec) {
  const IndexRange& r = spec.index_range();
  if (r.finite()) return {spec.weight(*r.lo), SupportKind::Finite, *r.size()};
  if (r.hi) return {spec.weight(*r.hi), SupportKind::Down, 0};
  if (r.lo) return {spec.weight(*r.lo), SupportKind::Up, 0};
  return {spec.weight(0), SupportKind::Full, 0};
}

bool SupportDescriptor::contains(const Scalar& weight, const Tolerance& tol) const {
  Scalar m = (weight - base) / Scalar(2);
  auto n = as_integer(m, tol);
  if (!n) return false;
  switch (kind) {
    case SupportKind::Full: return true;
    case SupportKind::Down: return *n <= 0;
    case SupportKind::Up: return *n >= 0;
    case SupportKind::Finite: return *n >= 0 && *n < count;
  }
  return false;
}

std::string SupportDescriptor::to_string() const {
  std::ostringstream os;
  os << base.to_string();
  switch (kind) {
    case SupportKind::Full: os << " + 2Z"; break;
    case SupportKind::Down: os << " + 2Z<=0"; break;
    case SupportKind::Up: os << " + 2Z>=0"; break;
    case SupportKind::Finite: os << " + 2{0.." << count - 1 << "}"; break;
  }
  return os.str();
}

bool approx_eq(const WeightVector& x, const WeightVector& y, const Tolerance& tol) {
  for (const auto& [k, c] : x.coeffs()) {
    if (!approx_eq(c, y.at(k), tol)) return false;
  }
  for (const auto& [k, c] : y.coeffs()) {
    if (!approx_eq(c, x.at(k), tol)) return false;
  }
  return true;
}

}  // namespace weightlab
