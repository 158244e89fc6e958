#include "weightlab/xi_grid.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "weightlab/asymptotics.hpp"
#include "weightlab/hypergeometric.hpp"

namespace weightlab {

XiSample scan_xi_point(const TensorSpec& spec, double xi, long N) {
  const long top = 4 * N;
  std::vector<Complex> u = cs_recurrence(spec, xi, top + 1);
  const Complex s = spec.s().value();
  CSCandidate cand{spec, xi};
  auto [ap, am] = indicial_exponents(s, cand.mu());

  const std::array<Complex, 4> exps = {ap, ap - 1.0, am, am - 1.0};
  const long rows = top - N + 1;
  Eigen::MatrixXcd A(rows, 4);
  Eigen::VectorXcd b(rows);
  const double logN = std::log(double(N));
  for (long i = 0; i < rows; ++i) {
    double x = std::log(double(N + i)) - logN;
    for (int j = 0; j < 4; ++j) A(i, j) = std::exp(exps[j] * x);
    b(i) = u[N + i];
  }
  Eigen::VectorXcd c = A.colPivHouseholderQr().solve(b);

  XiSample out;
  out.xi = xi;
  out.amplitude = c(0) / std::abs(u[N]);
  out.tail_exponent =
      fit_tail([&](long n) { return std::log(std::norm(u[n])) + (2.0 + s.real()) * std::log(double(n)); }, N)
          .exponent;
  return out;
}

std::vector<XiSample> scan_xi_grid_serial(const TensorSpec& spec, const std::vector<double>& grid, long N) {
  std::vector<XiSample> out;
  out.reserve(grid.size());
  for (double xi : grid) out.push_back(scan_xi_point(spec, xi, N));
  return out;
}

std::vector<XiSample> scan_xi_grid(const TensorSpec& spec, const std::vector<double>& grid, long N) {
  std::vector<XiSample> out(grid.size());
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = scan_xi_point(spec, grid[i], N);
  return out;
}

std::vector<double> make_xi_grid(const TensorSpec& spec, const XiGridOptions& opts,
                                 const std::vector<double>& refine_at) {
  XiWindows w = xi_windows(spec);
  std::vector<double> grid;
  const double h = (w.comp_hi - w.comp_lo) / opts.points;
  for (long i = 0; i < opts.points; ++i) grid.push_back(w.comp_lo + (i + 0.5) * h);
  for (double x : refine_at) {
    for (long i = -opts.refine_points / 2; i <= opts.refine_points / 2; ++i) {
      double y = x + opts.refine_radius * 2.0 * i / opts.refine_points;
      if (y > w.comp_lo && y < w.comp_hi) grid.push_back(y);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<double> oracle_members(const std::vector<XiSample>& samples, bool real_amplitude) {
  std::vector<double> out;
  if (real_amplitude) {
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      double f0 = samples[i].amplitude.real(), f1 = samples[i + 1].amplitude.real();
      if (f0 == 0.0) {
        out.push_back(samples[i].xi);
      } else if (f0 * f1 < 0.0) {
        double t = f0 / (f0 - f1);
        out.push_back(samples[i].xi + t * (samples[i + 1].xi - samples[i].xi));
      }
    }
    return out;
  }
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    double m = std::abs(samples[i].amplitude);
    if (m < 1e-3 && m <= std::abs(samples[i - 1].amplitude) && m <= std::abs(samples[i + 1].amplitude)) {
      out.push_back(samples[i].xi);
    }
  }
  return out;
}

std::vector<double> predicted_members(const TensorSpec& spec, const std::vector<SubmoduleDescriptor>& entries) {
  const Tolerance& tol = spec.tol();
  const XiWindows w = xi_windows(spec);
  const Scalar w0 = spec.base_weight();
  std::vector<ModuleSpec> modules;
  for (const auto& d : entries) {
    if (d.kind == EntryKind::HighestWeightLattice) {
      for (long n = 0; n <= d.n0; ++n) modules.emplace_back(d.b1 - Scalar(2 * (d.n0 - n)), Scalar(0), tol);
    } else {
      modules.push_back(d.module(tol));
    }
  }
  std::vector<double> out;
  for (const auto& m : modules) {
    if (!support(m).contains(w0, tol)) continue;
    Scalar chi = casimir_scalar(m) - w0 * w0 / Scalar(4) - w0 / Scalar(2);
    double x = chi.real();
    if (x > w.comp_lo && x < w.comp_hi) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> principal_tail_exponents_serial(const TensorSpec& spec, const std::vector<double>& xis, long N) {
  std::vector<double> out;
  out.reserve(xis.size());
  for (double xi : xis) out.push_back(principal_tail_exponent(spec, xi, N));
  return out;
}

std::vector<double> principal_tail_exponents(const TensorSpec& spec, const std::vector<double>& xis, long N) {
  std::vector<double> out(xis.size());
  const long n = static_cast<long>(xis.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = principal_tail_exponent(spec, xis[i], N);
  return out;
}

}  // namespace weightlab
