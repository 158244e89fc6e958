#pragma once

#include <vector>

#include "weightlab/spectrum.hpp"

namespace weightlab {

struct XiSample {
  double xi = 0.0;
  // Coefficient of the dominant power n^{alpha+} in the recurrence solution,
  // relative to |u_N|. The solution is square-summable exactly when it vanishes.
  Complex amplitude = 0.0;
  // Fitted exponent of |u_n|^2 n^{2 + Re s} over [N, 4N].
  double tail_exponent = 0.0;
};

XiSample scan_xi_point(const TensorSpec& spec, double xi, long N);

std::vector<XiSample> scan_xi_grid_serial(const TensorSpec& spec, const std::vector<double>& grid, long N);
std::vector<XiSample> scan_xi_grid(const TensorSpec& spec, const std::vector<double>& grid, long N);

struct XiGridOptions {
  long N = 512;
  long points = 400;
  long refine_points = 40;
  double refine_radius = 1e-3;
};

// Uniform grid over the open complementary window, plus refinement around each
// point of refine_at that lies inside the window. Sorted.
std::vector<double> make_xi_grid(const TensorSpec& spec, const XiGridOptions& opts,
                                 const std::vector<double>& refine_at = {});

// Estimated xi of square-summable solutions: sign changes of the dominant
// amplitude (real s) or near-zero local minima of its modulus (complex s).
std::vector<double> oracle_members(const std::vector<XiSample>& samples, bool real_amplitude);

// FE eigenvalues on the z(0, 0) weight space coming from the listed submodules,
// restricted to the open complementary window.
std::vector<double> predicted_members(const TensorSpec& spec, const std::vector<SubmoduleDescriptor>& entries);

std::vector<double> principal_tail_exponents_serial(const TensorSpec& spec, const std::vector<double>& xis, long N);
std::vector<double> principal_tail_exponents(const TensorSpec& spec, const std::vector<double>& xis, long N);

}  // namespace weightlab
