#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gft/params.hpp"
#include "gft/report.hpp"
#include "gft/weights.hpp"

namespace gft {

std::vector<std::complex<double>> boundary_z_grid(int n = 72);
std::vector<std::complex<double>> unimodular_grid(int n = 16);
std::vector<double> log_t_grid(int n = 200, double lo = 1e-6,
                               double hi = 0.999);

// Dual functional behind the sharp-beta characterization:
//   gamma > 0: int_0^1 t^{delta/mu - 1} Pi(t)       h_{xi,delta,z}(t) dt
//   gamma = 0: int_0^1 t^{delta/alpha - 1} Lambda(t) h_{xi,delta,z}(t) dt
// evaluated on the (z, eps) grid; PASS if the grid minimum >= -tol. The
// eps-minimized closed lower bound is reported alongside (gamma > 0).
Report m_pi_check(const Params& p, const WeightSpec& w,
                  std::span<const std::complex<double>> z_grid,
                  std::span<const std::complex<double>> eps_grid,
                  const QuadratureConfig& cfg, double tol = 1e-6);

// Sufficient condition: D(t) = t^{(delta-1)/mu}
//   (delta (1-1/mu) Pi(t) - t Pi'(t)) / (log(1/t))^{1+2 xi}
// nonincreasing on the grid, with Pi' from the analytic identity
// Pi' = -Lambda t^{-delta/mu + delta/nu - 1}. gamma = 0 uses the
// Lambda/lambda counterpart with alpha in place of mu, nu.
Report decreasing_condition(const Params& p, const WeightSpec& w,
                            std::span<const double> t_grid,
                            const QuadratureConfig& cfg, double tol = 1e-9);

// Closed-form parameter regions, exact comparisons as printed.
Report general_beta_region_pos(const Params& p, double A, double B, double C);
Report general_beta_region_zero(const Params& p, double A, double B, double C);
Report hohlov_region(const Params& p, double a, double b, double c);
Report cs_region(const Params& p, double b, double c);
Report komatu_region(const Params& p, double k, double p_exp);

// The min{.,.} B-bounds, shared by the region checks and the sweep.
double general_beta_b_bound_pos(const Params& p);
double general_beta_b_bound_zero(const Params& p);

} // namespace gft
