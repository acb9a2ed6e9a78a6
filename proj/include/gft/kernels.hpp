#pragma once

#include <complex>

#include "gft/params.hpp"
#include "gft/quadrature.hpp"

namespace gft {

struct KernelEval {
    std::complex<double> value;
    enum class Form { Series, DoubleIntegral } form = Form::Series;
    long terms_or_levels = 0;
};

// psi(z)     = sum_n delta^2 / ((delta + n mu)(delta + n nu)) z^n
// phi(z)     = (z psi)'  : coefficients (n+1) psi_n
// upsilon(z) = (z(z psi)')' : coefficients (n+1)^2 psi_n
// Series forms, |z| <= 1 - 1e-9. gamma = 0 uses the single-factor kernel.
KernelEval psi(const Params& p, std::complex<double> z);
KernelEval phi(const Params& p, std::complex<double> z);
KernelEval upsilon(const Params& p, std::complex<double> z);

// Double-integral cross-check of psi for gamma > 0 and real z:
// int int du dv / (1 - u^{nu/delta} v^{mu/delta} z).
KernelEval psi_integral(const Params& p, double z, const QuadratureConfig& cfg);

// (1 - 1/delta) phi(tz) + (1/delta) upsilon(tz) for real tz, via its printed
// double-integral representation with weights r^{delta/nu-1} s^{delta/mu-1}.
KernelEval phi_upsilon_mix_integral(const Params& p, double tz,
                                    const QuadratureConfig& cfg);

// h_xi(z) = z (1 + c z) / (1 - z)^2, c = (eps + 2 xi - 1) / (2 (1 - xi)).
std::complex<double> h_xi(double xi, std::complex<double> eps,
                          std::complex<double> z);

// Closed-form derivative h_xi'(z) = (1 + (1 + 2c) z) / (1 - z)^3.
std::complex<double> h_xi_deriv(double xi, std::complex<double> eps,
                                std::complex<double> z);

// The bracketed Re-difference integrand of the dual-functional checks:
//   (1-1/delta) [Re h_xi(tz)/(tz) - (1-xi(1+t))/((1-xi)(1+t)^2)]
// + (1/delta)   [Re h_xi'(tz)     - (1-t-xi(1+t))/((1-xi)(1+t)^3)]
double h_integrand(const Params& p, std::complex<double> z,
                   std::complex<double> eps, double t);

// Epsilon-minimized lower bound for Re h_xi(tz)/(tz):
//   [Re{(2(1-xi) + (2xi-1) tz)/(1-tz)^2} - |tz|/|1-tz|^2] / (2(1-xi)).
double h_ratio_min_bound(double xi, std::complex<double> tz);

} // namespace gft
