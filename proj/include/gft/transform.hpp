#pragma once

#include <string>

#include "gft/params.hpp"
#include "gft/power_series.hpp"
#include "gft/report.hpp"
#include "gft/weights.hpp"

namespace gft {

// An analytic function carried as S = (f/z)^delta with S(0) = 1, the form
// every functional here works in; the delta-th root is never taken.
struct AnalyticFn {
    PowerSeries S;
    double delta = 1.0;
    std::string label;
};

struct GridSpec {
    std::vector<double> radii{0.5, 0.9, 0.99};
    int n_theta = 720;

    void validate() const;
};

// S coefficients c_0 = 1, c_n = 2(1-beta) delta^2 / ((delta+n nu)(delta+n mu));
// gamma = 0 reduces to c_n = 2(1-beta) delta / (delta + n alpha).
AnalyticFn extremal_function(const Params& p, double beta, int order = 256);

// Coefficientwise inverse of the psi-convolution:
// H_n = S_n (delta+n nu)(delta+n mu)/delta^2, or S_n (delta+n alpha)/delta
// when gamma = 0.
PowerSeries apply_H(const Params& p, const AnalyticFn& f);

// V_lambda acting on (f/z)^delta: G_n = tau_n S_n.
AnalyticFn apply_transform(const WeightSpec& w, const AnalyticFn& f,
                           int n_max = -1);

// z G'(z)/G(z) for G = z^{2-delta} F^{delta-1} F', computed from
// G/z = S + z S'/delta. Numerator and denominator series are evaluated
// separately (Euler-averaged near the negative boundary) and divided.
cdouble star_functional(const AnalyticFn& F, cdouble z);

// Does some phi exist with Re e^{i phi}(H(z_j) - beta) > 0 on the outermost
// grid circle? Tested via the angular span of the values.
Report check_W_membership(const Params& p, double beta, const AnalyticFn& f,
                          const GridSpec& g);

// min over the grid of Re star_functional - xi, xi = 1 - delta(1 - zeta);
// PASS if >= -tol.
Report check_C_membership(const AnalyticFn& F, double zeta, const GridSpec& g,
                          double tol = 1e-3);

// Noshiro-Warschawski style diagnostic: min over the grid of Re G'(z).
Report check_univalence_re(const AnalyticFn& F, const GridSpec& g);

} // namespace gft
