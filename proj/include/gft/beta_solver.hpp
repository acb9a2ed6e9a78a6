#pragma once

#include "gft/params.hpp"
#include "gft/q_functions.hpp"
#include "gft/weights.hpp"

namespace gft {

// Sharp beta from (beta - 1/2)/(1 - beta) = -I with I = int_0^1 lambda q dt.
// The inversion is exact algebra: beta - 1/2 = -I(1 - beta) gives
// beta (1 - I) = 1/2 - I, so beta = (1/2 - I)/(1 - I), singular at I = 1.
//
// beta_alt carries the alternate normalization beta/(1-beta) = -I, i.e.
// -I/(1-I), an alternate convention seen for some operator families; it is
// surfaced for comparison, never used for membership checks.
struct BetaResult {
    double beta = 0.0;
    double I = 0.0;
    enum class Method { Quadrature, Series, ClosedForm } method =
        Method::Quadrature;
    double beta_alt = 0.0;
    double err_estimate = 0.0;
    int terms = 0;
};

// Quadrature of lambda(t) q(t) with q from the series path (the production
// route); throws SingularInversion when I = 1 within tolerance.
BetaResult solve_beta(const Params& p, const WeightSpec& w,
                      const QuadratureConfig& cfg);

// Moment route: I = 1 + delta/(1-xi) sum (n+delta)(n+1-xi)(-1)^n tau_n /
// ((delta+n nu)(delta+n mu)), Euler-accelerated. Primary cross-check.
BetaResult beta_series(const Params& p, const WeightSpec& w, int n_max = 500);

// Carlson-Shaffer closed form: I = 6F5(1, b, 1+delta, 2-xi, delta/mu,
// delta/nu; c, delta, 1-xi, 1+delta/mu, 1+delta/nu; -1). Requires gamma > 0.
BetaResult beta0_cs(const Params& p, double b, double c, double tol = 1e-12);

} // namespace gft
