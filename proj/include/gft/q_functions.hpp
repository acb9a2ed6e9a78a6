#pragma once

#include "gft/params.hpp"
#include "gft/quadrature.hpp"

namespace gft {

struct QEval {
    double value = 0.0;
    double t = 0.0;
    enum class Method { Integral, Series, Pfq } method = Method::Series;
};

// Tagged evaluation through one chosen route (used by the q-table front end).
QEval q_eval(const Params& p, double t, QEval::Method m,
             const QuadratureConfig& cfg);

// gamma = 0 integral solution:
// q(t) = (delta/alpha) int_0^1 g(ts) s^{delta/alpha - 1} ds, q(0) = 1, where
// g(s) = (1-1/delta)(1-xi(1+s))/((1-xi)(1+s)^2)
//      + (1/delta)(1-s-xi(1+s))/((1-xi)(1+s)^3).
double q_gamma0(const Params& p, double t, const QuadratureConfig& cfg);

// gamma > 0 integral solution: (delta^2/(mu nu)) double integral of g(trs)
// against r^{delta/nu - 1} s^{delta/mu - 1}.
double q_gamma_pos(const Params& p, double t, const QuadratureConfig& cfg);

// Branch dispatcher for the integral method.
double q_integral(const Params& p, double t, const QuadratureConfig& cfg);

// Series form
//   q(t) = 1 + delta/(1-xi) sum_{n>=1} (n+delta)(n+1-xi)(-1)^n t^n
//                                     / ((delta+n nu)(delta+n mu)),
// with (delta + n mu) = delta when gamma = 0. Euler-accelerated for t > 0.9
// (at t = 1 the series is Abel-summable only).
double q_series(const Params& p, double t, int n_max = 500);

// 5F4(1, 1+delta, 2-xi, delta/mu, delta/nu;
//     delta, 1-xi, 1+delta/mu, 1+delta/nu; -t). Requires gamma > 0.
double q_pfq(const Params& p, double t, double tol = 1e-12);

} // namespace gft
