#pragma once

#include <complex>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

using cdouble = std::complex<double>;

// Truncated formal power series; c[n] is the coefficient of z^n.
// Binary operations truncate to the shorter order.
struct PowerSeries {
    std::vector<cdouble> c;

    PowerSeries() = default;
    explicit PowerSeries(int order) : c(static_cast<std::size_t>(order)) {}
    explicit PowerSeries(std::vector<cdouble> coeffs) : c(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c.size()); }

    static PowerSeries one(int order);
};

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_div(const PowerSeries& a, const PowerSeries& b);

// Require c[0] = 1.
PowerSeries series_log(const PowerSeries& s);

// Require c[0] = 0.
PowerSeries series_exp(const PowerSeries& s);

// s^p = exp(p log s); requires c[0] = 1.
PowerSeries series_pow(const PowerSeries& s, double p);

PowerSeries series_derivative(const PowerSeries& s);

// Horner evaluation; fine for |z| away from 1 relative to the order.
cdouble series_eval(const PowerSeries& s, cdouble z);

// Euler-averaged evaluation of the partial-sum sequence. Intended for z on or
// near the negative real axis with |z| close to 1, where the plain truncated
// sum converges like |z|^N. The averaging block is fixed so the residual
// scales with the magnitude of the last available terms.
cdouble series_eval_boundary(const PowerSeries& s, cdouble z, int block = 48);

} // namespace gft
