#include "gft/beta_solver.hpp"

#include <cmath>
#include <vector>

#include "gft/special.hpp"

namespace gft {

namespace {

// beta from (beta - 1/2)/(1 - beta) = -I; throws when I = 1.
BetaResult invert(double I, BetaResult::Method m)
{
    if (std::abs(1.0 - I) < 1e-10)
        throw SingularInversion(
            "beta inversion: I = 1 within tolerance (beta -> inf); "
            "out-of-range parameters or truncated sum");
    BetaResult r;
    r.I = I;
    r.method = m;
    r.beta = (0.5 - I) / (1.0 - I);
    r.beta_alt = -I / (1.0 - I);
    return r;
}

} // namespace

BetaResult solve_beta(const Params& p, const WeightSpec& w,
                      const QuadratureConfig& cfg)
{
    if (!w.normalized()) throw InvalidWeight("solve_beta: normalize first");
    QuadResult q = integrate(
        [&](double t) { return lambda_eval(w, t) * q_series(p, t); }, cfg);
    BetaResult r = invert(q.value, BetaResult::Method::Quadrature);
    r.err_estimate = q.err_estimate;
    return r;
}

BetaResult beta_series(const Params& p, const WeightSpec& w, int n_max)
{
    if (!w.normalized()) throw InvalidWeight("beta_series: normalize first");
    if (n_max < 0) throw InvalidParams("beta_series: n_max >= 0");
    const double d = p.delta, xi = p.xi;
    if (n_max == 0) {
        // empty sum: the relation degenerates to I = 1
        BetaResult r = invert(1.0, BetaResult::Method::Series); // throws
        return r;
    }
    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>(n_max));
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double tau = moment(w, n);
        const double a = (n + d) * (n + 1.0 - xi) * tau /
                         ((d + n * p.nu) * (d + n * p.mu));
        sum += ((n & 1) ? -a : a);
        partial.push_back(sum);
    }
    auto acc = euler_tail_average<double>(partial, 64);
    const double I = 1.0 + d / (1.0 - xi) * acc.value;
    BetaResult r = invert(I, BetaResult::Method::Series);
    r.err_estimate = acc.err;
    r.terms = n_max;
    return r;
}

BetaResult beta0_cs(const Params& p, double b, double c, double tol)
{
    if (p.gamma_zero())
        throw InvalidParams("beta0_cs: needs gamma > 0 (finite delta/mu)");
    const double d = p.delta, xi = p.xi;
    const double num[6] = {1.0, b,        1.0 + d,        2.0 - xi,
                           d / p.mu, d / p.nu};
    const double den[5] = {c, d, 1.0 - xi, 1.0 + d / p.mu, 1.0 + d / p.nu};
    PfqResult f = pfq_full(num, den, -1.0, tol);
    BetaResult r = invert(f.value, BetaResult::Method::ClosedForm);
    r.err_estimate = f.err;
    r.terms = f.terms;
    return r;
}

} // namespace gft
