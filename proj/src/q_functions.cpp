#include "gft/q_functions.hpp"

#include <cmath>
#include <vector>

#include "gft/special.hpp"

namespace gft {

namespace {

// the common bracket of Eqs. (2.5)-(2.8)
double q_bracket(double delta, double xi, double s)
{
    const double ops = 1.0 + s;
    const double a = (1.0 - xi * ops) / ((1.0 - xi) * ops * ops);
    const double b = (1.0 - s - xi * ops) / ((1.0 - xi) * ops * ops * ops);
    return (1.0 - 1.0 / delta) * a + (1.0 / delta) * b;
}

} // namespace

double q_gamma0(const Params& p, double t, const QuadratureConfig& cfg)
{
    if (!p.gamma_zero()) throw InvalidParams("q_gamma0: needs gamma = 0");
    if (!(p.alpha > 0.0)) throw InvalidParams("q_gamma0: needs alpha > 0");
    if (t < 0.0 || t > 1.0) throw InvalidParams("q_gamma0: t in [0,1]");
    if (t == 0.0) return 1.0;
    const double e = p.delta / p.alpha;
    QuadResult r = integrate(
        [&](double s) {
            return q_bracket(p.delta, p.xi, t * s) * std::pow(s, e - 1.0);
        },
        cfg);
    return e * r.value;
}

double q_gamma_pos(const Params& p, double t, const QuadratureConfig& cfg)
{
    if (p.gamma_zero()) throw InvalidParams("q_gamma_pos: needs gamma > 0");
    if (t < 0.0 || t > 1.0) throw InvalidParams("q_gamma_pos: t in [0,1]");
    if (t == 0.0) return 1.0;
    const double er = p.delta / p.nu - 1.0;
    const double es = p.delta / p.mu - 1.0;
    QuadResult q = integrate2d(
        [&](double r, double s) {
            return q_bracket(p.delta, p.xi, t * r * s) * std::pow(r, er) *
                   std::pow(s, es);
        },
        cfg);
    return q.value * p.delta * p.delta / (p.mu * p.nu);
}

double q_integral(const Params& p, double t, const QuadratureConfig& cfg)
{
    return p.gamma_zero() ? q_gamma0(p, t, cfg) : q_gamma_pos(p, t, cfg);
}

double q_series(const Params& p, double t, int n_max)
{
    if (t < 0.0 || t > 1.0) throw InvalidParams("q_series: t in [0,1]");
    if (t == 0.0) return 1.0;
    if (n_max < 1) throw InvalidParams("q_series: n_max >= 1");
    const double d = p.delta, xi = p.xi;

    auto term = [&](int n) {
        const double c = (n + d) * (n + 1.0 - xi) /
                         ((d + n * p.nu) * (d + n * p.mu));
        // gamma = 0: (d + n mu) = d automatically since mu = 0
        return c * ((n & 1) ? -1.0 : 1.0) * std::pow(t, n);
    };

    if (t <= 0.9) {
        double sum = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const double a = term(n);
            sum += a;
            if (std::abs(a) < 1e-16 * (1.0 + std::abs(sum)) && n > 4)
                return 1.0 + d / (1.0 - xi) * sum;
        }
        return 1.0 + d / (1.0 - xi) * sum;
    }

    // near and at t = 1 the tail is alternating with terms that may tend to a
    // constant (gamma>0) or grow linearly (gamma=0); Euler-average it
    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>(n_max));
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        sum += term(n);
        partial.push_back(sum);
    }
    auto acc = euler_tail_average<double>(partial, 64);
    if (!(acc.err <= 1e-10 * (1.0 + std::abs(acc.value))))
        throw NonConvergent("q_series: acceleration stalled");
    return 1.0 + d / (1.0 - xi) * acc.value;
}

QEval q_eval(const Params& p, double t, QEval::Method m,
             const QuadratureConfig& cfg)
{
    QEval e;
    e.t = t;
    e.method = m;
    switch (m) {
    case QEval::Method::Integral: e.value = q_integral(p, t, cfg); break;
    case QEval::Method::Series: e.value = q_series(p, t); break;
    case QEval::Method::Pfq: e.value = q_pfq(p, t); break;
    }
    return e;
}

double q_pfq(const Params& p, double t, double tol)
{
    if (p.gamma_zero())
        throw InvalidParams("q_pfq: needs gamma > 0 (finite delta/mu)");
    if (t < 0.0 || t > 1.0) throw InvalidParams("q_pfq: t in [0,1]");
    if (t == 0.0) return 1.0;
    const double d = p.delta, xi = p.xi;
    const double num[5] = {1.0, 1.0 + d, 2.0 - xi, d / p.mu, d / p.nu};
    const double den[4] = {d, 1.0 - xi, 1.0 + d / p.mu, 1.0 + d / p.nu};
    return pfq(num, den, -t, tol);
}

} // namespace gft
