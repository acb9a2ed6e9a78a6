#include "gft/kernels.hpp"

#include <cmath>

namespace gft {

namespace {

using cd = std::complex<double>;

// coefficient delta^2/((delta+n mu)(delta+n nu)); gamma=0 collapses the mu
// factor to delta, giving delta/(delta+n alpha).
double psi_coeff(const Params& p, long n)
{
    return p.delta * p.delta /
           ((p.delta + n * p.mu) * (p.delta + n * p.nu));
}

KernelEval sum_kernel(const Params& p, cd z, int weight_power)
{
    const double az = std::abs(z);
    if (az > 1.0 - 1e-9)
        throw InvalidParams("kernel series: require |z| <= 1 - 1e-9");
    cd sum = 0.0;
    cd zp = 1.0;
    const long cap = 2000000;
    long n = 0;
    for (; n < cap; ++n) {
        double c = psi_coeff(p, n);
        if (weight_power >= 1) c *= (n + 1.0);
        if (weight_power >= 2) c *= (n + 1.0);
        sum += c * zp;
        // tail bound: coefficients are O((n+1)^weight_power * psi_n) and
        // psi_n is nonincreasing, so a geometric envelope applies.
        const double tail = c * std::pow(az, static_cast<double>(n + 1)) /
                            (1.0 - az) * (weight_power == 0 ? 1.0 : 4.0);
        if (n > 4 && tail < 1e-15) {
            ++n;
            break;
        }
        zp *= z;
    }
    if (n >= cap)
        throw NonConvergent("kernel series: tail bound not met near |z|=1");
    KernelEval r;
    r.value = sum;
    r.form = KernelEval::Form::Series;
    r.terms_or_levels = n;
    return r;
}

} // namespace

KernelEval psi(const Params& p, cd z) { return sum_kernel(p, z, 0); }
KernelEval phi(const Params& p, cd z) { return sum_kernel(p, z, 1); }
KernelEval upsilon(const Params& p, cd z) { return sum_kernel(p, z, 2); }

KernelEval psi_integral(const Params& p, double z, const QuadratureConfig& cfg)
{
    if (p.gamma_zero())
        throw InvalidParams("psi_integral: double-integral form needs gamma>0");
    if (std::abs(z) > 1.0 - 1e-9)
        throw InvalidParams("psi_integral: require |z| < 1");
    const double eu = p.nu / p.delta;
    const double ev = p.mu / p.delta;
    QuadResult q = integrate2d(
        [&](double u, double v) {
            return 1.0 / (1.0 - std::pow(u, eu) * std::pow(v, ev) * z);
        },
        cfg);
    KernelEval r;
    r.value = q.value;
    r.form = KernelEval::Form::DoubleIntegral;
    r.terms_or_levels = q.levels_used;
    return r;
}

KernelEval phi_upsilon_mix_integral(const Params& p, double tz,
                                    const QuadratureConfig& cfg)
{
    if (p.gamma_zero())
        throw InvalidParams("phi_upsilon_mix_integral: needs gamma > 0");
    if (std::abs(tz) > 1.0 - 1e-9)
        throw InvalidParams("phi_upsilon_mix_integral: require |tz| < 1");
    const double d = p.delta;
    const double er = d / p.nu - 1.0;
    const double es = d / p.mu - 1.0;
    QuadResult q = integrate2d(
        [&](double r, double s) {
            const double w = tz * r * s;
            const double om = 1.0 - w;
            const double base = (1.0 - 1.0 / d) / (om * om) +
                                (1.0 / d) * (1.0 + w) / (om * om * om);
            return base * std::pow(r, er) * std::pow(s, es);
        },
        cfg);
    KernelEval r;
    r.value = q.value * d * d / (p.mu * p.nu);
    r.form = KernelEval::Form::DoubleIntegral;
    r.terms_or_levels = q.levels_used;
    return r;
}

cd h_xi(double xi, cd eps, cd z)
{
    if (xi < 0.0 || xi >= 1.0) throw InvalidParams("h_xi: xi in [0,1)");
    const cd c = (eps + 2.0 * xi - 1.0) / (2.0 * (1.0 - xi));
    const cd om = 1.0 - z;
    return z * (1.0 + c * z) / (om * om);
}

cd h_xi_deriv(double xi, cd eps, cd z)
{
    const cd c = (eps + 2.0 * xi - 1.0) / (2.0 * (1.0 - xi));
    const cd om = 1.0 - z;
    return (1.0 + (1.0 + 2.0 * c) * z) / (om * om * om);
}

double h_integrand(const Params& p, cd z, cd eps, double t)
{
    const double d = p.delta;
    const double xi = p.xi;
    const cd tz = t * z;
    const double opt = 1.0 + t;
    double first = 0.0;
    if (d != 1.0) {
        // h_xi(w)/w = (1 + c w)/(1 - w)^2 evaluated directly, valid at t = 0
        const cd c = (eps + 2.0 * xi - 1.0) / (2.0 * (1.0 - xi));
        const cd om = 1.0 - tz;
        const cd ratio = (1.0 + c * tz) / (om * om);
        const double sub = (1.0 - xi * opt) / ((1.0 - xi) * opt * opt);
        first = (1.0 - 1.0 / d) * (ratio.real() - sub);
    }
    const double sub2 =
        (1.0 - t - xi * opt) / ((1.0 - xi) * opt * opt * opt);
    const double second =
        (1.0 / d) * (h_xi_deriv(xi, eps, tz).real() - sub2);
    return first + second;
}

double h_ratio_min_bound(double xi, cd tz)
{
    const cd om = 1.0 - tz;
    const cd om2 = om * om;
    const double re = ((2.0 * (1.0 - xi) + (2.0 * xi - 1.0) * tz) / om2).real();
    return (re - std::abs(tz) / std::norm(om)) / (2.0 * (1.0 - xi));
}

} // namespace gft
