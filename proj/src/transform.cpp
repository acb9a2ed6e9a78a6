#include "gft/transform.hpp"

#include <algorithm>
#include <cmath>

namespace gft {

namespace {

constexpr double kPi = 3.141592653589793;

// numerator/denominator series of z G'/G: den = G/z = S + z S'/delta,
// num = (G/z) + z (G/z)' so that z G'/G = num/den.
void star_series(const AnalyticFn& F, PowerSeries& num, PowerSeries& den)
{
    const int n = F.S.order();
    den = PowerSeries(n);
    num = PowerSeries(n);
    for (int i = 0; i < n; ++i) {
        const cdouble g = F.S.c[i] * (F.delta + i) / F.delta;
        den.c[i] = g;
        num.c[i] = g * (i + 1.0);
    }
}

cdouble eval_auto(const PowerSeries& s, cdouble z)
{
    // near the negative real boundary the plain truncated sum converges like
    // |z|^N; switch to the averaged evaluation there
    if (std::abs(z) > 0.95 && z.real() < 0.0 &&
        std::abs(z.imag()) < 1e-12 * std::abs(z))
        return series_eval_boundary(s, z);
    return series_eval(s, z);
}

} // namespace

void GridSpec::validate() const
{
    if (radii.empty() || n_theta < 64)
        throw InvalidParams("GridSpec: need radii and n_theta >= 64");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev && r < 1.0))
            throw InvalidParams("GridSpec: radii strictly increasing, < 1");
        prev = r;
    }
}

AnalyticFn extremal_function(const Params& p, double beta, int order)
{
    if (order < 2) throw InvalidParams("extremal_function: order >= 2");
    AnalyticFn f;
    f.delta = p.delta;
    f.label = "extremal";
    f.S = PowerSeries(order);
    f.S.c[0] = 1.0;
    const double d = p.delta;
    for (int n = 1; n < order; ++n) {
        double cn;
        if (p.gamma_zero())
            cn = 2.0 * (1.0 - beta) * d / (d + n * p.alpha);
        else
            cn = 2.0 * (1.0 - beta) * d * d /
                 ((d + n * p.nu) * (d + n * p.mu));
        f.S.c[n] = cn;
    }
    return f;
}

PowerSeries apply_H(const Params& p, const AnalyticFn& f)
{
    if (f.delta != p.delta)
        throw InvalidParams("apply_H: delta mismatch between f and params");
    const int n = f.S.order();
    const double d = p.delta;
    PowerSeries h(n);
    for (int i = 0; i < n; ++i) {
        if (p.gamma_zero())
            h.c[i] = f.S.c[i] * (d + i * p.alpha) / d;
        else
            h.c[i] = f.S.c[i] * (d + i * p.nu) * (d + i * p.mu) / (d * d);
    }
    return h;
}

AnalyticFn apply_transform(const WeightSpec& w, const AnalyticFn& f, int n_max)
{
    if (!w.normalized())
        throw InvalidWeight("apply_transform: normalize first");
    const int n = n_max < 0 ? f.S.order() : std::min(n_max, f.S.order());
    AnalyticFn g;
    g.delta = f.delta;
    g.label = f.label.empty() ? to_string(w) : f.label + " * " + to_string(w);
    g.S = PowerSeries(n);
    for (int i = 0; i < n; ++i) g.S.c[i] = moment(w, i) * f.S.c[i];
    return g;
}

cdouble star_functional(const AnalyticFn& F, cdouble z)
{
    if (std::abs(z) >= 1.0 + 1e-15)
        throw InvalidParams("star_functional: |z| <= 1");
    if (F.S.order() == 0 || std::abs(F.S.c[0] - cdouble(1.0)) > 1e-12)
        throw InvalidParams("star_functional: S(0) must be 1");
    if (z == cdouble(0.0)) return 1.0;
    PowerSeries num, den;
    star_series(F, num, den);
    const cdouble dv = eval_auto(den, z);
    if (std::abs(dv) < 1e-13)
        throw ZeroDenominator("star_functional: G(z) vanished at the sample "
                              "(non-starlike witness)");
    return eval_auto(num, z) / dv;
}

Report check_W_membership(const Params& p, double beta, const AnalyticFn& f,
                          const GridSpec& g)
{
    g.validate();
    PowerSeries h = apply_H(p, f);
    const double r = g.radii.back();
    std::vector<double> args;
    args.reserve(static_cast<std::size_t>(g.n_theta));
    Report rep;
    for (int j = 0; j < g.n_theta; ++j) {
        const double th = 2.0 * kPi * j / g.n_theta;
        const cdouble z = std::polar(r, th);
        const cdouble w = series_eval(h, z) - beta;
        if (std::abs(w) < 1e-12) {
            CheckItem c;
            c.name = "zero value on grid";
            c.value = std::abs(w);
            c.threshold = 1e-12;
            c.pass = false;
            c.witness = "z = " + std::to_string(z.real()) + " + " +
                        std::to_string(z.imag()) + "i";
            rep.add(std::move(c));
            rep.notes += "H(z)-beta vanished on the grid (boundary case); ";
            return rep;
        }
        args.push_back(std::arg(w));
    }
    std::vector<double> sorted = args;
    std::sort(sorted.begin(), sorted.end());
    // values fit in an open half-plane iff the largest angular gap exceeds pi
    double max_gap = 2.0 * kPi - (sorted.back() - sorted.front());
    double gap_end = sorted.front() + 2.0 * kPi;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] > max_gap) {
            max_gap = sorted[i] - sorted[i - 1];
            gap_end = sorted[i];
        }
    }
    const double span = 2.0 * kPi - max_gap;
    CheckItem c;
    c.name = "angular span < pi";
    c.value = span;
    c.threshold = kPi;
    c.pass = span < kPi;
    if (c.pass) {
        // rotate the mid-direction of the occupied arc onto the positive
        // axis and verify the witness against the raw values
        const double phi = -(gap_end + 0.5 * span);
        double worst = std::numeric_limits<double>::infinity();
        for (double a : args) worst = std::min(worst, std::cos(phi + a));
        char buf[80];
        std::snprintf(buf, sizeof buf, "phi = %.6g, min cos(arg+phi) = %.3g",
                      phi, worst);
        c.witness = buf;
        c.pass = worst > 0.0;
    } else {
        c.witness = "gap end angle = " + std::to_string(gap_end);
    }
    rep.add(std::move(c));
    return rep;
}

Report check_C_membership(const AnalyticFn& F, double zeta, const GridSpec& g,
                          double tol)
{
    g.validate();
    const double xi = 1.0 - F.delta * (1.0 - zeta);
    PowerSeries num, den;
    star_series(F, num, den);
    double min_v = std::numeric_limits<double>::infinity();
    cdouble argmin = 0.0;
    for (double r : g.radii) {
        for (int j = 0; j < g.n_theta; ++j) {
            const double th = 2.0 * kPi * j / g.n_theta;
            const cdouble z = std::polar(r, th);
            const cdouble dv = eval_auto(den, z);
            if (std::abs(dv) < 1e-13)
                throw ZeroDenominator("check_C_membership: G vanished at z");
            const double v = (eval_auto(num, z) / dv).real() - xi;
            if (v < min_v) {
                min_v = v;
                argmin = z;
            }
        }
    }
    Report rep;
    CheckItem c;
    c.name = "min Re(zG'/G) - xi";
    c.value = min_v;
    c.threshold = -tol;
    c.pass = min_v >= -tol;
    c.witness = "z = " + std::to_string(argmin.real()) + " + " +
                std::to_string(argmin.imag()) + "i";
    rep.add(std::move(c));
    return rep;
}

Report check_univalence_re(const AnalyticFn& F, const GridSpec& g)
{
    g.validate();
    PowerSeries num, den;
    star_series(F, num, den); // num = (zG')/z = G'(z) as a series in z
    double min_v = std::numeric_limits<double>::infinity();
    cdouble argmin = 0.0;
    for (double r : g.radii) {
        for (int j = 0; j < g.n_theta; ++j) {
            const cdouble z = std::polar(r, 2.0 * kPi * j / g.n_theta);
            const double v = eval_auto(num, z).real();
            if (v < min_v) {
                min_v = v;
                argmin = z;
            }
        }
    }
    Report rep;
    CheckItem c;
    c.name = "min Re G' (report-only)";
    c.value = min_v;
    c.threshold = 0.0;
    c.pass = true; // diagnostic, never gates
    c.witness = "z = " + std::to_string(argmin.real()) + " + " +
                std::to_string(argmin.imag()) + "i";
    rep.add(std::move(c));
    rep.notes = min_v > 0.0 ? "Re G' positive on grid"
                            : "Re G' has nonpositive values on grid";
    return rep;
}

} // namespace gft
