#include "gft/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "gft/kernels.hpp"

namespace gft {

namespace {

constexpr double kPi = 3.141592653589793;

std::string fmt_z(std::complex<double> z)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

CheckItem make_check(const char* name, double value, double threshold,
                     bool pass, std::string witness = {})
{
    CheckItem c;
    c.name = name;
    c.value = value;
    c.threshold = threshold;
    c.pass = pass;
    c.witness = std::move(witness);
    return c;
}

} // namespace

std::vector<std::complex<double>> boundary_z_grid(int n)
{
    if (n < 2) throw InvalidParams("boundary_z_grid: n >= 2");
    std::vector<std::complex<double>> g;
    g.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j < n; ++j)
        g.push_back(std::polar(1.0, 2.0 * kPi * j / n)); // z = 1 excluded
    return g;
}

std::vector<std::complex<double>> unimodular_grid(int n)
{
    if (n < 1) throw InvalidParams("unimodular_grid: n >= 1");
    std::vector<std::complex<double>> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        g.push_back(std::polar(1.0, 2.0 * kPi * j / n));
    return g;
}

std::vector<double> log_t_grid(int n, double lo, double hi)
{
    if (n < 2 || !(lo > 0.0 && lo < hi && hi < 1.0))
        throw InvalidParams("log_t_grid: need n >= 2, 0 < lo < hi < 1");
    std::vector<double> g(static_cast<std::size_t>(n));
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] =
            std::exp(l0 + (l1 - l0) * i / (n - 1.0));
    return g;
}

Report m_pi_check(const Params& p, const WeightSpec& w,
                  std::span<const std::complex<double>> z_grid,
                  std::span<const std::complex<double>> eps_grid,
                  const QuadratureConfig& cfg, double tol)
{
    cfg.validate();
    if (z_grid.empty() || eps_grid.empty())
        throw InvalidParams("m_pi_check: empty grid");
    WeightTails tails(w, p);

    // fixed-level DE nodes; the integrand vanishes like t^B near 0 so the
    // clip at 1e-9 costs O(t_min^{B+1})
    const auto& nodes = de_nodes(5);
    const double exp_pref =
        (p.gamma_zero() ? p.delta / p.alpha : p.delta / p.mu) - 1.0;
    struct NodeW {
        double t;
        double coef;      // w * t^{d/mu-1} * Pi(t)   (Lambda for gamma=0)
        double coef_min;  // w * t^{d/mu-1} * ((1-1/mu) Pi + t^{d/nu-d/mu} L / d)
    };
    std::vector<NodeW> pre;
    pre.reserve(nodes.size());
    const bool have_min_bound = !p.gamma_zero() && p.mu > 0.0;
    for (const auto& n : nodes) {
        if (n.t < 1e-9 || n.one_minus_t < 1e-12) continue;
        NodeW nw;
        nw.t = n.t;
        const double pref = n.w * std::pow(n.t, exp_pref);
        const double Pi = tails.Pi(n.t);
        nw.coef = pref * Pi;
        nw.coef_min = 0.0;
        if (have_min_bound) {
            const double L = tails.Lambda(n.t);
            nw.coef_min =
                pref * ((1.0 - 1.0 / p.mu) * Pi +
                        std::pow(n.t, p.delta / p.nu - p.delta / p.mu) * L /
                            p.delta);
        }
        pre.push_back(nw);
    }

    double min_m = std::numeric_limits<double>::infinity();
    std::complex<double> wz = 0.0, we = 0.0;
    for (const auto& z : z_grid) {
        for (const auto& eps : eps_grid) {
            double m = 0.0;
            for (const auto& n : pre)
                m += n.coef * h_integrand(p, z, eps, n.t);
            if (m < min_m) {
                min_m = m;
                wz = z;
                we = eps;
            }
        }
    }
    Report rep;
    rep.add(make_check("min M over (z,eps) grid", min_m, -tol, min_m >= -tol,
                       "z = " + fmt_z(wz) + ", eps = " + fmt_z(we)));

    if (have_min_bound) {
        double min_b = std::numeric_limits<double>::infinity();
        std::complex<double> wzb = 0.0;
        for (const auto& z : z_grid) {
            double m = 0.0;
            for (const auto& n : pre) {
                const double opt = 1.0 + n.t;
                const double sub =
                    (1.0 - p.xi * opt) / ((1.0 - p.xi) * opt * opt);
                m += n.coef_min *
                     (h_ratio_min_bound(p.xi, n.t * z) - sub);
            }
            if (m < min_b) {
                min_b = m;
                wzb = z;
            }
        }
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "eps-minimized lower bound: min %.6e at z = %s; ",
                      min_b, fmt_z(wzb).c_str());
        rep.notes += buf;
    } else {
        rep.notes += "eps-minimized bound reported only for gamma > 0; ";
    }
    return rep;
}

Report decreasing_condition(const Params& p, const WeightSpec& w,
                            std::span<const double> t_grid,
                            const QuadratureConfig& cfg, double tol)
{
    cfg.validate();
    if (t_grid.size() < 2)
        throw InvalidParams("decreasing_condition: need >= 2 grid points");
    WeightTails tails(w, p);
    Report rep;

    if (!p.decreasing_scope)
        rep.notes += "outside the decreasing-scope ranges (mu in [1/2,1], "
                     "nu >= 1, delta >= 1, zeta window); diagnostic only; ";

    const double ex = 1.0 + 2.0 * p.xi; // = 3 - 2 delta (1 - zeta)
    auto D = [&](double t) {
        const double lg = std::pow(std::log(1.0 / t), ex);
        if (p.gamma_zero()) {
            const double a = p.alpha;
            return (p.delta * (1.0 - 1.0 / a) *
                        std::pow(t, (p.delta - 1.0) / a) * tails.Lambda(t) +
                    std::pow(t, 1.0 - 1.0 / a) * lambda_eval(w, t)) /
                   lg;
        }
        const double num =
            p.delta * (1.0 - 1.0 / p.mu) * tails.Pi(t) +
            std::pow(t, p.delta / p.nu - p.delta / p.mu) * tails.Lambda(t);
        return std::pow(t, (p.delta - 1.0) / p.mu) * num / lg;
    };

    double prev = D(t_grid[0]);
    double worst = -std::numeric_limits<double>::infinity();
    double worst_t = t_grid[0];
    bool pass = true;
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double cur = D(t_grid[i]);
        const double slack = tol * std::max(1.0, std::abs(prev));
        const double excess = cur - prev;
        if (excess > worst) {
            worst = excess;
            worst_t = t_grid[i];
        }
        if (excess > slack) pass = false;
        prev = cur;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "t in (%.3g, %.3g]", worst_t, worst_t);
    rep.add(make_check("D(t) nonincreasing (worst successive increase)",
                       worst, tol, pass, buf));
    return rep;
}

double general_beta_b_bound_pos(const Params& p)
{
    const double b1 =
        0.25 * (1.0 / p.mu - 3.0 + p.delta * (3.0 - 2.0 * p.zeta));
    const double b2 = (2.0 / (p.delta + 1.0 / p.mu)) *
                      ((2.0 * p.delta - 1.0) / p.mu - p.delta + 1.0);
    return std::min(b1, b2);
}

double general_beta_b_bound_zero(const Params& p)
{
    const double ia = 1.0 / p.alpha;
    const double b1 = 0.5 * (ia + p.delta - 2.0);
    const double b2 = p.delta * (ia - 1.0) / (ia + p.delta - 1.0);
    const double b3 = 0.25 * (3.0 * ia + p.delta - 6.0);
    return std::min(b1, std::min(b2, b3));
}

namespace {

void add_gamma_pos_ranges(Report& rep, const Params& p)
{
    rep.add(make_check("gamma > 0", p.gamma, 0.0, p.gamma > 0.0));
    rep.add(make_check("1/2 <= mu <= 1", p.mu, 0.5,
                       p.mu >= 0.5 && p.mu <= 1.0));
    rep.add(make_check("nu >= 1", p.nu, 1.0, p.nu >= 1.0));
    rep.add(make_check("1 <= delta <= 2", p.delta, 2.0,
                       p.delta >= 1.0 && p.delta <= 2.0));
    const bool zr = p.zeta >= 1.0 - 1.0 / p.delta &&
                    p.zeta <= 1.0 - 0.5 / p.delta;
    rep.add(make_check("zeta in [1-1/d, 1-1/(2d)]", p.zeta,
                       1.0 - 0.5 / p.delta, zr));
}

void add_gamma_zero_ranges(Report& rep, const Params& p, double delta_min)
{
    rep.add(make_check("gamma = 0", p.gamma, 0.0, p.gamma == 0.0));
    rep.add(make_check("1/2 <= alpha <= 1", p.alpha, 1.0,
                       p.alpha >= 0.5 && p.alpha <= 1.0));
    rep.add(make_check("delta >= 3", p.delta, delta_min,
                       p.delta >= delta_min));
    const bool zr = p.zeta >= 1.0 - 1.0 / p.delta &&
                    p.zeta <= 1.0 - 0.5 / p.delta;
    rep.add(make_check("zeta in [1-1/d, 1-1/(2d)]", p.zeta,
                       1.0 - 0.5 / p.delta, zr));
}

} // namespace

Report general_beta_region_pos(const Params& p, double A, double B, double C)
{
    Report rep;
    rep.add(make_check("A,B,C > 0", std::min(A, std::min(B, C)), 0.0,
                       A > 0.0 && B > 0.0 && C > 0.0));
    add_gamma_pos_ranges(rep, p);
    const double slope = (2.0 - p.delta) / p.mu - p.delta / p.nu;
    rep.add(make_check("(2-d)/mu >= d/nu", slope, 0.0, slope >= 0.0));
    rep.add(make_check("C >= A+B+2", C, A + B + 2.0, C >= A + B + 2.0));
    const double bound = general_beta_b_bound_pos(p);
    rep.add(make_check("B <= min bound", B, bound, B <= bound));
    if (p.delta == 2.0)
        rep.notes += "delta = 2 forces (2-d)/mu = 0 >= d/nu, impossible for "
                     "nu >= 1: region vacuous; ";
    return rep;
}

Report general_beta_region_zero(const Params& p, double A, double B, double C)
{
    Report rep;
    rep.add(make_check("A,B,C > 0", std::min(A, std::min(B, C)), 0.0,
                       A > 0.0 && B > 0.0 && C > 0.0));
    add_gamma_zero_ranges(rep, p, 3.0);
    rep.add(make_check("C >= A+B+3", C, A + B + 3.0, C >= A + B + 3.0));
    const double bound = general_beta_b_bound_zero(p);
    rep.add(make_check("B <= min bound", B, bound, B <= bound));
    return rep;
}

Report hohlov_region(const Params& p, double a, double b, double c)
{
    Report rep;
    rep.add(make_check("a,b,c > 0", std::min(a, std::min(b, c)), 0.0,
                       a > 0.0 && b > 0.0 && c > 0.0));
    if (!p.gamma_zero()) {
        add_gamma_pos_ranges(rep, p);
        const double bound = general_beta_b_bound_pos(p);
        rep.add(make_check("b <= min bound", b, bound, b <= bound));
        rep.add(make_check("c >= a+b+2", c, a + b + 2.0, c >= a + b + 2.0));
    } else {
        add_gamma_zero_ranges(rep, p, 3.0);
        const double bound = general_beta_b_bound_zero(p);
        rep.add(make_check("b <= min bound", b, bound, b <= bound));
        rep.add(make_check("c >= a+b+3", c, a + b + 3.0, c >= a + b + 3.0));
    }
    return rep;
}

Report cs_region(const Params& p, double b, double c)
{
    Report rep;
    rep.add(make_check("b,c > 0", std::min(b, c), 0.0, b > 0.0 && c > 0.0));
    if (!p.gamma_zero()) {
        add_gamma_pos_ranges(rep, p);
        const double bound = general_beta_b_bound_pos(p);
        rep.add(make_check("b <= min bound", b, bound, b <= bound));
        rep.add(make_check("c >= b+3", c, b + 3.0, c >= b + 3.0));
    } else {
        add_gamma_zero_ranges(rep, p, 3.0);
        const double bound = general_beta_b_bound_zero(p);
        rep.add(make_check("b <= min bound", b, bound, b <= bound));
        rep.add(make_check("c >= b+4", c, b + 4.0, c >= b + 4.0));
    }
    return rep;
}

Report komatu_region(const Params& p, double k, double p_exp)
{
    Report rep;
    rep.add(make_check("k > -1", k, -1.0, k > -1.0));
    if (!p.gamma_zero()) {
        add_gamma_pos_ranges(rep, p);
        const double bound = general_beta_b_bound_pos(p) - 1.0;
        rep.add(make_check("k <= min bound - 1", k, bound, k <= bound));
        rep.add(make_check("p >= 1", p_exp, 1.0, p_exp >= 1.0));
        if (p_exp < 3.0)
            rep.notes += "printed p-bound is weaker than the C >= A+B+2 "
                         "route (C-A-B = p-1); the decreasing condition can "
                         "fail near t = 1 for p < 3; ";
    } else {
        add_gamma_zero_ranges(rep, p, 3.0);
        const double ia = 1.0 / p.alpha;
        const double b1 = 0.5 * (ia + p.delta - 4.0);
        const double b2 =
            p.delta * (ia - 1.0) / (ia + p.delta - 1.0) - 1.0;
        const double b3 = 0.25 * (3.0 * ia + p.delta - 10.0);
        const double bound = std::min(b1, std::min(b2, b3));
        rep.add(make_check("k <= min bound", k, bound, k <= bound));
        rep.add(make_check("p >= 2", p_exp, 2.0, p_exp >= 2.0));
        if (p_exp < 4.0)
            rep.notes += "printed p-bound is weaker than the C >= A+B+3 "
                         "route (C-A-B = p-1); the decreasing condition can "
                         "fail near t = 1 for p < 4; ";
    }
    return rep;
}

} // namespace gft
