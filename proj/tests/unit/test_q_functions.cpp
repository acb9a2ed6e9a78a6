#include "doctest.h"

#include <cmath>

#include "gft/q_functions.hpp"
#include "gft/special.hpp"

using namespace gft;

namespace {

const QuadratureConfig kCfg; // defaults

Params gamma0_classic() { return derive_params(1.0, 0.0, 1.0, 0.0); }
Params gamma_pos_classic() { return params_from_mu_nu(1.0, 1.0, 1.0, 0.0); }

} // namespace

TEST_CASE("q(0) = 1 across methods")
{
    auto p0 = gamma0_classic();
    auto p1 = gamma_pos_classic();
    CHECK(q_gamma0(p0, 0.0, kCfg) == 1.0);
    CHECK(q_gamma_pos(p1, 0.0, kCfg) == 1.0);
    CHECK(q_series(p0, 0.0) == 1.0);
    CHECK(q_series(p1, 0.0) == 1.0);
    CHECK(q_pfq(p1, 0.0) == 1.0);
}

TEST_CASE("gamma=0 antiderivative oracle: q(1) = 1/4 at delta=alpha=1, xi=0")
{
    // (1/t) int_0^t (1-s)/(1+s)^3 ds = s/(1+s)^2 / t -> 1/4 at t = 1
    auto p = gamma0_classic();
    CHECK(q_gamma0(p, 1.0, kCfg) == doctest::Approx(0.25).epsilon(1e-11));
    // closed form q(t) = 1/(1+t)^2 for this configuration
    for (double t : {0.2, 0.5, 0.8})
        CHECK(q_gamma0(p, t, kCfg) ==
              doctest::Approx(1.0 / ((1.0 + t) * (1.0 + t))).epsilon(1e-11));
}

TEST_CASE("gamma=0 integral matches the mu=0 series reduction")
{
    auto p = gamma0_classic();
    CHECK(std::abs(q_gamma0(p, 0.5, kCfg) - q_series(p, 0.5)) < 1e-9);
    auto p2 = derive_params(0.7, 0.0, 2.0, 0.8); // xi = 0.6 out-of-range ok
    CHECK(std::abs(q_gamma0(p2, 0.4, kCfg) - q_series(p2, 0.4)) < 1e-9);
}

TEST_CASE("gamma>0 2D integral: golden value and midpoint oracle at t=1")
{
    auto p = gamma_pos_classic();
    const double val = q_gamma_pos(p, 1.0, kCfg);
    // analytic: int int (1-rs)/(1+rs)^3 = 1/2
    CHECK(val == doctest::Approx(0.5).epsilon(1e-9));
    // independent midpoint-rule oracle
    const int n = 1000;
    double mid = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double r = (i + 0.5) / n, s = (j + 0.5) / n;
            mid += (1.0 - r * s) / std::pow(1.0 + r * s, 3);
        }
    mid /= static_cast<double>(n) * n;
    CHECK(val == doctest::Approx(mid).epsilon(1e-6));
}

TEST_CASE("gamma>0 integral agrees with the series at interior t")
{
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.75); // xi = 1/2
    CHECK(std::abs(q_gamma_pos(p, 0.7, kCfg) - q_series(p, 0.7)) < 1e-8);
}

TEST_CASE("series first-term instantiation")
{
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.625); // xi = 0.25
    const double d = p.delta, xi = p.xi, t = 1e-5;
    const double first =
        -d * (1.0 + d) * (2.0 - xi) * t /
        ((1.0 - xi) * (d + p.nu) * (d + p.mu));
    // q(t) - 1 = first term + O(t^2)
    CHECK(q_series(p, t) - 1.0 == doctest::Approx(first).epsilon(1e-4));
}

TEST_CASE("series matches pfq deep into the unit interval")
{
    auto p = gamma_pos_classic();
    CHECK(std::abs(q_series(p, 0.3) - q_pfq(p, 0.3)) < 1e-10);
    auto p2 = params_from_mu_nu(0.5, 2.0, 2.0, 0.625);
    for (double t : {0.1, 0.5, 0.9})
        CHECK(std::abs(q_series(p2, t) - q_pfq(p2, t)) < 1e-10);
}

TEST_CASE("pfq termwise equals the series coefficients")
{
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.625);
    const double d = p.delta, xi = p.xi;
    const double num[5] = {1.0, 1.0 + d, 2.0 - xi, d / p.mu, d / p.nu};
    const double den[4] = {d, 1.0 - xi, 1.0 + d / p.mu, 1.0 + d / p.nu};
    for (int n = 1; n <= 30; ++n) {
        double hyper = 1.0 / std::tgamma(n + 1.0);
        for (double a : num) hyper *= pochhammer(a, n);
        for (double dd : den) hyper /= pochhammer(dd, n);
        const double series = d / (1.0 - xi) * (n + d) * (n + 1.0 - xi) /
                              ((d + n * p.nu) * (d + n * p.mu));
        CHECK(hyper == doctest::Approx(series).epsilon(1e-11));
    }
}

TEST_CASE("pfq equals the 2D integral at t = 1 (accelerated)")
{
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.625);
    CHECK(std::abs(q_pfq(p, 1.0) - q_gamma_pos(p, 1.0, kCfg)) < 1e-7);
}

TEST_CASE("ODE residual under central differencing")
{
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.75);
    const double e = p.delta / p.nu;
    auto lhs_fn = [&](double t) {
        return std::pow(t, e) * q_series(p, t);
    };
    for (double t : {0.2, 0.5, 0.8}) {
        const double h = 1e-5;
        const double lhs = (lhs_fn(t + h) - lhs_fn(t - h)) / (2.0 * h);
        QuadResult inner = integrate(
            [&](double s) {
                const double w = s * t;
                const double ops = 1.0 + w;
                const double bracket =
                    (1.0 - 1.0 / p.delta) * (1.0 - p.xi * ops) /
                        ((1.0 - p.xi) * ops * ops) +
                    (1.0 / p.delta) * (1.0 - w - p.xi * ops) /
                        ((1.0 - p.xi) * ops * ops * ops);
                return bracket * std::pow(s, p.delta / p.mu - 1.0);
            },
            kCfg);
        const double rhs = p.delta * p.delta / (p.mu * p.nu) *
                           std::pow(t, e - 1.0) * inner.value;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}

TEST_CASE("gamma = 0 ODE residual under central differencing")
{
    auto p = derive_params(0.7, 0.0, 2.0, 0.55); // xi = 0.1
    const double e = p.delta / p.alpha;
    auto lhs_fn = [&](double t) { return std::pow(t, e) * q_series(p, t); };
    for (double t : {0.2, 0.5, 0.8}) {
        const double h = 1e-5;
        const double lhs = (lhs_fn(t + h) - lhs_fn(t - h)) / (2.0 * h);
        const double opt = 1.0 + t;
        const double bracket =
            (1.0 - 1.0 / p.delta) * (1.0 - p.xi * opt) /
                ((1.0 - p.xi) * opt * opt) +
            (1.0 / p.delta) * (1.0 - t - p.xi * opt) /
                ((1.0 - p.xi) * opt * opt * opt);
        const double rhs =
            p.delta / p.alpha * std::pow(t, e - 1.0) * bracket;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}

TEST_CASE("q decreasing in t (observed diagnostic, non-fatal)")
{
    auto p = params_from_mu_nu(0.75, 1.5, 1.5, 0.5);
    double prev = q_series(p, 0.0);
    for (double t = 0.1; t <= 0.91; t += 0.1) {
        const double cur = q_series(p, t);
        WARN_LE(cur, prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("input validation")
{
    auto p0 = gamma0_classic();
    auto p1 = gamma_pos_classic();
    CHECK_THROWS_AS(q_gamma0(p1, 0.5, kCfg), InvalidParams);
    CHECK_THROWS_AS(q_gamma_pos(p0, 0.5, kCfg), InvalidParams);
    CHECK_THROWS_AS(q_pfq(p0, 0.5), InvalidParams);
    CHECK_THROWS_AS(q_series(p1, 1.5), InvalidParams);
}
