#include "doctest.h"

#include <cmath>
#include <vector>

#include "gft/beta_solver.hpp"
#include "gft/special.hpp"

using namespace gft;

namespace {
const QuadratureConfig kCfg;
}

TEST_CASE("analytic golden case: Bernardi weight, gamma = 0")
{
    // q(t) = 1/(1+t)^2, lambda = 2t: I = 2 ln 2 - 1,
    // beta = (3 - 4 ln 2)/(4 - 4 ln 2)
    auto p = derive_params(1.0, 0.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    auto r = solve_beta(p, w, kCfg);
    const double I_exact = 2.0 * std::log(2.0) - 1.0;
    const double beta_exact =
        (3.0 - 4.0 * std::log(2.0)) / (4.0 - 4.0 * std::log(2.0));
    CHECK(r.I == doctest::Approx(I_exact).epsilon(1e-10));
    CHECK(r.beta == doctest::Approx(beta_exact).epsilon(1e-10));

    // independent midpoint-rule oracle for I
    const int n = 1000000;
    double mid = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) / n;
        mid += 2.0 * t / ((1.0 + t) * (1.0 + t));
    }
    mid /= n;
    CHECK(r.I == doctest::Approx(mid).epsilon(1e-9));
}

TEST_CASE("defining relation round trip")
{
    auto p = params_from_mu_nu(1.0, 1.0, 1.0, 0.25);
    auto w = normalize(make_carlson_shaffer(1.0, 4.0), kCfg);
    auto r = solve_beta(p, w, kCfg);
    CHECK((r.beta - 0.5) / (1.0 - r.beta) ==
          doctest::Approx(-r.I).epsilon(1e-9));
    CHECK(r.beta < 1.0);
    CHECK(r.I > 0.0);
    // alternate normalization: beta_alt/(1-beta_alt) = -I
    CHECK(r.beta_alt / (1.0 - r.beta_alt) ==
          doctest::Approx(-r.I).epsilon(1e-9));
}

TEST_CASE("dual-path agreement quadrature vs moment series")
{
    auto p = params_from_mu_nu(1.0, 1.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    auto a = solve_beta(p, w, kCfg);
    auto b = beta_series(p, w);
    CHECK(a.beta == doctest::Approx(b.beta).epsilon(1e-8));
}

TEST_CASE("closed 6F5 path agrees with quadrature for carlson-shaffer")
{
    auto p = params_from_mu_nu(1.0, 1.0, 1.0, 0.0);
    auto w = normalize(make_carlson_shaffer(1.0, 4.0), kCfg);
    auto a = solve_beta(p, w, kCfg);
    auto c = beta0_cs(p, 1.0, 4.0);
    CHECK(a.beta == doctest::Approx(c.beta).epsilon(1e-6));
    CHECK(c.beta < 1.0);
}

TEST_CASE("6F5 with b = c cancels to the 5F4 at -1")
{
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.625);
    const double d = p.delta, xi = p.xi;
    const double num[5] = {1.0, 1.0 + d, 2.0 - xi, d / p.mu, d / p.nu};
    const double den[4] = {d, 1.0 - xi, 1.0 + d / p.mu, 1.0 + d / p.nu};
    const double f54 = pfq(num, den, -1.0, 1e-11);
    auto c = beta0_cs(p, 2.5, 2.5, 1e-11);
    CHECK(c.I == doctest::Approx(f54).epsilon(1e-9));
}

TEST_CASE("analytic golden case: Bernardi weight, gamma > 0")
{
    // at delta = 1, mu = nu = 1, xi = 0 the series collapses to
    // q(t) = 1/(1+t), so I = int 2t/(1+t) dt = 2(1 - ln 2)
    auto p = params_from_mu_nu(1.0, 1.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    auto r = solve_beta(p, w, kCfg);
    const double I_exact = 2.0 * (1.0 - std::log(2.0));
    CHECK(r.I == doctest::Approx(I_exact).epsilon(1e-10));
    CHECK(r.beta ==
          doctest::Approx((0.5 - I_exact) / (1.0 - I_exact)).epsilon(1e-10));
}

TEST_CASE("three-path agreement away from the classical corner")
{
    // delta = 2, mu = 1/2, nu = 2, xi = 1/4 (zeta = 0.625)
    auto p = params_from_mu_nu(0.5, 2.0, 2.0, 0.625);
    auto w = normalize(make_carlson_shaffer(1.2, 4.5), kCfg);
    auto a = solve_beta(p, w, kCfg);
    auto b = beta_series(p, w);
    auto c = beta0_cs(p, 1.2, 4.5);
    CHECK(a.beta == doctest::Approx(b.beta).epsilon(1e-7));
    CHECK(a.beta == doctest::Approx(c.beta).epsilon(1e-6));
    CHECK(a.I > 0.0);
    CHECK(a.beta < 1.0);
}

TEST_CASE("empty moment sum reports the singular inversion")
{
    auto p = params_from_mu_nu(1.0, 1.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    CHECK_THROWS_AS(beta_series(p, w, 0), SingularInversion);
}

TEST_CASE("moment-oracle substitution leaves beta unchanged")
{
    auto p = params_from_mu_nu(1.0, 1.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    const int n_max = 400;
    std::vector<double> partial;
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double tau = moment_quad(w, n, kCfg);
        const double a = (n + p.delta) * (n + 1.0 - p.xi) * tau /
                         ((p.delta + n * p.nu) * (p.delta + n * p.mu));
        sum += (n & 1) ? -a : a;
        partial.push_back(sum);
    }
    auto acc = euler_tail_average<double>(partial, 64);
    const double I = 1.0 + p.delta / (1.0 - p.xi) * acc.value;
    const double beta_sub = (0.5 - I) / (1.0 - I);
    auto closed = beta_series(p, w, n_max);
    CHECK(beta_sub == doctest::Approx(closed.beta).epsilon(1e-9));
}

TEST_CASE("beta weakly decreasing in zeta (observed diagnostic)")
{
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    double prev = 1.0;
    for (double zeta : {0.0, 0.125, 0.25, 0.375, 0.5}) {
        auto p = params_from_mu_nu(1.0, 1.0, 1.0, zeta);
        const double b = solve_beta(p, w, kCfg).beta;
        WARN_LE(b, prev + 1e-10);
        prev = b;
    }
}

TEST_CASE("beta0_cs requires gamma > 0")
{
    auto p = derive_params(1.0, 0.0, 1.0, 0.0);
    CHECK_THROWS_AS(beta0_cs(p, 1.0, 4.0), InvalidParams);
}
