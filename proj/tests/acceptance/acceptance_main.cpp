// Acceptance suite: exercises every top-level requirement end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <limits>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "gft/beta_solver.hpp"
#include "gft/kernels.hpp"
#include "gft/q_functions.hpp"
#include "gft/special.hpp"
#include "gft/transform.hpp"
#include "gft/verifier.hpp"

using namespace gft;
using cd = std::complex<double>;

namespace {

int failures = 0;

void line(int id, bool pass, const char* what, const std::string& detail)
{
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
                what, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

const QuadratureConfig kCfg;

// ---------------------------------------------------------------- 1
void criterion_q_agreement()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_is = 0.0, worst_sp = 0.0;
    // 10 in-range gamma > 0 sets
    for (int i = 0; i < 10; ++i) {
        const double mu = 0.5 + 0.5 * u(rng);
        const double nu = 1.0 + 2.0 * u(rng);
        const double delta = 1.0 + u(rng);
        const double zeta = (1.0 - 1.0 / delta) + (0.5 / delta) * u(rng);
        auto p = params_from_mu_nu(mu, nu, delta, zeta);
        for (double t = 0.0; t <= 0.901; t += 0.1) {
            const double qi = q_integral(p, t, kCfg);
            const double qs = q_series(p, t);
            const double qp = q_pfq(p, t);
            worst_is = std::max(worst_is, std::abs(qi - qs));
            worst_sp = std::max(worst_sp, std::abs(qs - qp));
        }
    }
    // 5 gamma = 0 sets (no 5F4 form there; integral vs series only)
    for (int i = 0; i < 5; ++i) {
        const double alpha = 0.5 + 1.5 * u(rng);
        const double delta = 1.0 + 2.0 * u(rng);
        const double zeta = (1.0 - 1.0 / delta) + (0.5 / delta) * u(rng);
        auto p = derive_params(alpha, 0.0, delta, zeta);
        for (double t = 0.0; t <= 0.901; t += 0.1) {
            const double qi = q_integral(p, t, kCfg);
            const double qs = q_series(p, t);
            worst_is = std::max(worst_is, std::abs(qi - qs));
        }
    }
    const double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max|int-series| = %.2e (<=1e-8), max|series-pfq| = %.2e "
                  "(<=1e-10), %.1f s (<30)",
                  worst_is, worst_sp, secs);
    line(1, worst_is <= 1e-8 && worst_sp <= 1e-10 && secs < 30.0,
         "q-method agreement", buf);
}

// ---------------------------------------------------------------- 2
void criterion_beta_dual_path()
{
    double worst_qs = 0.0, worst_cs = 0.0;
    for (double xi : {0.0, 0.25, 0.5}) {
        auto p = params_from_mu_nu(1.0, 1.0, 1.0, xi); // delta=1: zeta=xi
        const WeightSpec ws[] = {
            normalize(make_komatu(1.0, 1.0), kCfg),
            normalize(make_komatu(1.0, 2.0), kCfg),
            normalize(make_carlson_shaffer(1.0, 4.0), kCfg),
        };
        for (const auto& w : ws) {
            const double bq = solve_beta(p, w, kCfg).beta;
            const double bs = beta_series(p, w).beta;
            worst_qs = std::max(worst_qs, std::abs(bq - bs));
            if (w.family == WeightFamily::CarlsonShaffer) {
                const double bc = beta0_cs(p, 1.0, 4.0).beta;
                worst_cs = std::max(worst_cs, std::abs(bq - bc));
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "max|quad-series| = %.2e, max|quad-6F5| = %.2e (<=1e-6)",
                  worst_qs, worst_cs);
    line(2, worst_qs <= 1e-6 && worst_cs <= 1e-6, "beta dual-path", buf);
}

// ---------------------------------------------------------------- 3
void criterion_moments()
{
    double worst_k = 0.0, worst_h = 0.0;
    const double kp[][2] = {{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}};
    for (const auto& c : kp) {
        auto w = normalize(make_komatu(c[0], c[1]), kCfg);
        for (int n = 0; n <= 20; ++n)
            worst_k = std::max(
                worst_k, std::abs(moment(w, n) - moment_quad(w, n, kCfg)));
    }
    auto h = normalize(make_hohlov(1.0, 1.0, 3.0), kCfg);
    for (int n = 0; n <= 20; ++n) {
        double closed = 1.0;
        for (int j = 0; j < n; ++j)
            closed *= (1.0 + j) * (1.0 + j) / ((3.0 + j) * (1.0 + j));
        worst_h = std::max(worst_h,
                           std::abs(moment_quad(h, n, kCfg) - closed));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "komatu closed-vs-quad = %.2e (<=1e-10), hohlov = %.2e "
                  "(<=1e-8)",
                  worst_k, worst_h);
    line(3, worst_k <= 1e-10 && worst_h <= 1e-8, "weight moments", buf);
}

// ---------------------------------------------------------------- 4
void criterion_sharpness()
{
    auto p = derive_params(1.0, 0.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    const double beta = solve_beta(p, w, kCfg).beta;
    const cd z(-0.9995, 0.0);
    double err[3];
    int i = 0;
    for (int order : {256, 512, 1024}) {
        auto F = apply_transform(w, extremal_function(p, beta, order));
        err[i++] = std::abs(star_functional(F, z) - cd(p.xi));
    }
    // the averaged boundary evaluation saturates near 1e-12 well before
    // order 256, so "decreases" is asserted as nonincreasing within that
    // noise; the dominant residual is the true distance from the boundary
    // point to z = -1 where the identity is exact
    const bool monotone =
        err[0] >= err[1] - 1e-10 && err[1] >= err[2] - 1e-10;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "errors at orders 256/512/1024: %.6e / %.6e / %.6e",
                  err[0], err[1], err[2]);
    line(4, err[2] <= 5e-3 && monotone, "sharpness at z = -0.9995", buf);
}

// ---------------------------------------------------------------- 5
void criterion_end_to_end()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto tgrid = log_t_grid();
    auto zg = boundary_z_grid(72);
    auto eg = unimodular_grid(16);
    GridSpec grid; // radii {0.5, 0.9, 0.99}

    int done41 = 0, done42 = 0;
    double worst_mpi = std::numeric_limits<double>::infinity();
    double worst_mem = std::numeric_limits<double>::infinity();
    bool all_decreasing = true;

    while (done41 < 20) {
        const double delta = 1.0 + 0.8 * u(rng);
        const double mu = 0.5 + 0.5 * u(rng);
        const double numin = std::max(1.0, delta * mu / (2.0 - delta));
        const double nu = numin + 2.0 * u(rng);
        const double zeta = (1.0 - 1.0 / delta) + (0.5 / delta) * u(rng);
        auto p = params_from_mu_nu(mu, nu, delta, zeta);
        const double bound = general_beta_b_bound_pos(p);
        if (bound < 0.06) continue;
        const double B = bound * (0.3 + 0.6 * u(rng));
        const double A = 0.2 + u(rng);
        const double C = A + B + 2.0 + u(rng);
        if (!general_beta_region_pos(p, A, B, C).pass) continue;
        ++done41;
        auto w = normalize(make_general_beta(A, B, C), kCfg);
        all_decreasing =
            all_decreasing && decreasing_condition(p, w, tgrid, kCfg).pass;
        worst_mpi = std::min(
            worst_mpi, m_pi_check(p, w, zg, eg, kCfg).checks.at(0).value);
        const double beta = solve_beta(p, w, kCfg).beta;
        auto F = apply_transform(w, extremal_function(p, beta, 512));
        worst_mem =
            std::min(worst_mem, check_C_membership(F, zeta, grid, 1e-3)
                                    .checks.at(0)
                                    .value);
    }
    while (done42 < 10) {
        const double delta = 3.0 + 2.0 * u(rng);
        const double alpha = 0.5 + 0.5 * u(rng);
        const double zeta = (1.0 - 1.0 / delta) + (0.5 / delta) * u(rng);
        auto p = derive_params(alpha, 0.0, delta, zeta);
        const double bound = general_beta_b_bound_zero(p);
        if (bound < 0.06) continue;
        const double B = bound * (0.3 + 0.6 * u(rng));
        const double A = 0.2 + u(rng);
        const double C = A + B + 3.0 + u(rng);
        if (!general_beta_region_zero(p, A, B, C).pass) continue;
        ++done42;
        auto w = normalize(make_general_beta(A, B, C), kCfg);
        all_decreasing =
            all_decreasing && decreasing_condition(p, w, tgrid, kCfg).pass;
        worst_mpi = std::min(
            worst_mpi, m_pi_check(p, w, zg, eg, kCfg).checks.at(0).value);
        const double beta = solve_beta(p, w, kCfg).beta;
        auto F = apply_transform(w, extremal_function(p, beta, 512));
        worst_mem =
            std::min(worst_mem, check_C_membership(F, zeta, grid, 1e-3)
                                    .checks.at(0)
                                    .value);
    }
    const double secs = seconds_since(t0);
    char buf[180];
    std::snprintf(buf, sizeof buf,
                  "decreasing all PASS: %d; min M = %.2e (>=-1e-6); min "
                  "membership = %.2e (>=-1e-3); %.0f s (<180)",
                  all_decreasing ? 1 : 0, worst_mpi, worst_mem, secs);
    line(5,
         all_decreasing && worst_mpi >= -1e-6 && worst_mem >= -1e-3 &&
             secs < 180.0,
         "end-to-end sufficiency on sampled regions", buf);
}

// ---------------------------------------------------------------- 6
void criterion_negative_control()
{
    auto p = derive_params(1.0, 0.0, 1.0, 0.0);
    auto w = normalize(make_komatu(1.0, 1.0), kCfg);
    const double beta = solve_beta(p, w, kCfg).beta;
    GridSpec grid;
    auto F = apply_transform(w, extremal_function(p, beta - 0.1, 1024));
    auto rep = check_C_membership(F, 0.0, grid, 1e-3);
    const double min_v = rep.checks.at(0).value;
    const std::string& witness = rep.checks.at(0).witness;
    // witness should sit near z = -1 (the sharpness boundary point)
    const bool near = witness.find("z = -0.9") != std::string::npos;
    char buf[160];
    std::snprintf(buf, sizeof buf, "min = %.4e (< -1e-3), witness %s",
                  min_v, witness.c_str());
    line(6, !rep.pass && min_v < -1e-3 && near,
         "negative control beta - 0.1 fails membership", buf);
}

// ---------------------------------------------------------------- 7
void criterion_region_boundary()
{
    auto p = params_from_mu_nu(0.5, 2.0, 1.0, 0.0);
    // independent recomputation of the printed bound
    const double b1 =
        0.25 * (1.0 / p.mu - 3.0 + p.delta * (3.0 - 2.0 * p.zeta));
    const double b2 = (2.0 / (p.delta + 1.0 / p.mu)) *
                      ((2.0 * p.delta - 1.0) / p.mu - p.delta + 1.0);
    const double bound = std::min(b1, b2);
    const bool bitwise = bound == general_beta_b_bound_pos(p);
    const double A = 1.0;
    auto pass_at = [&](double B) {
        return general_beta_region_pos(p, A, B, A + B + 2.5).pass;
    };
    bool flip = true;
    for (double B = 0.1; B < bound; B += 0.05) flip = flip && pass_at(B);
    flip = flip && pass_at(bound);
    flip = flip && !pass_at(std::nextafter(bound, 1e9));
    flip = flip && !pass_at(bound + 0.05);
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "bound = %.17g, bitwise equal: %d, flip at bound: %d",
                  bound, bitwise ? 1 : 0, flip ? 1 : 0);
    line(7, bitwise && flip, "region boundary exactness", buf);
}

// ---------------------------------------------------------------- 8
void criterion_numeric_hygiene()
{
    bool ok = true;
    std::string detail;

    // lambda'/lambda'' against finite differences
    double worst1 = 0.0, worst2 = 0.0;
    const WeightSpec ws[] = {
        normalize(make_general_beta(1.0, 0.8, 4.2, {0.5, 0.25}), kCfg),
        normalize(make_komatu(1.0, 2.5), kCfg),
    };
    for (const auto& w : ws)
        for (double t : {0.3, 0.5, 0.7}) {
            const double h = 1e-5;
            const double fd1 =
                (lambda_eval(w, t + h) - lambda_eval(w, t - h)) / (2.0 * h);
            const double fd2 =
                (lambda_eval(w, t + h) - 2.0 * lambda_eval(w, t) +
                 lambda_eval(w, t - h)) /
                (h * h);
            worst1 = std::max(worst1,
                              std::abs(lambda_deriv(w, t, 1) - fd1) /
                                  std::max(1.0, std::abs(fd1)));
            worst2 = std::max(worst2,
                              std::abs(lambda_deriv(w, t, 2) - fd2) /
                                  std::max(1.0, std::abs(fd2)));
        }
    ok = ok && worst1 <= 1e-6 && worst2 <= 1e-4;

    // Pi' analytic identity
    auto w = normalize(make_general_beta(1.0, 0.9, 4.1, {0.3}), kCfg);
    auto p = params_from_mu_nu(0.5, 2.0, 1.5, 0.5);
    double worst_pi = 0.0;
    for (double t : {0.3, 0.5, 0.7}) {
        const double h = 1e-4;
        const double fd =
            (Pi_int(w, p, t + h, kCfg) - Pi_int(w, p, t - h, kCfg)) /
            (2.0 * h);
        const double analytic =
            -Lambda_int(w, p, t, kCfg) *
            std::pow(t, -p.delta / p.mu + p.delta / p.nu - 1.0);
        worst_pi = std::max(worst_pi, std::abs(fd - analytic) /
                                          std::max(1.0, std::abs(analytic)));
    }
    ok = ok && worst_pi <= 1e-6;

    // series round trips at order 64
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    double worst_s = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        PowerSeries s(64);
        s.c[0] = 1.0;
        for (int i = 1; i < 64; ++i) s.c[i] = cdouble(u(rng), u(rng));
        auto el = series_exp(series_log(s));
        auto pw = series_pow(series_pow(s, 2.0), 0.5);
        for (int i = 0; i < 64; ++i) {
            worst_s = std::max(worst_s, std::abs(el.c[i] - s.c[i]));
            worst_s = std::max(worst_s, std::abs(pw.c[i] - s.c[i]));
        }
    }
    ok = ok && worst_s <= 1e-10;

    // the three golden quadrature values
    const double g1 = std::abs(
        integrate([](double) { return 1.0; }, kCfg).value - 1.0);
    const double g2 = std::abs(
        integrate([](double t) { return 1.0 / std::sqrt(t); }, kCfg).value -
        2.0);
    const double g3 = std::abs(
        integrate([](double t) { return std::log(1.0 / t); }, kCfg).value -
        1.0);
    ok = ok && g1 <= 1e-10 && g2 <= 1e-9 && g3 <= 1e-10;

    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "lambda' %.1e, lambda'' %.1e, Pi' %.1e, series %.1e, "
                  "quadrature %.1e/%.1e/%.1e",
                  worst1, worst2, worst_pi, worst_s, g1, g2, g3);
    line(8, ok, "numeric hygiene", buf);
}

} // namespace

int main()
{
    criterion_q_agreement();
    criterion_beta_dual_path();
    criterion_moments();
    criterion_sharpness();
    criterion_end_to_end();
    criterion_negative_control();
    criterion_region_boundary();
    criterion_numeric_hygiene();
    if (failures == 0)
        std::printf("acceptance: all criteria PASS\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
