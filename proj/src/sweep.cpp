#include "gft/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "gft/beta_solver.hpp"
#include "gft/verifier.hpp"

namespace gft {

namespace {

std::string substitute(const std::string& pattern, double value)
{
    const auto pos = pattern.find('?');
    if (pos == std::string::npos || pattern.find('?', pos + 1) !=
                                        std::string::npos)
        throw InvalidParams("sweep: weight pattern needs exactly one '?'");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return pattern.substr(0, pos) + buf + pattern.substr(pos + 1);
}

Report region_for(const Params& p, const WeightSpec& w)
{
    switch (w.family) {
    case WeightFamily::GeneralBeta:
        return p.gamma_zero() ? general_beta_region_zero(p, w.A, w.B, w.C)
                              : general_beta_region_pos(p, w.A, w.B, w.C);
    case WeightFamily::Hohlov:
        return hohlov_region(p, w.a, w.b, w.c);
    case WeightFamily::CarlsonShaffer:
        return cs_region(p, w.b, w.c);
    case WeightFamily::Komatu:
        return komatu_region(p, w.k, w.p);
    }
    throw InvalidWeight("sweep: unknown family");
}

int thread_count(int requested, std::size_t jobs)
{
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("GFT_THREADS")) n = std::atoi(env);
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (static_cast<std::size_t>(n) > jobs) n = static_cast<int>(jobs);
    return n;
}

} // namespace

SweepOutput run_sweep(const SweepConfig& cfg)
{
    cfg.quad.validate();
    cfg.grid.validate();
    if (cfg.steps < 1 && cfg.samples <= 0)
        throw InvalidParams("sweep: need steps >= 1 or samples > 0");
    substitute(cfg.weight_pattern, cfg.lo); // validate the placeholder early

    std::vector<double> values;
    if (cfg.samples > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> u(cfg.lo, cfg.hi);
        values.resize(static_cast<std::size_t>(cfg.samples));
        for (auto& v : values) v = u(rng);
    } else if (cfg.steps == 1) {
        values.push_back(cfg.lo);
    } else {
        values.resize(static_cast<std::size_t>(cfg.steps));
        for (int i = 0; i < cfg.steps; ++i)
            values[static_cast<std::size_t>(i)] =
                cfg.lo + (cfg.hi - cfg.lo) * i / (cfg.steps - 1.0);
    }

    SweepOutput out;
    out.rows.resize(values.size());

    auto worker_body = [&](std::size_t idx) {
        SweepRow& row = out.rows[idx];
        row.value = values[idx];
        try {
            row.weight = substitute(cfg.weight_pattern, values[idx]);
            WeightSpec w = normalize(parse_weight(row.weight), cfg.quad);
            Params p =
                derive_params(cfg.alpha, cfg.gamma, cfg.delta, cfg.zeta);
            row.region_pass = region_for(p, w).pass;
            auto grid = log_t_grid();
            row.decreasing_pass =
                decreasing_condition(p, w, grid, cfg.quad).pass;
            BetaResult b = solve_beta(p, w, cfg.quad);
            row.beta = b.beta;
            AnalyticFn f =
                extremal_function(p, b.beta, cfg.series_order);
            AnalyticFn F = apply_transform(w, f);
            Report mem = check_C_membership(F, cfg.zeta, cfg.grid,
                                            cfg.membership_tol);
            row.membership_min = mem.checks.at(0).value;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    const int nthreads = thread_count(cfg.threads, values.size());
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < values.size(); ++i) worker_body(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= out.rows.size()) return;
                    worker_body(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    std::ostringstream csv;
    csv << "alpha,gamma,delta,zeta,weight,beta,region_pass,decreasing_pass,"
           "membership_min\n";
    char buf[256];
    for (const auto& row : out.rows) {
        if (!row.error.empty()) {
            out.numeric_failure = true;
            csv << "# error: weight=" << row.weight << ": " << row.error
                << "\n";
            break;
        }
        // the weight field carries commas, so it is always quoted
        std::snprintf(buf, sizeof buf,
                      "%.10g,%.10g,%.10g,%.10g,\"%s\",%.10g,%d,%d,%.10g\n",
                      cfg.alpha, cfg.gamma, cfg.delta, cfg.zeta,
                      row.weight.c_str(), row.beta, row.region_pass ? 1 : 0,
                      row.decreasing_pass ? 1 : 0, row.membership_min);
        csv << buf;
    }
    out.csv = csv.str();
    return out;
}

} // namespace gft
