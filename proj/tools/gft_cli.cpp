// Command-line front end: sharp-beta computation, admissibility checks,
// membership verification, parameter sweeps and q-function tables.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "gft/beta_solver.hpp"
#include "gft/sweep.hpp"
#include "gft/transform.hpp"
#include "gft/verifier.hpp"

using nlohmann::json;
using namespace gft;

namespace {

// argument-level failures (unparseable weight, invalid flag combinations)
// exit 1; numeric failures exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WeightSpec parse_weight_arg(const std::string& text)
{
    try {
        return parse_weight(text);
    } catch (const InvalidWeight& e) {
        throw UsageError(std::string("bad --weight: ") + e.what());
    }
}

struct CommonOpts {
    double alpha = 0.0, gamma = 0.0, delta = 1.0, zeta = 0.0;
    std::string weight;
    std::string format = "json"; // json | csv | table
    std::string output;
    double abs_tol = 1e-10, rel_tol = 1e-10;
    int max_level = 10;
    int series_order = 256;
    std::vector<double> grid_r{0.5, 0.9, 0.99};
    int grid_n = 720;
    double tol = 1e-3; // membership tolerance
    long long seed = 0;

    QuadratureConfig quad() const
    {
        QuadratureConfig q;
        q.abs_tol = abs_tol;
        q.rel_tol = rel_tol;
        q.max_level = max_level;
        return q;
    }
    GridSpec grid() const
    {
        GridSpec g;
        g.radii = grid_r;
        g.n_theta = grid_n;
        return g;
    }
};

void add_param_opts(CLI::App* cmd, CommonOpts& o, bool need_weight)
{
    cmd->add_option("--alpha", o.alpha, "class parameter alpha >= 0")
        ->required();
    cmd->add_option("--gamma", o.gamma, "class parameter gamma >= 0")
        ->required();
    cmd->add_option("--delta", o.delta, "transform power delta > 0")
        ->required();
    cmd->add_option("--zeta", o.zeta, "target convexity order zeta")
        ->required();
    auto* wopt = cmd->add_option(
        "--weight", o.weight,
        "weight family: komatu:k,p | cs:b,c | hohlov:a,b,c | "
        "genbeta:A,B,C[,x1,...]");
    if (need_weight) wopt->required();
    cmd->add_option("--format", o.format, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--output", o.output, "write to file instead of stdout");
    cmd->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--max-level", o.max_level, "quadrature refinement cap");
    cmd->add_option("--series-order", o.series_order,
                    "truncation order for coefficient series");
    cmd->add_option("--grid-r", o.grid_r, "membership grid radii");
    cmd->add_option("--grid-n", o.grid_n, "angular samples per circle");
    cmd->add_option("--tol", o.tol, "membership pass tolerance");
    cmd->add_option("--seed", o.seed, "seed for randomized sweeps");
}

void emit(const CommonOpts& o, const std::string& text)
{
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output " + o.output);
    f << text;
}

json params_json(const Params& p)
{
    return json{{"alpha", p.alpha}, {"gamma", p.gamma}, {"delta", p.delta},
                {"zeta", p.zeta},   {"mu", p.mu},       {"nu", p.nu},
                {"xi", p.xi},       {"dual_scope", p.dual_scope},
                {"decreasing_scope", p.decreasing_scope}};
}

json beta_json(const BetaResult& r)
{
    const char* method = r.method == BetaResult::Method::Quadrature
                             ? "quadrature"
                             : (r.method == BetaResult::Method::Series
                                    ? "series"
                                    : "closed-form");
    return json{{"beta", r.beta},
                {"I", r.I},
                {"method", method},
                {"beta_alt_normalization", r.beta_alt},
                {"err_estimate", r.err_estimate},
                {"terms", r.terms}};
}

Report region_report(const Params& p, const WeightSpec& w)
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
    throw InvalidWeight("unknown weight family");
}

// ------------------------------------------------------------------ beta
int cmd_beta(const CommonOpts& o, bool closed_form, bool use_series,
             int n_max)
{
    auto p = derive_params(o.alpha, o.gamma, o.delta, o.zeta);
    auto w = normalize(parse_weight_arg(o.weight), o.quad());
    BetaResult r;
    if (closed_form) {
        if (w.family != WeightFamily::CarlsonShaffer)
            throw UsageError("--closed-form requires a cs: weight");
        r = beta0_cs(p, w.b, w.c);
    } else if (use_series) {
        r = beta_series(p, w, n_max);
    } else {
        r = solve_beta(p, w, o.quad());
    }
    json j = beta_json(r);
    j["weight"] = to_string(w);
    j["params"] = params_json(p);
    if (o.format == "table") {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "beta = %.12g  (I = %.12g, method = %s, alternate "
                      "normalization beta = %.12g)\n",
                      r.beta, r.I, j["method"].get<std::string>().c_str(),
                      r.beta_alt);
        emit(o, buf);
    } else {
        emit(o, j.dump(2) + "\n");
    }
    return 0;
}

// ------------------------------------------------------------------ check
int cmd_check(const CommonOpts& o, bool with_mpi, int z_n, int eps_n)
{
    auto p = derive_params(o.alpha, o.gamma, o.delta, o.zeta);
    auto w = normalize(parse_weight_arg(o.weight), o.quad());
    json j;
    j["params"] = params_json(p);
    j["weight"] = to_string(w);
    Report region = region_report(p, w);
    Report limits = limit_checks(w, p, o.quad());
    auto tg = log_t_grid();
    Report decr = decreasing_condition(p, w, tg, o.quad());
    j["region"] = region.to_json();
    j["limit_checks"] = limits.to_json();
    j["decreasing_condition"] = decr.to_json();
    std::optional<Report> mpi;
    if (with_mpi) {
        auto zg = boundary_z_grid(z_n);
        auto eg = unimodular_grid(eps_n);
        mpi = m_pi_check(p, w, zg, eg, o.quad());
        j["m_pi"] = mpi->to_json();
    }
    if (o.format == "table") {
        std::string s;
        s += "region checks (" + to_string(w) + "):\n" + region.table();
        s += "limit checks:\n" + limits.table();
        s += "decreasing condition:\n" + decr.table();
        if (mpi) s += "M_Pi dual functional:\n" + mpi->table();
        emit(o, s);
    } else {
        emit(o, j.dump(2) + "\n");
    }
    return 0;
}

// ------------------------------------------------------------------ verify
int cmd_verify(const CommonOpts& o)
{
    auto p = derive_params(o.alpha, o.gamma, o.delta, o.zeta);
    auto w = normalize(parse_weight_arg(o.weight), o.quad());
    BetaResult b = solve_beta(p, w, o.quad());
    auto f = extremal_function(p, b.beta, o.series_order);
    auto F = apply_transform(w, f);
    auto g = o.grid();
    Report mem = check_C_membership(F, o.zeta, g, o.tol);
    Report uni = check_univalence_re(F, g);
    // the W check evaluates the raw H series on the outermost circle, whose
    // coefficients need |z|^order <= 1e-8 to be resolved; cap the radius
    GridSpec gw = g;
    const double r_cap = std::exp(std::log(1e-8) / o.series_order);
    while (gw.radii.size() > 1 && gw.radii.back() > r_cap)
        gw.radii.pop_back();
    if (gw.radii.back() > r_cap) gw.radii.back() = r_cap;
    Report wmem = check_W_membership(p, b.beta, f, gw);
    if (gw.radii.back() < g.radii.back()) {
        char note[96];
        std::snprintf(note, sizeof note,
                      "W check radius capped at %.4g for series order %d; ",
                      gw.radii.back(), o.series_order);
        wmem.notes += note;
    }
    json j;
    j["params"] = params_json(p);
    j["weight"] = to_string(w);
    j["beta"] = beta_json(b);
    j["membership"] = mem.to_json();
    j["membership"]["min_value"] = mem.checks.at(0).value;
    j["membership"]["witness_z"] = mem.checks.at(0).witness;
    j["membership"]["grid"] = {{"radii", g.radii}, {"n_theta", g.n_theta}};
    j["membership"]["tolerances"] = {{"membership", o.tol},
                                     {"abs_tol", o.abs_tol},
                                     {"rel_tol", o.rel_tol}};
    j["univalence_re"] = uni.to_json();
    j["w_membership_extremal"] = wmem.to_json();
    if (o.format == "table") {
        char buf[128];
        std::snprintf(buf, sizeof buf, "beta = %.12g (I = %.12g)\n", b.beta,
                      b.I);
        std::string s = buf;
        s += "C_delta(zeta) membership of the transformed extremal:\n" +
             mem.table();
        s += "univalence diagnostic:\n" + uni.table();
        s += "W-class membership of the extremal:\n" + wmem.table();
        emit(o, s);
    } else {
        emit(o, j.dump(2) + "\n");
    }
    // a FAIL verdict is data, not a numeric failure; exit 2 is reserved for
    // quadrature/series breakdowns (thrown upstream)
    return 0;
}

// ------------------------------------------------------------------ qtable
int cmd_qtable(const CommonOpts& o, double t_max, double t_step)
{
    auto p = derive_params(o.alpha, o.gamma, o.delta, o.zeta);
    std::string s =
        "t,q_integral,q_series,q_pfq,max_disagreement\n";
    char buf[200];
    for (double t = 0.0; t <= t_max + 1e-12; t += t_step) {
        const QEval qi = q_eval(p, t, QEval::Method::Integral, o.quad());
        const QEval qs = q_eval(p, t, QEval::Method::Series, o.quad());
        double qp = std::numeric_limits<double>::quiet_NaN();
        double dis = std::abs(qi.value - qs.value);
        if (!p.gamma_zero()) {
            qp = q_eval(p, t, QEval::Method::Pfq, o.quad()).value;
            dis = std::max(dis, std::abs(qs.value - qp));
        }
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g\n", t,
                      qi.value, qs.value, qp, dis);
        s += buf;
    }
    if (p.gamma_zero())
        s += "# gamma=0: the 5F4 representation needs gamma>0; q_pfq is "
             "nan\n";
    emit(o, s);
    return 0;
}

// ------------------------------------------------------------------ sweep
int cmd_sweep(const CommonOpts& o, const std::string& range, int samples,
              int threads)
{
    if (std::count(o.weight.begin(), o.weight.end(), '?') != 1)
        throw UsageError("sweep --weight needs exactly one '?' placeholder");
    SweepConfig cfg;
    cfg.alpha = o.alpha;
    cfg.gamma = o.gamma;
    cfg.delta = o.delta;
    cfg.zeta = o.zeta;
    cfg.weight_pattern = o.weight;
    cfg.samples = samples;
    cfg.seed = static_cast<std::uint64_t>(o.seed);
    cfg.series_order = o.series_order;
    cfg.grid = o.grid();
    cfg.membership_tol = o.tol;
    cfg.quad = o.quad();
    cfg.threads = threads;
    // range grammar lo:hi:n
    {
        double lo, hi;
        int n;
        if (std::sscanf(range.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3)
            throw UsageError("--range expects lo:hi:n");
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.steps = n;
    }
    SweepOutput out = run_sweep(cfg);
    emit(o, out.csv);
    return out.numeric_failure ? 2 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"numerics for the weighted integral transform "
                 "V_lambda^delta on classes of analytic functions"};
    app.require_subcommand(1);

    CommonOpts o;
    bool closed_form = false, use_series = false, with_mpi = false;
    int n_max = 500, z_n = 72, eps_n = 16, samples = 0, threads = 0;
    double t_max = 0.9, t_step = 0.1;
    std::string range = "0:1:11";

    auto* beta = app.add_subcommand("beta", "compute the sharp beta");
    add_param_opts(beta, o, true);
    beta->add_flag("--closed-form", closed_form,
                   "use the closed 6F5 form (cs weights only)");
    beta->add_flag("--series", use_series, "use the moment-series path");
    beta->add_option("--nmax", n_max, "series path truncation");

    auto* check = app.add_subcommand(
        "check", "run admissibility and sufficiency checks for a weight");
    add_param_opts(check, o, true);
    check->add_flag("--mpi", with_mpi, "also evaluate the dual functional");
    check->add_option("--z-n", z_n, "boundary z grid size");
    check->add_option("--eps-n", eps_n, "unimodular eps grid size");

    auto* verify = app.add_subcommand(
        "verify", "solve beta, transform the extremal, check membership");
    add_param_opts(verify, o, true);

    auto* qtable = app.add_subcommand("qtable", "tabulate q by all methods");
    add_param_opts(qtable, o, false);
    qtable->add_option("--t-max", t_max, "last t value");
    qtable->add_option("--t-step", t_step, "t increment");

    auto* sweep = app.add_subcommand(
        "sweep", "sweep one weight slot ('?') over a lattice, emit CSV");
    add_param_opts(sweep, o, true);
    sweep->add_option("--range", range, "swept values lo:hi:n");
    sweep->add_option("--samples", samples,
                      "random samples instead of a lattice");
    sweep->add_option("--threads", threads,
                      "worker threads (0: GFT_THREADS or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n"
                  << "run with --help for usage\n";
        return 1;
    }

    try {
        if (beta->parsed())
            return cmd_beta(o, closed_form, use_series, n_max);
        if (check->parsed()) return cmd_check(o, with_mpi, z_n, eps_n);
        if (verify->parsed()) return cmd_verify(o);
        if (qtable->parsed()) return cmd_qtable(o, t_max, t_step);
        if (sweep->parsed()) return cmd_sweep(o, range, samples, threads);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
