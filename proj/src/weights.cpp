#include "gft/weights.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gft/special.hpp"

namespace gft {

namespace {

double omega_eval(const std::vector<double>& omega, double s)
{
    double acc = 0.0;
    for (std::size_t i = omega.size(); i-- > 0;) acc = acc * s + omega[i];
    return acc;
}

// lambda(t) with the distance to 1 supplied explicitly; near t = 1 the
// factors (1-t)^{C-A-B} and log(1/t) are formed from omt, not 1.0 - t.
double lambda_eval_at(const WeightSpec& w, double t, double omt)
{
    if (w.family == WeightFamily::Komatu) {
        const double L = omt < 0.1 ? -std::log1p(-omt) : std::log(1.0 / t);
        return w.K * std::pow(t, w.k) * std::pow(L, w.p - 1.0);
    }
    return w.K * std::pow(t, w.B - 1.0) *
           std::pow(omt, w.C - w.A - w.B) * omega_eval(w.omega, omt);
}

double omega_deriv(const std::vector<double>& omega, double s, int order)
{
    double acc = 0.0;
    for (std::size_t i = omega.size(); i-- > static_cast<std::size_t>(order);) {
        double f = 1.0;
        for (int j = 0; j < order; ++j) f *= static_cast<double>(i) - j;
        acc = acc * s + f * omega[i];
    }
    return acc;
}

void require_positive(double v, const char* name)
{
    if (!(v > 0.0))
        throw InvalidWeight(std::string("weight parameter ") + name +
                            " must be positive");
}

} // namespace

WeightSpec make_general_beta(double A, double B, double C,
                             std::vector<double> xs)
{
    require_positive(A, "A");
    require_positive(B, "B");
    require_positive(C, "C");
    if (!(C - A - B > 0.0))
        throw InvalidWeight("general beta: C - A - B must be > 0 so that "
                            "lambda(1) = 0");
    WeightSpec w;
    w.family = WeightFamily::GeneralBeta;
    w.A = A;
    w.B = B;
    w.C = C;
    w.omega.assign(1, 1.0);
    for (double x : xs) {
        if (!(x >= 0.0))
            throw InvalidWeight("general beta: omega coefficients must be "
                                "nonnegative");
        w.omega.push_back(x);
    }
    return w;
}

WeightSpec make_hohlov(double a, double b, double c, int omega_terms)
{
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(c, "c");
    if (!(c - a - b >= 0.0))
        throw InvalidWeight("hohlov: need c >= a + b (lambda bounded at 1)");
    if (omega_terms < 1) throw InvalidWeight("hohlov: omega_terms >= 1");
    WeightSpec w;
    w.family = WeightFamily::Hohlov;
    w.a = a;
    w.b = b;
    w.c = c;
    w.A = a;
    w.B = b;
    w.C = c;
    // omega(s) = 2F1(c-a, 1-a; c-a-b+1; s); coefficients must be >= 0
    w.omega.assign(1, 1.0);
    double x = 1.0;
    for (int m = 0; m + 1 < omega_terms; ++m) {
        x *= (c - a + m) * (1.0 - a + m) /
             ((c - a - b + 1.0 + m) * (1.0 + m));
        if (x == 0.0) break; // a is a positive integer: omega is a polynomial
        if (x < -1e-14)
            throw InvalidWeight(
                "hohlov: 2F1(c-a, 1-a; c-a-b+1; .) has a negative "
                "coefficient x_" +
                std::to_string(m + 1) + " = " + std::to_string(x) +
                "; admissibility requires x_n >= 0");
        w.omega.push_back(x < 0.0 ? 0.0 : x);
    }
    w.omega_tail = std::abs(x);
    return w;
}

WeightSpec make_carlson_shaffer(double b, double c)
{
    WeightSpec w = make_hohlov(1.0, b, c);
    w.family = WeightFamily::CarlsonShaffer;
    return w;
}

WeightSpec make_komatu(double k, double p)
{
    if (!(k > -1.0)) throw InvalidWeight("komatu: need k > -1");
    if (!(p >= 1.0)) throw InvalidWeight("komatu: need p >= 1");
    WeightSpec w;
    w.family = WeightFamily::Komatu;
    w.k = k;
    w.p = p;
    return w;
}

WeightSpec parse_weight(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidWeight("weight string: expected family:params");
    const std::string fam = text.substr(0, colon);
    std::vector<double> v;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw InvalidWeight("weight string: bad number '" + item + "'");
        }
    }
    if (fam == "komatu") {
        if (v.size() != 2) throw InvalidWeight("komatu:k,p");
        return make_komatu(v[0], v[1]);
    }
    if (fam == "cs") {
        if (v.size() != 2) throw InvalidWeight("cs:b,c");
        return make_carlson_shaffer(v[0], v[1]);
    }
    if (fam == "hohlov") {
        if (v.size() != 3) throw InvalidWeight("hohlov:a,b,c");
        return make_hohlov(v[0], v[1], v[2]);
    }
    if (fam == "genbeta") {
        if (v.size() < 3) throw InvalidWeight("genbeta:A,B,C[,x1,...]");
        return make_general_beta(v[0], v[1], v[2],
                                 {v.begin() + 3, v.end()});
    }
    throw InvalidWeight("unknown weight family '" + fam + "'");
}

std::string to_string(const WeightSpec& w)
{
    char buf[160];
    switch (w.family) {
    case WeightFamily::Komatu:
        std::snprintf(buf, sizeof buf, "komatu:%g,%g", w.k, w.p);
        return buf;
    case WeightFamily::CarlsonShaffer:
        std::snprintf(buf, sizeof buf, "cs:%g,%g", w.b, w.c);
        return buf;
    case WeightFamily::Hohlov:
        std::snprintf(buf, sizeof buf, "hohlov:%g,%g,%g", w.a, w.b, w.c);
        return buf;
    case WeightFamily::GeneralBeta: {
        std::string s;
        std::snprintf(buf, sizeof buf, "genbeta:%g,%g,%g", w.A, w.B, w.C);
        s = buf;
        for (std::size_t i = 1; i < w.omega.size(); ++i) {
            std::snprintf(buf, sizeof buf, ",%g", w.omega[i]);
            s += buf;
        }
        return s;
    }
    }
    return "?";
}

WeightSpec normalize(WeightSpec w, const QuadratureConfig& cfg)
{
    cfg.validate();
    if (w.family == WeightFamily::Komatu) {
        w.K = std::pow(1.0 + w.k, w.p) / std::tgamma(w.p);
        if (!std::isfinite(w.K) || w.K <= 0.0)
            throw InvalidWeight("normalize: komatu constant out of range");
        return w;
    }
    // 1/K = sum_m x_m B(B, C-A-B+1+m), exact for polynomial omega
    const double cab = w.C - w.A - w.B;
    double inv = 0.0;
    for (std::size_t m = 0; m < w.omega.size(); ++m)
        inv += w.omega[m] *
               beta_function(w.B, cab + 1.0 + static_cast<double>(m));
    if (!(inv > 0.0) || !std::isfinite(inv))
        throw InvalidWeight("normalize: degenerate normalization sum");
    w.K = 1.0 / inv;
    return w;
}

double lambda_eval(const WeightSpec& w, double t)
{
    if (!w.normalized()) throw InvalidWeight("lambda_eval: normalize first");
    if (!(t > 0.0 && t < 1.0))
        throw InvalidParams("lambda_eval: t in (0,1)");
    return lambda_eval_at(w, t, 1.0 - t);
}

double lambda_deriv(const WeightSpec& w, double t, int order)
{
    if (!w.normalized()) throw InvalidWeight("lambda_deriv: normalize first");
    if (!(t > 0.0 && t < 1.0))
        throw InvalidParams("lambda_deriv: t in (0,1)");
    if (order != 1 && order != 2)
        throw InvalidParams("lambda_deriv: order is 1 or 2");

    if (w.family == WeightFamily::Komatu) {
        const double L = std::log(1.0 / t);
        const double k = w.k, p = w.p;
        if (order == 1)
            return w.K * std::pow(t, k - 1.0) * std::pow(L, p - 2.0) *
                   (k * L - (p - 1.0));
        return w.K * std::pow(t, k - 2.0) * std::pow(L, p - 3.0) *
               (k * (k - 1.0) * L * L - (p - 1.0) * (2.0 * k - 1.0) * L +
                (p - 1.0) * (p - 2.0));
    }

    const double B = w.B, cab = w.C - w.A - w.B;
    const double s = 1.0 - t;
    const double om = omega_eval(w.omega, s);
    const double om1 = omega_deriv(w.omega, s, 1);
    if (order == 1)
        return w.K * std::pow(t, B - 2.0) * std::pow(s, cab - 1.0) *
               (((B - 1.0) * s - cab * t) * om - t * s * om1);
    const double om2 = omega_deriv(w.omega, s, 2);
    return w.K * std::pow(t, B - 3.0) * std::pow(s, cab - 2.0) *
           (((B - 1.0) * (B - 2.0) * s * s -
             2.0 * (B - 1.0) * cab * t * s + cab * (cab - 1.0) * t * t) *
                om +
            (2.0 * cab * t - 2.0 * (B - 1.0) * s) * t * s * om1 +
            t * t * s * s * om2);
}

namespace {

// exact moment of the stored (possibly truncated) representation
double beta_sum_moment(const WeightSpec& w, int n)
{
    const double cab = w.C - w.A - w.B;
    double acc = 0.0;
    for (std::size_t m = 0; m < w.omega.size(); ++m)
        acc += w.omega[m] *
               beta_function(w.B + n, cab + 1.0 + static_cast<double>(m));
    return w.K * acc;
}

} // namespace

double moment(const WeightSpec& w, int n)
{
    if (!w.normalized()) throw InvalidWeight("moment: normalize first");
    if (n < 0) throw InvalidParams("moment: n >= 0");
    switch (w.family) {
    case WeightFamily::Komatu:
        return std::pow((1.0 + w.k) / (1.0 + w.k + n), w.p);
    case WeightFamily::Hohlov:
    case WeightFamily::CarlsonShaffer: {
        // the hypergeometric product form describes the untruncated weight;
        // it is used only when the omega expansion terminated exactly, so
        // every consumer sees the same weight as lambda_eval
        if (w.omega_tail == 0.0) {
            double r = 1.0;
            for (int j = 0; j < n; ++j)
                r *= (w.a + j) * (w.b + j) / ((w.c + j) * (1.0 + j));
            return r;
        }
        return beta_sum_moment(w, n);
    }
    case WeightFamily::GeneralBeta:
        return beta_sum_moment(w, n);
    }
    throw InvalidWeight("moment: unknown family");
}

double moment_quad(const WeightSpec& w, int n, const QuadratureConfig& cfg)
{
    QuadResult r = integrate(
        [&](double t) { return std::pow(t, n) * lambda_eval(w, t); }, cfg);
    return r.value;
}

double Lambda_int(const WeightSpec& w, const Params& p, double t,
                  const QuadratureConfig& cfg)
{
    if (!(p.nu > 0.0))
        throw InvalidWeight("Lambda: nu (= alpha when gamma=0) must be > 0");
    if (!(t > 0.0 && t <= 1.0)) throw InvalidParams("Lambda: t in (0,1]");
    if (t == 1.0) return 0.0;
    const double e = p.delta / p.nu;
    const double width = 1.0 - t;
    QuadResult r = integrate_pair(
        [&](double u, double omu) {
            const double s = t + width * u;
            return lambda_eval_at(w, s, width * omu) * std::pow(s, -e);
        },
        cfg);
    return r.value * width;
}

double Pi_int(const WeightSpec& w, const Params& p, double t,
              const QuadratureConfig& cfg)
{
    if (p.gamma_zero()) return Lambda_int(w, p, t, cfg);
    if (!(t > 0.0 && t <= 1.0)) throw InvalidParams("Pi: t in (0,1]");
    if (t == 1.0) return 0.0;
    const double e = p.delta / p.mu - p.delta / p.nu + 1.0;
    QuadratureConfig inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol * 0.1, 5e-12);
    inner.rel_tol = std::max(cfg.rel_tol * 0.1, 5e-12);
    const double width = 1.0 - t;
    QuadResult r = integrate(
        [&](double u) {
            const double s = t + width * u;
            if (s >= 1.0) return 0.0;
            return Lambda_int(w, p, s, inner) * std::pow(s, -e);
        },
        cfg);
    return r.value * width;
}

Report limit_checks(const WeightSpec& w, const Params& p,
                    const QuadratureConfig& cfg)
{
    Report rep;
    const double ts[3] = {1e-2, 1e-3, 1e-4};
    double lam[3], pi[3];
    const double el = p.delta / p.nu;
    for (int i = 0; i < 3; ++i)
        lam[i] = std::pow(ts[i], el) * Lambda_int(w, p, ts[i], cfg);
    {
        CheckItem c;
        c.name = "t^(d/nu)*Lambda decays";
        c.value = lam[2];
        c.threshold = lam[0];
        c.pass = lam[1] < lam[0] && lam[2] < lam[1];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.3e, %.3e, %.3e", lam[0], lam[1],
                      lam[2]);
        c.witness = buf;
        rep.add(std::move(c));
    }
    if (!p.gamma_zero()) {
        const double ep = p.delta / p.mu;
        for (int i = 0; i < 3; ++i)
            pi[i] = std::pow(ts[i], ep) * Pi_int(w, p, ts[i], cfg);
        CheckItem c;
        c.name = "t^(d/mu)*Pi decays";
        c.value = pi[2];
        c.threshold = pi[0];
        c.pass = pi[1] < pi[0] && pi[2] < pi[1];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.3e, %.3e, %.3e", pi[0], pi[1],
                      pi[2]);
        c.witness = buf;
        rep.add(std::move(c));
    }
    const bool vanishes = w.family == WeightFamily::Komatu
                              ? w.p >= 2.0
                              : (w.C - w.A - w.B) >= 1.0;
    if (vanishes) {
        CheckItem c;
        c.name = "lambda(1) = 0";
        c.value = lambda_eval(w, 1.0 - 1e-8);
        c.threshold = 1e-6 * w.K;
        c.pass = c.value < c.threshold;
        rep.add(std::move(c));
    } else {
        rep.notes += "lambda(1)=0 check skipped: boundary exponent < 1; ";
    }
    return rep;
}

WeightTails::WeightTails(const WeightSpec& w, const Params& p)
    : gamma_zero_(p.gamma_zero())
{
    if (!w.normalized()) throw InvalidWeight("WeightTails: normalize first");
    if (!(p.nu > 0.0)) throw InvalidWeight("WeightTails: nu must be > 0");
    const double el = p.delta / p.nu;
    WeightSpec wc = w;
    lambda_tail_ = std::make_shared<TailIntegralTable>(
        [wc, el](double s, double oms) {
            return lambda_eval_at(wc, s, oms) * std::pow(s, -el);
        });
    if (!gamma_zero_) {
        const double ep = p.delta / p.mu - p.delta / p.nu + 1.0;
        auto lt = lambda_tail_;
        pi_tail_ = std::make_shared<TailIntegralTable>(
            [lt, ep](double s, double) { return (*lt)(s)*std::pow(s, -ep); });
    }
}

double WeightTails::Lambda(double t) const { return (*lambda_tail_)(t); }

double WeightTails::Pi(double t) const
{
    return gamma_zero_ ? (*lambda_tail_)(t) : (*pi_tail_)(t);
}

double WeightTails::floor() const { return lambda_tail_->floor_value(); }

} // namespace gft
