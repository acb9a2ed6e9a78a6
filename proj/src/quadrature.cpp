#include "gft/quadrature.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <mutex>

namespace gft {

namespace {

constexpr double kH0 = 0.5;
constexpr double kUMax = 6.5;
constexpr int kMaxTableLevel = 12;
// Left nodes survive down to ~1e-280 so algebraic t^{p-1} singularities are
// resolved for p down to ~0.05. Right nodes stop at 1e-12: integrands f(t)
// recompute 1-t themselves, which loses all precision closer in, and every
// weight family here is bounded at t = 1.
constexpr double kMinDistance = 1e-280;
constexpr double kMinRightDistance = 1e-12;

// Node abscissae u = j*h with weights for the trapezoid in u. The level-0
// set holds all j; each finer level holds only the odd multiples of its h.
struct LevelNodes {
    std::vector<DENode> nodes; // weight excludes the step factor h
};

// t(u) and 1-t(u) from x = tanh((pi/2) sinh u) mapped to (0,1) via
// t = (1+x)/2, kept in exponential form so both endpoint distances stay
// accurate: tau = (1-|x|)/2 = e/(1+e) with e = exp(-pi sinh|u|).
// The weight pi cosh(u) e/(1+e)^2 already includes the interval halving.
bool make_node(double u, DENode& out)
{
    const double s = 1.5707963267948966 * std::sinh(u);
    const double e = std::exp(-2.0 * std::abs(s));
    const double denom = 1.0 + e;
    const double weight =
        3.141592653589793 * std::cosh(u) * e / (denom * denom);
    const double tau = e / denom;
    if (tau < kMinDistance || weight < kMinDistance) return false;
    if (u >= 0.0) {
        if (tau < kMinRightDistance) return false;
        out.t = 1.0 - tau;
        out.one_minus_t = tau;
    } else {
        out.t = tau;
        out.one_minus_t = 1.0 - tau;
    }
    out.w = weight;
    return true;
}

const LevelNodes& level_nodes(int level)
{
    static std::vector<LevelNodes> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (cache.empty()) {
        cache.resize(kMaxTableLevel + 1);
        for (int lev = 0; lev <= kMaxTableLevel; ++lev) {
            const double h = kH0 / static_cast<double>(1 << lev);
            auto& dst = cache[lev].nodes;
            if (lev == 0) {
                for (long j = static_cast<long>(-kUMax / h); j * h <= kUMax;
                     ++j) {
                    DENode n;
                    if (make_node(j * h, n)) dst.push_back(n);
                }
            } else {
                for (long j = static_cast<long>(-kUMax / h) | 1; j * h <= kUMax;
                     j += 2) {
                    DENode n;
                    if (make_node(j * h, n)) dst.push_back(n);
                }
            }
        }
    }
    if (level < 0 || level > kMaxTableLevel)
        throw InvalidParams("de level out of table range");
    return cache[level];
}

} // namespace

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw InvalidParams("QuadratureConfig: tolerances must be positive");
    if (max_level < 3)
        throw InvalidParams("QuadratureConfig: max_level must be >= 3");
}

const std::vector<DENode>& de_nodes(int level)
{
    static std::vector<std::vector<DENode>> full;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (full.empty()) full.resize(kMaxTableLevel + 1);
    if (level < 0 || level > kMaxTableLevel)
        throw InvalidParams("de level out of table range");
    if (full[level].empty()) {
        const double h = kH0 / static_cast<double>(1 << level);
        std::vector<DENode> all;
        for (int lev = 0; lev <= level; ++lev)
            for (const auto& n : level_nodes(lev).nodes) all.push_back(n);
        for (auto& n : all) n.w *= h;
        std::sort(all.begin(), all.end(),
                  [](const DENode& a, const DENode& b) { return a.t < b.t; });
        full[level] = std::move(all);
    }
    return full[level];
}

QuadResult integrate_pair(const std::function<double(double, double)>& f,
                          const QuadratureConfig& cfg)
{
    cfg.validate();
    const int cap = std::min(cfg.max_level, kMaxTableLevel);
    QuadResult r;
    double sum = 0.0; // trapezoid sum excluding the step factor
    double prev = 0.0;
    for (int lev = 0; lev <= cap; ++lev) {
        const double h = kH0 / static_cast<double>(1 << lev);
        for (const auto& n : level_nodes(lev).nodes) {
            const double v = f(n.t, n.one_minus_t);
            if (!std::isfinite(v))
                throw PrecisionLoss("integrate: non-finite integrand value");
            sum += n.w * v;
            ++r.evals;
        }
        const double value = h * sum;
        r.levels_used = lev;
        if (lev >= 2) {
            // floor covers summation roundoff and the dropped right sliver
            // (~1e-12 * f near 1); below ~4e-12 relative is not reachable
            r.err_estimate = std::abs(value - prev) +
                             4e-12 * std::max(1.0, std::abs(value));
            r.value = value;
            const double goal =
                std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
            if (r.err_estimate <= goal) return r;
        } else {
            r.value = value;
        }
        prev = value;
    }
    const double goal = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value));
    if (r.err_estimate > goal) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "integrate: residual %.3e above tolerance %.3e at "
                      "max_level",
                      r.err_estimate, goal);
        throw ToleranceNotMet(buf);
    }
    return r;
}

QuadResult integrate(const std::function<double(double)>& f,
                     const QuadratureConfig& cfg)
{
    return integrate_pair([&f](double t, double) { return f(t); }, cfg);
}

QuadResult integrate2d(const std::function<double(double, double)>& f,
                       const QuadratureConfig& cfg)
{
    cfg.validate();
    QuadratureConfig inner = cfg;
    // tighten below the outer target but stay above the accuracy floor
    inner.abs_tol = std::max(cfg.abs_tol * 0.1, 5e-12);
    inner.rel_tol = std::max(cfg.rel_tol * 0.1, 5e-12);
    QuadResult outer = integrate(
        [&](double x) {
            return integrate([&](double y) { return f(x, y); }, inner).value;
        },
        cfg);
    return outer;
}

namespace {

// 8-point Gauss-Legendre on [-1,1]
const double kGx[4] = {0.1834346424956498, 0.5255324099163290,
                       0.7966664774136267, 0.9602898564975363};
const double kGw[4] = {0.3626837833783620, 0.3137066458778873,
                       0.2223810344533745, 0.1012285362903763};

// int_a^b g(s, 1-s) ds for an interior segment: 1-s is formed as
// (b - s) + (1 - b), both nonnegative, so no cancellation.
double gauss_segment(const std::function<double(double, double)>& g,
                     double a, double b)
{
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    const double omb = 1.0 - b;
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double hi = c + hw * kGx[i];
        const double lo = c - hw * kGx[i];
        s += kGw[i] * (g(hi, (b - hi) + omb) + g(lo, (b - lo) + omb));
    }
    return hw * s;
}

// int_t^1 g(s, 1-s) ds with s = t + w u, 1-s = w (1-u): the DE node pair
// (u, 1-u) keeps the distance to 1 exact however small w is.
double de_tail_segment(const std::function<double(double, double)>& g,
                       double t)
{
    const double w = 1.0 - t;
    QuadratureConfig qc;
    qc.abs_tol = 1e-10;
    qc.rel_tol = 1e-10;
    qc.max_level = 9;
    return integrate_pair(
               [&](double u, double omu) { return g(t + w * u, w * omu); },
               qc)
               .value *
           w;
}

} // namespace

TailIntegralTable::TailIntegralTable(std::function<double(double, double)> g,
                                     double floor, int segments)
    : g_(std::move(g)), floor_(floor)
{
    if (!(floor > 0.0 && floor < 1.0) || segments < 8)
        throw InvalidParams("TailIntegralTable: bad floor/segments");
    breaks_.resize(static_cast<std::size_t>(segments) + 1);
    const double l0 = std::log(floor);
    for (int i = 0; i <= segments; ++i)
        breaks_[static_cast<std::size_t>(i)] =
            std::exp(l0 * (1.0 - static_cast<double>(i) / segments));
    breaks_.back() = 1.0;

    std::vector<double> seg(static_cast<std::size_t>(segments));
    for (int i = 0; i < segments; ++i) {
        const double a = breaks_[static_cast<std::size_t>(i)];
        const double b = breaks_[static_cast<std::size_t>(i) + 1];
        seg[static_cast<std::size_t>(i)] =
            (i == segments - 1) ? de_tail_segment(g_, a)
                                : gauss_segment(g_, a, b);
    }
    suffix_.assign(breaks_.size(), 0.0);
    for (int i = segments - 1; i >= 0; --i)
        suffix_[static_cast<std::size_t>(i)] =
            suffix_[static_cast<std::size_t>(i) + 1] +
            seg[static_cast<std::size_t>(i)];
}

double TailIntegralTable::operator()(double t) const
{
    if (t >= 1.0) return 0.0;
    if (t < floor_) t = floor_;
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
    if (idx == 0) idx = 1;
    if (idx >= breaks_.size()) idx = breaks_.size() - 1;
    const double b = breaks_[idx];
    const double part =
        b >= 1.0 ? de_tail_segment(g_, t) : gauss_segment(g_, t, b);
    return part + suffix_[idx];
}

} // namespace gft
