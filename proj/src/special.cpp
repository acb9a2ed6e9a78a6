#include "gft/special.hpp"

#include <cmath>

namespace gft {

double pochhammer(double eps, int n)
{
    if (n < 0) throw InvalidParams("pochhammer: n must be nonnegative");
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= eps + i;
    return r;
}

double log_beta(double a, double b)
{
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_function(double a, double b)
{
    return std::exp(log_beta(a, b));
}

namespace {

bool is_nonpositive_integer(double d)
{
    return d <= 0.0 && std::abs(d - std::round(d)) < 1e-12;
}

} // namespace

PfqResult pfq_full(std::span<const double> num, std::span<const double> den,
                   double z, double tol)
{
    if (num.size() > den.size() + 1)
        throw InvalidParams("pfq: require #num <= #den + 1");
    for (double d : den)
        if (is_nonpositive_integer(d))
            throw InvalidParams("pfq: denominator parameter is a pole");
    if (z < -1.0 || z > 1e-14)
        throw InvalidParams("pfq: argument must lie in [-1, 0]");
    if (!(tol > 0.0)) throw InvalidParams("pfq: tol must be positive");

    PfqResult r;
    if (z == 0.0) {
        r.value = 1.0;
        return r;
    }

    const bool boundary = std::abs(z) > 0.9;
    const int cap = boundary ? 700 : 200000;
    double term = 1.0, sum = 0.0;
    std::vector<double> partial;
    if (boundary) partial.reserve(static_cast<std::size_t>(cap));

    int n = 0;
    int quiet = 0; // consecutive negligible terms
    for (; n < cap; ++n) {
        sum += term;
        if (boundary) partial.push_back(sum);
        if (!std::isfinite(sum)) throw PrecisionLoss("pfq: sum overflow");
        if (std::abs(term) <= tol * 0.01 * (std::abs(sum) + 1.0)) {
            if (++quiet >= 2 && (!boundary || n >= 50)) {
                ++n;
                break;
            }
        } else {
            quiet = 0;
        }
        double ratio = z / (n + 1.0);
        for (double a : num) ratio *= a + n;
        for (double d : den) ratio /= d + n;
        term *= ratio;
        if (term == 0.0) { // polynomial case: a numerator hit zero
            sum += 0.0;
            ++n;
            break;
        }
    }
    r.terms = n;
    if (!boundary) {
        if (n >= cap)
            throw NonConvergent("pfq: series failed to converge within cap");
        r.value = sum;
        r.err = std::abs(term);
        return r;
    }
    if (quiet >= 2 || std::abs(term) <= tol * 0.01 * (std::abs(sum) + 1.0)) {
        r.value = sum;
        r.err = std::abs(term);
        return r;
    }
    auto acc = euler_tail_average<double>(partial, 64);
    r.value = acc.value;
    r.err = acc.err;
    r.accelerated = true;
    const double goal = std::max(tol, 1e-14 * (std::abs(acc.value) + 1.0));
    if (!(acc.err <= goal))
        throw NonConvergent("pfq: acceleration stalled, err " +
                            std::to_string(acc.err));
    return r;
}

double pfq(std::span<const double> num, std::span<const double> den, double z,
           double tol)
{
    return pfq_full(num, den, z, tol).value;
}

} // namespace gft
