#include "gft/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "gft/special.hpp"

namespace gft {

namespace {

int common_order(const PowerSeries& a, const PowerSeries& b)
{
    return std::min(a.order(), b.order());
}

void check_finite(const PowerSeries& s, const char* op)
{
    for (const auto& v : s.c)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw PrecisionLoss(std::string(op) +
                                ": non-finite series coefficient");
}

void require_unit_head(const PowerSeries& s, const char* op)
{
    if (s.order() == 0 || std::abs(s.c[0] - cdouble(1.0)) > 1e-12)
        throw InvalidParams(std::string(op) + ": requires c[0] = 1");
}

} // namespace

PowerSeries PowerSeries::one(int order)
{
    PowerSeries s(order);
    if (order > 0) s.c[0] = 1.0;
    return s;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b)
{
    const int n = common_order(a, b);
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) {
        cdouble acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += a.c[j] * b.c[i - j];
        r.c[i] = acc;
    }
    check_finite(r, "series_mul");
    return r;
}

PowerSeries series_div(const PowerSeries& a, const PowerSeries& b)
{
    const int n = common_order(a, b);
    if (n == 0 || std::abs(b.c[0]) < 1e-300)
        throw InvalidParams("series_div: divisor c[0] = 0");
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) {
        cdouble acc = a.c[i];
        for (int j = 1; j <= i; ++j) acc -= b.c[j] * r.c[i - j];
        r.c[i] = acc / b.c[0];
    }
    check_finite(r, "series_div");
    return r;
}

PowerSeries series_log(const PowerSeries& s)
{
    require_unit_head(s, "series_log");
    const int n = s.order();
    PowerSeries r(n); // r[0] = 0
    for (int i = 1; i < n; ++i) {
        cdouble acc = static_cast<double>(i) * s.c[i];
        for (int j = 1; j < i; ++j)
            acc -= static_cast<double>(j) * r.c[j] * s.c[i - j];
        r.c[i] = acc / static_cast<double>(i);
    }
    check_finite(r, "series_log");
    return r;
}

PowerSeries series_exp(const PowerSeries& s)
{
    const int n = s.order();
    if (n == 0 || std::abs(s.c[0]) > 1e-12)
        throw InvalidParams("series_exp: requires c[0] = 0");
    PowerSeries r(n);
    r.c[0] = 1.0;
    for (int i = 1; i < n; ++i) {
        cdouble acc = 0.0;
        for (int j = 1; j <= i; ++j)
            acc += static_cast<double>(j) * s.c[j] * r.c[i - j];
        r.c[i] = acc / static_cast<double>(i);
    }
    check_finite(r, "series_exp");
    return r;
}

PowerSeries series_pow(const PowerSeries& s, double p)
{
    require_unit_head(s, "series_pow");
    PowerSeries l = series_log(s);
    for (auto& v : l.c) v *= p;
    return series_exp(l);
}

PowerSeries series_derivative(const PowerSeries& s)
{
    const int n = s.order();
    PowerSeries r(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) r.c[i - 1] = static_cast<double>(i) * s.c[i];
    return r;
}

cdouble series_eval(const PowerSeries& s, cdouble z)
{
    cdouble acc = 0.0;
    for (int i = s.order() - 1; i >= 0; --i) acc = acc * z + s.c[i];
    return acc;
}

cdouble series_eval_boundary(const PowerSeries& s, cdouble z, int block)
{
    const int n = s.order();
    if (n == 0) return 0.0;
    std::vector<cdouble> partial(static_cast<std::size_t>(n));
    cdouble sum = 0.0, zp = 1.0;
    for (int i = 0; i < n; ++i) {
        sum += s.c[i] * zp;
        partial[static_cast<std::size_t>(i)] = sum;
        zp *= z;
    }
    return euler_tail_average<cdouble>(partial, block).value;
}

} // namespace gft
