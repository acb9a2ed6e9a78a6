#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

// Pochhammer symbol (eps)_n = eps (eps+1) ... (eps+n-1), (eps)_0 = 1.
// Overflow is reported as +-infinity, not an error.
double pochhammer(double eps, int n);

double log_beta(double a, double b);
double beta_function(double a, double b);

template <class T>
struct AccelSum {
    T value{};
    double err = 0.0; // estimate from the last averaging level
};

// Iterated pairwise averaging (Euler transform in van Wijngaarden form)
// applied to the tail of a partial-sum sequence. Sums alternating series
// including the Abel-boundary case where terms tend to a nonzero constant
// or grow polynomially.
template <class T>
AccelSum<T> euler_tail_average(std::span<const T> partial_sums, int block = 48)
{
    const int m = static_cast<int>(partial_sums.size());
    if (m == 0) throw InvalidParams("euler_tail_average: empty sequence");
    int k = block < m ? block : m;
    std::vector<T> buf(partial_sums.end() - k, partial_sums.end());
    T prev = buf[0];
    for (int lev = 1; lev < k; ++lev) {
        for (int i = 0; i + lev < k; ++i)
            buf[i] = 0.5 * (buf[i] + buf[i + 1]);
        prev = (lev == k - 1) ? prev : buf[0];
    }
    AccelSum<T> r;
    r.value = buf[0];
    r.err = std::abs(buf[0] - prev);
    return r;
}

struct PfqResult {
    double value = 0.0;
    double err = 0.0;
    int terms = 0;
    bool accelerated = false;
};

// Generalized hypergeometric series sum_n prod(num_i)_n / (prod(den_j)_n n!) z^n
// for z in [-1, 0], by term-ratio recursion. For |z| > 0.9 the alternating
// tail is Euler-accelerated after 50 raw terms, which also covers the
// Abel-summable boundary series with sum(den) - sum(num) = -1 at z = -1.
PfqResult pfq_full(std::span<const double> num, std::span<const double> den,
                   double z, double tol);

double pfq(std::span<const double> num, std::span<const double> den,
           double z, double tol);

} // namespace gft
