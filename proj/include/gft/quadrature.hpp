#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

// Settings for the tanh-sinh (double-exponential) rule on (0,1).
// The rule tolerates algebraic t^{p-1} (p>0) and logarithmic (log 1/t)^q
// endpoint behaviour without substitutions.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_level = 10;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0; // |I_level - I_{level-1}| of the final level
    int levels_used = 0;
    std::size_t evals = 0;
};

// One abscissa of the rule. `t` and `one_minus_t` are both computed from the
// stable exponential forms so endpoint distances stay accurate down to ~1e-280.
struct DENode {
    double t;
    double one_minus_t;
    double w; // includes the step h of the level
};

// Full node set of the trapezoid at refinement level `level` (0-based,
// spacing h = 0.5 / 2^level). Cached; usable for fixed-level weighted sums.
const std::vector<DENode>& de_nodes(int level);

// Integrate f over (0,1). Throws ToleranceNotMet when max_level is reached
// with the residual still above tolerance.
QuadResult integrate(const std::function<double(double)>& f,
                     const QuadratureConfig& cfg);

// Same rule, but the integrand receives (t, 1-t) with the endpoint distance
// taken from the node table. Required when f needs 1-t to much better than
// the subtraction 1.0 - t can give (weights with (1-t)^c factors near 1).
QuadResult integrate_pair(const std::function<double(double, double)>& f,
                          const QuadratureConfig& cfg);

// Nested application over (0,1)^2; the inner integral runs at a tightened
// tolerance so its noise stays below the outer target.
QuadResult integrate2d(const std::function<double(double, double)>& f,
                       const QuadratureConfig& cfg);

// Cumulative Gauss-Legendre table for tail integrals F(t) = int_t^1 g(s) ds
// with g singular at most at s=0 and bounded at s=1. The integrand receives
// (s, 1-s) so weights with (1-s)^c factors stay accurate arbitrarily close
// to 1. Segments are log-spaced down to `floor`; the segment touching s=1 is
// integrated with the DE rule. Evaluation is O(log n).
class TailIntegralTable {
public:
    TailIntegralTable(std::function<double(double, double)> g,
                      double floor = 1e-12, int segments = 2400);

    // F(t) for t in [floor, 1]; t below floor clamps (callers clip first).
    double operator()(double t) const;

    double floor_value() const { return floor_; }

private:
    std::function<double(double, double)> g_;
    double floor_;
    std::vector<double> breaks_;  // ascending, breaks_.front()=floor, back()=1
    std::vector<double> suffix_;  // suffix_[i] = int_{breaks_[i]}^1 g
};

} // namespace gft
