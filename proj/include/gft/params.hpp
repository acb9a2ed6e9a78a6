#pragma once

#include "gft/errors.hpp"

namespace gft {

// Parameter bundle (alpha, gamma, delta, zeta) with the derived quantities
// mu, nu (mu nu = gamma, mu + nu = alpha - gamma, mu <= nu) and
// xi = 1 - delta (1 - zeta).
struct Params {
    double alpha = 0.0;
    double gamma = 0.0;
    double delta = 1.0;
    double zeta = 0.0;

    double mu = 0.0;
    double nu = 0.0;
    double xi = 0.0;

    // Range flags, recorded rather than enforced so the CLI can map where
    // hypotheses fail.
    // dual_scope: delta >= 1 and xi in [0, 1/2], the window of the
    // dual-functional characterization.
    // decreasing_scope: additionally mu in [1/2, 1] and nu >= 1, needed by
    // the decreasing-ratio sufficient condition.
    // abstract_scope: the weaker admissibility 0 < delta <= 1/(1-zeta),
    // 0 <= zeta < 1; differs from dual_scope on the upper zeta side, both
    // are recorded.
    bool dual_scope = false;
    bool decreasing_scope = false;
    bool abstract_scope = false;

    bool gamma_zero() const { return gamma == 0.0; }
};

// Solve x^2 - (alpha-gamma) x + gamma = 0 for (mu, nu); gamma = 0 gives
// (0, alpha). Throws ComplexRoots / NegativeRoots when the required real
// nonnegative root assumption fails, InvalidParams on domain violations.
Params derive_params(double alpha, double gamma, double delta, double zeta);

// Convenience inverse: reconstruct (alpha, gamma) from mu, nu > 0.
Params params_from_mu_nu(double mu, double nu, double delta, double zeta);

} // namespace gft
