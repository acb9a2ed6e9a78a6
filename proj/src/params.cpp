#include "gft/params.hpp"

#include <cmath>

namespace gft {

namespace {

void set_scope_flags(Params& p)
{
    p.dual_scope = p.delta >= 1.0 && p.xi >= 0.0 && p.xi <= 0.5;
    p.decreasing_scope =
        p.dual_scope && p.mu >= 0.5 && p.mu <= 1.0 && p.nu >= 1.0;
    // delta <= 1/(1-zeta) is xi >= 0
    p.abstract_scope = p.zeta >= 0.0 && p.zeta < 1.0 && p.xi >= 0.0;
}

} // namespace

Params derive_params(double alpha, double gamma, double delta, double zeta)
{
    if (!(alpha >= 0.0)) throw InvalidParams("derive_params: alpha >= 0");
    if (!(gamma >= 0.0)) throw InvalidParams("derive_params: gamma >= 0");
    if (!(delta > 0.0)) throw InvalidParams("derive_params: delta > 0");

    Params p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.delta = delta;
    p.zeta = zeta;

    if (gamma == 0.0) {
        p.mu = 0.0;
        p.nu = alpha;
    } else {
        const double s = alpha - gamma; // mu + nu
        if (s < 0.0)
            throw NegativeRoots("derive_params: alpha - gamma < 0 with "
                                "gamma > 0 gives negative roots");
        const double disc = s * s - 4.0 * gamma;
        if (disc < 0.0)
            throw ComplexRoots("derive_params: (alpha-gamma)^2 < 4 gamma "
                               "gives complex mu, nu");
        const double root = std::sqrt(disc);
        p.mu = 0.5 * (s - root);
        p.nu = 0.5 * (s + root);
    }
    p.xi = 1.0 - delta * (1.0 - zeta);
    set_scope_flags(p);
    return p;
}

Params params_from_mu_nu(double mu, double nu, double delta, double zeta)
{
    if (!(mu >= 0.0) || !(nu >= 0.0) || mu > nu)
        throw InvalidParams("params_from_mu_nu: need 0 <= mu <= nu");
    return derive_params(mu + nu + mu * nu, mu * nu, delta, zeta);
}

} // namespace gft
