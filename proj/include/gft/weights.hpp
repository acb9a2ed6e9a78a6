#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gft/params.hpp"
#include "gft/quadrature.hpp"
#include "gft/report.hpp"

namespace gft {

enum class WeightFamily { GeneralBeta, Hohlov, CarlsonShaffer, Komatu };

// Admissible weight lambda(t) on (0,1). All families except Komatu are
// realized as lambda(t) = K t^{B-1} (1-t)^{C-A-B} omega(1-t) with
// omega(s) = 1 + sum_m x_m s^m, x_m >= 0. Komatu keeps its native form
// K t^k (log 1/t)^{p-1}. Immutable after normalize().
struct WeightSpec {
    WeightFamily family = WeightFamily::GeneralBeta;

    // general-beta realization (valid for every family but Komatu)
    double A = 0.0, B = 0.0, C = 0.0;
    std::vector<double> omega; // omega[0] = 1

    // native parameters
    double a = 0.0, b = 0.0, c = 0.0; // hohlov / carlson-shaffer
    double k = 0.0, p = 0.0;          // komatu

    double K = std::numeric_limits<double>::quiet_NaN();
    double omega_tail = 0.0; // bound on the dropped omega mass (hohlov)

    bool normalized() const { return std::isfinite(K); }
};

WeightSpec make_general_beta(double A, double B, double C,
                             std::vector<double> xs = {});
WeightSpec make_hohlov(double a, double b, double c, int omega_terms = 128);
WeightSpec make_carlson_shaffer(double b, double c);
WeightSpec make_komatu(double k, double p);

// CLI grammar: hohlov:a,b,c | cs:b,c | komatu:k,p | genbeta:A,B,C[,x1,...]
WeightSpec parse_weight(const std::string& text);
std::string to_string(const WeightSpec& w);

// Set K so that int_0^1 lambda = 1: exact Beta-function sum for the
// general-beta realization, (1+k)^p / Gamma(p) for Komatu.
WeightSpec normalize(WeightSpec w, const QuadratureConfig& cfg);

double lambda_eval(const WeightSpec& w, double t);

// Printed lambda' / lambda'' formulas for general-beta families; Komatu uses
// its own analytic derivative. order is 1 or 2.
double lambda_deriv(const WeightSpec& w, double t, int order);

// tau_n = int_0^1 t^n lambda(t) dt, closed forms per family.
double moment(const WeightSpec& w, int n);

// Quadrature path, used as the independent oracle for moment().
double moment_quad(const WeightSpec& w, int n, const QuadratureConfig& cfg);

// Lambda_nu(t) = int_t^1 lambda(s) s^{-delta/nu} ds  (nu = alpha when gamma=0)
double Lambda_int(const WeightSpec& w, const Params& p, double t,
                  const QuadratureConfig& cfg);

// Pi(t) = int_t^1 Lambda_nu(s) s^{-(delta/mu - delta/nu + 1)} ds for gamma>0;
// Lambda_alpha(t) for gamma=0.
double Pi_int(const WeightSpec& w, const Params& p, double t,
              const QuadratureConfig& cfg);

// Numerical decay check of t^{delta/nu} Lambda(t) (and t^{delta/mu} Pi(t) for
// gamma>0) at t in {1e-2, 1e-3, 1e-4}; report-only.
Report limit_checks(const WeightSpec& w, const Params& p,
                    const QuadratureConfig& cfg);

// Fast Lambda/Pi evaluation for grid-heavy callers (verifier). Built once per
// (weight, params); values match the direct quadrature path to ~1e-10.
class WeightTails {
public:
    WeightTails(const WeightSpec& w, const Params& p);

    double Lambda(double t) const;
    double Pi(double t) const;
    double floor() const;

private:
    bool gamma_zero_;
    std::shared_ptr<TailIntegralTable> lambda_tail_;
    std::shared_ptr<TailIntegralTable> pi_tail_;
};

} // namespace gft
