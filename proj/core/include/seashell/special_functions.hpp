#pragma once

#include "seashell/geometry.hpp"

namespace seashell {

/// Parameters (mu, a) of the latitude profile h. The characteristic angle
/// follows from tan(beta) = mu * sqrt(a^2 + 1).
class HParams {
public:
    /// Throws InvalidParameter unless mu > 0 and a > 0 (both finite).
    HParams(double mu, double a);

    double mu() const { return mu_; }
    double a() const { return a_; }
    double tan_beta() const;

private:
    double mu_;
    double a_;
};

struct DomainInterval {
    double lo{0.0};
    double hi{0.0};

    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

/// |psi| may exceed arctan(a) by this much and still count as the endpoint.
inline constexpr double kEndpointBand = 1e-9;

/// [-arctan a, arctan a]; throws InvalidParameter unless a > 0.
DomainInterval psi_domain(double a);

/// Characteristic angle arctan(mu sqrt(a^2+1)), in (0, pi/2).
Angle beta_from_mu_a(double mu, double a);

/// Inverse of beta_from_mu_a: sqrt((tan beta / mu)^2 - 1). Requires tan beta > mu > 0.
double a_from_beta_mu(Angle beta, double mu);

/// h(psi) = mu * integral_0^psi sqrt(a^2 - tan^2 t) dt, evaluated in closed form
/// with arctangents. Within kEndpointBand of the domain ends the finite limit
/// sign(psi) * mu * (pi/2) * (sqrt(a^2+1) - 1) is returned.
/// Throws DomainError beyond the band.
double h_closed(const HParams& params, double psi);

/// The same integral by adaptive Gauss-Kronrod quadrature (absolute accuracy
/// around 1e-12). Independent of h_closed; used to cross-check it.
/// Throws DomainError outside I_a, ConvergenceError if refinement stalls.
double h_quadrature(const HParams& params, double psi);

/// Three-term Maclaurin polynomial of h; truncation error is O(psi^7).
double h_series(const HParams& params, double psi);

/// The mu = 0 convention h(psi) = psi * tan(beta).
double h_mu_zero(Angle beta, double psi);

/// Finite value of h at psi = +arctan(a).
double h_endpoint_limit(const HParams& params);

/// Derivative of h, mu * sqrt(a^2 - tan^2 psi); zero at the domain ends.
double h_derivative(const HParams& params, double psi);

}  // namespace seashell
