#include "seashell/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "seashell/errors.hpp"
#include "seashell/quadrature.hpp"

namespace seashell {
namespace {

// a^2 - tan^2 psi, factored to limit cancellation near the endpoints and
// clamped at zero inside the endpoint band.
double radicand(double a, double tan_psi) {
    const double t = std::abs(tan_psi);
    return std::max(0.0, (a - t) * (a + t));
}

void require_in_domain(const HParams& params, double psi, const char* what) {
    const double end = std::atan(params.a());
    if (!std::isfinite(psi) || std::abs(psi) > end + kEndpointBand) {
        std::ostringstream msg;
        msg << what << ": psi = " << psi << " outside [-arctan a, arctan a] = [" << -end << ", "
            << end << "] for a = " << params.a();
        throw DomainError(msg.str());
    }
}

}  // namespace

HParams::HParams(double mu, double a) : mu_(mu), a_(a) {
    if (!(std::isfinite(mu) && mu > 0.0)) throw InvalidParameter("mu must be > 0");
    if (!(std::isfinite(a) && a > 0.0)) throw InvalidParameter("a must be > 0");
    if (!std::isfinite(tan_beta())) throw InvalidParameter("mu * sqrt(a^2 + 1) must be finite");
}

double HParams::tan_beta() const { return mu_ * std::sqrt(a_ * a_ + 1.0); }

DomainInterval psi_domain(double a) {
    if (!(std::isfinite(a) && a > 0.0)) throw InvalidParameter("a must be > 0");
    const double end = std::atan(a);
    return {-end, end};
}

Angle beta_from_mu_a(double mu, double a) { return {std::atan(HParams(mu, a).tan_beta())}; }

double a_from_beta_mu(Angle beta, double mu) {
    if (!(mu > 0.0)) throw InvalidParameter("mu must be > 0");
    const double ratio = std::tan(beta.radians) / mu;
    if (!(ratio > 1.0)) throw InvalidParameter("tan(beta) must exceed mu");
    return std::sqrt(ratio * ratio - 1.0);
}

double h_endpoint_limit(const HParams& params) {
    return params.mu() * (std::numbers::pi / 2.0) * (std::sqrt(params.a() * params.a() + 1.0) - 1.0);
}

double h_closed(const HParams& params, double psi) {
    require_in_domain(params, psi, "h_closed");
    const double end = std::atan(params.a());
    if (std::abs(psi) >= end - kEndpointBand) return std::copysign(h_endpoint_limit(params), psi);

    const double t = std::tan(psi);
    const double s = std::sqrt(radicand(params.a(), t));
    const double c = std::sqrt(params.a() * params.a() + 1.0);
    // atan2 with s > 0 equals arctan(y / s) and stays finite as s -> 0.
    return params.mu() * (c * std::atan2(c * t, s) - std::atan2(t, s));
}

double h_derivative(const HParams& params, double psi) {
    require_in_domain(params, psi, "h_derivative");
    return params.mu() * std::sqrt(radicand(params.a(), std::tan(psi)));
}

double h_quadrature(const HParams& params, double psi) {
    require_in_domain(params, psi, "h_quadrature");
    const double a = params.a();
    const auto integrand = [a](double t) { return std::sqrt(radicand(a, std::tan(t))); };
    return params.mu() * integrate_adaptive(integrand, 0.0, psi).value;
}

double h_series(const HParams& params, double psi) {
    const double mu = params.mu();
    const double a = params.a();
    const double p2 = psi * psi;
    const double c1 = mu * a;
    const double c3 = mu / (6.0 * a);
    const double c5 = (mu / a) * (1.0 / 15.0 + 1.0 / (40.0 * a * a));
    return psi * (c1 - p2 * (c3 + p2 * c5));
}

double h_mu_zero(Angle beta, double psi) { return psi * std::tan(beta.radians); }

}  // namespace seashell
