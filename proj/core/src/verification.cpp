#include "seashell/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "seashell/errors.hpp"
#include "seashell/parallel.hpp"
#include "seashell/surface.hpp"

namespace seashell {
namespace {

// Neumaier-compensated sum; grids can hold 10^4+ nearly equal values.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_{0.0};
    double comp_{0.0};
};

struct Stats {
    double mean{0.0};
    double max_abs{0.0};
    double rms{0.0};
};

// Statistics of `values`; max and rms are measured about `center`.
Stats stats_about(std::span<const double> values, double center) {
    Stats s;
    if (values.empty()) return s;
    CompensatedSum sum;
    CompensatedSum sq;
    for (double v : values) {
        sum.add(v);
        const double d = v - center;
        sq.add(d * d);
        s.max_abs = std::max(s.max_abs, std::abs(d));
    }
    s.mean = sum.value() / static_cast<double>(values.size());
    s.rms = std::sqrt(sq.value() / static_cast<double>(values.size()));
    return s;
}

double mean_of(std::span<const double> values) {
    CompensatedSum sum;
    for (double v : values) sum.add(v);
    return values.empty() ? 0.0 : sum.value() / static_cast<double>(values.size());
}

void add_family_metadata(VerificationReport& r, const SurfaceFamily& family) {
    for (const auto& [name, value] : family.parameters()) r.per_family_metadata[name] = value;
}

VerificationReport finish(VerificationReport r) {
    r.verdict = r.max_abs_deviation <= r.tolerance;
    return r;
}

std::string describe(const PolarPoint& p) {
    std::ostringstream os;
    os << "(theta = " << p.theta << ", psi = " << p.psi << ")";
    return os.str();
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : report.per_family_metadata) meta[k] = v;
    return {
        {"property_name", report.property_name},
        {"n_samples", report.n_samples},
        {"mean", report.mean},
        {"max_abs_deviation", report.max_abs_deviation},
        {"rms", report.rms},
        {"tolerance", report.tolerance},
        {"verdict", report.verdict ? "pass" : "fail"},
        {"per_family_metadata", meta},
    };
}

double pde_residual(const SurfaceFamily& family, const PolarPoint& p, Angle beta) {
    const double rho = eval_rho(family, p);
    const RhoPartials d = eval_rho_partials(family, p);
    const double c2 = std::cos(p.psi) * std::cos(p.psi);
    const double lhs = d.rho_theta * d.rho_theta + d.rho_psi * d.rho_psi * c2;
    const double tb = std::tan(beta.radians);
    if (tb == 0.0) return lhs / (rho * rho);
    const double rhs = rho * rho * c2 * tb * tb;
    return (lhs - rhs) / rhs;
}

Angle reference_beta(const SurfaceFamily& family) {
    if (const auto beta = family.characteristic_angle()) return *beta;
    if (const auto* f = family.get_if<SelfSimilar>()) return {std::atan(std::hypot(f->mu, f->b))};
    if (const auto* f = family.get_if<LogSpiral2D>()) return {std::atan(std::abs(f->k))};
    throw UnsupportedFamily(std::string(family.name()) + " has no reference angle");
}

VerificationReport check_equiangular(const SurfaceFamily& family, const Grid& grid, double tol,
                                     unsigned threads) {
    std::vector<double> betas(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const PolarPoint p = grid.at(i);
        try {
            betas[i] = angle_beta(surface_sample(family, p)).radians;
        } catch (const DomainError& e) {
            throw DomainError(std::string(e.what()) + " at grid point " + describe(p));
        } catch (const DegenerateFrame& e) {
            throw DegenerateFrame(std::string(e.what()) + " at grid point " + describe(p));
        }
    });

    const double mean = mean_of(betas);
    const Stats s = stats_about(betas, mean);

    VerificationReport r;
    r.property_name = "equiangular";
    r.n_samples = betas.size();
    r.mean = mean;
    r.max_abs_deviation = s.max_abs;
    r.rms = s.rms;
    r.tolerance = tol;
    add_family_metadata(r, family);
    r.per_family_metadata["beta_estimate"] = mean;
    r.per_family_metadata["beta_min"] = *std::min_element(betas.begin(), betas.end());
    r.per_family_metadata["beta_max"] = *std::max_element(betas.begin(), betas.end());
    return finish(std::move(r));
}

VerificationReport check_pde(const SurfaceFamily& family, const Grid& grid, Angle beta, double tol,
                             unsigned threads) {
    std::vector<double> residuals(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const PolarPoint p = grid.at(i);
        if (!(std::cos(p.psi) > 0.0)) throw DomainError("PDE residual needs cos(psi) > 0 at " + describe(p));
        residuals[i] = pde_residual(family, p, beta);
    });

    const Stats s = stats_about(residuals, 0.0);
    VerificationReport r;
    r.property_name = "pde";
    r.n_samples = residuals.size();
    r.mean = s.mean;
    r.max_abs_deviation = s.max_abs;
    r.rms = s.rms;
    r.tolerance = tol;
    add_family_metadata(r, family);
    r.per_family_metadata["beta"] = beta.radians;
    return finish(std::move(r));
}

VerificationReport check_self_similar(const SurfaceFamily& family, std::span<const Shift> shifts,
                                      const Grid& grid, double tol) {
    if (shifts.empty()) throw InvalidParameter("self-similarity check needs at least one shift");

    VerificationReport r;
    r.property_name = "self-similar";
    r.tolerance = tol;
    add_family_metadata(r, family);

    std::vector<double> all_deviations;
    all_deviations.reserve(shifts.size() * grid.size());
    for (std::size_t k = 0; k < shifts.size(); ++k) {
        const Shift& shift = shifts[k];
        std::vector<double> ratios;
        ratios.reserve(grid.size());
        for (const PolarPoint& p : grid.points()) {
            const PolarPoint q{p.theta + shift.d_theta, p.psi + shift.d_psi};
            double shifted = 0.0;
            try {
                shifted = eval_rho(family, q);
            } catch (const DomainError& e) {
                throw DomainError(std::string(e.what()) + " (shifted grid point " + describe(q) + ")");
            }
            ratios.push_back(shifted / eval_rho(family, p));
        }
        const double mean_ratio = mean_of(ratios);
        for (double ratio : ratios) all_deviations.push_back(ratio / mean_ratio - 1.0);

        const std::string suffix = "_" + std::to_string(k);
        r.per_family_metadata["ratio" + suffix] = mean_ratio;
        r.per_family_metadata["d_theta" + suffix] = shift.d_theta;
        r.per_family_metadata["d_psi" + suffix] = shift.d_psi;
    }

    const Stats s = stats_about(all_deviations, 0.0);
    r.n_samples = all_deviations.size();
    r.mean = s.mean;
    r.max_abs_deviation = s.max_abs;
    r.rms = s.rms;
    return finish(std::move(r));
}

Classification classify_self_similar_equiangular(double mu, double b) {
    Classification c;
    if (mu == 0.0) {
        c.equiangular = true;
        c.beta = {std::atan(std::abs(b))};
        return c;
    }
    // Constant beta would need tan^2(beta) = mu^2 / cos^2(psi) + b^2 at every psi.
    for (double psi : {0.0, std::numbers::pi / 3.0}) {
        const double c2 = std::cos(psi) * std::cos(psi);
        c.witnesses.emplace_back(psi, Angle{std::atan(std::sqrt(mu * mu / c2 + b * b))});
    }
    return c;
}

VerificationReport check_conchospiral_level_curve(const SurfaceFamily& family, double psi_c,
                                                  std::span<const double> thetas) {
    const auto* eq = family.get_if<EquiangularGeneral>();
    if (eq == nullptr) throw InvalidParameter("level-curve check applies to the equiangular family only");
    const DomainInterval dom = psi_domain(eq->h.a());
    if (!(dom.lo < psi_c && psi_c < dom.hi)) {
        std::ostringstream msg;
        msg << "psi_c = " << psi_c << " is not interior to [" << dom.lo << ", " << dom.hi << "]";
        throw DomainError(msg.str());
    }
    if (thetas.size() < 2) throw InvalidParameter("level-curve check needs at least 2 theta samples");

    const double expected_ratio = std::tan(psi_c);
    const double ratio_scale = std::max(1.0, std::abs(expected_ratio));
    std::vector<double> log_radius;
    log_radius.reserve(thetas.size());
    double cone_dev = 0.0;
    double ratio_sum = 0.0;
    for (double theta : thetas) {
        const Vec3 x = surface_point(family, {theta, psi_c});
        const double r = std::hypot(x.x, x.y);
        const double ratio = x.z / r;
        ratio_sum += ratio;
        cone_dev = std::max(cone_dev, std::abs(ratio - expected_ratio) / ratio_scale);
        log_radius.push_back(std::log(r));
    }

    // Ordinary least squares for log_radius = intercept + slope * theta.
    const double n = static_cast<double>(thetas.size());
    const double theta_mean = mean_of(thetas);
    const double log_mean = mean_of(log_radius);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double dt = thetas[i] - theta_mean;
        sxy += dt * (log_radius[i] - log_mean);
        sxx += dt * dt;
    }
    if (!(sxx > 0.0)) throw InvalidParameter("level-curve check needs distinct theta samples");
    const double slope = sxy / sxx;
    const double intercept = log_mean - slope * theta_mean;

    std::vector<double> residuals;
    residuals.reserve(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        residuals.push_back(log_radius[i] - (intercept + slope * thetas[i]));
    }
    const Stats fit = stats_about(residuals, 0.0);
    const double expected_slope = eq->sign_theta * eq->h.mu();
    const double slope_error = std::abs(slope - expected_slope);

    VerificationReport r;
    r.property_name = "conchospiral";
    r.n_samples = thetas.size();
    r.mean = slope;
    r.rms = fit.rms;
    r.tolerance = 1.0;
    r.max_abs_deviation =
        std::max(cone_dev / kConeRatioTolerance, std::max(fit.max_abs, slope_error) / kLogLinearTolerance);
    add_family_metadata(r, family);
    r.per_family_metadata["psi_c"] = psi_c;
    r.per_family_metadata["cone_ratio"] = ratio_sum / n;
    r.per_family_metadata["cone_ratio_max_deviation"] = cone_dev;
    r.per_family_metadata["slope"] = slope;
    r.per_family_metadata["intercept"] = intercept;
    r.per_family_metadata["slope_error"] = slope_error;
    r.per_family_metadata["fit_residual_max"] = fit.max_abs;
    return finish(std::move(r));
}

VerificationReport spiral2d_equiangular_check(double r0, double k, std::span<const double> thetas) {
    if (!(r0 > 0.0)) throw InvalidParameter("r0 must be > 0");
    if (thetas.empty()) throw InvalidParameter("spiral check needs at least one theta sample");

    std::vector<double> cotangents;
    std::vector<double> alphas;
    cotangents.reserve(thetas.size());
    alphas.reserve(thetas.size());
    for (double theta : thetas) {
        const Point2 pos = spiral2d_point(r0, k, theta);
        const Point2 vel = spiral2d_velocity(r0, k, theta);
        const double along = pos.x * vel.x + pos.y * vel.y;
        const double across = pos.x * vel.y - pos.y * vel.x;
        alphas.push_back(std::atan2(std::abs(across), along));
        cotangents.push_back(along / std::abs(across));
    }

    const Stats s = stats_about(cotangents, k);
    VerificationReport r;
    r.property_name = "spiral2d";
    r.n_samples = thetas.size();
    r.mean = s.mean;
    r.max_abs_deviation = s.max_abs;
    r.rms = s.rms;
    r.tolerance = 1e-9;
    r.per_family_metadata["r0"] = r0;
    r.per_family_metadata["k"] = k;
    r.per_family_metadata["alpha_mean"] = mean_of(alphas);
    return finish(std::move(r));
}

}  // namespace seashell
