// Randomized property tests with fixed seeds.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "seashell/special_functions.hpp"
#include "seashell/surface.hpp"
#include "seashell/verification.hpp"

using namespace seashell;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<SurfaceFamily> polar_families() {
    return {SurfaceFamily::sphere(1.5),
            SurfaceFamily::rotational_spiral(1.0, 0.2),
            SurfaceFamily::self_similar(1.0, 0.5, 0.2),
            SurfaceFamily::self_similar(2.0, -0.3, 0.7),
            SurfaceFamily::equiangular(1.0, 0.1, 2.0),
            SurfaceFamily::equiangular(1.0, 1.0, 2.0, -1, 1),
            SurfaceFamily::equiangular(0.5, 0.1, 20.0, 1, -1),
            SurfaceFamily::equiangular(1.0, 0.5, 0.5, -1, -1)};
}

// Random interior point with the frame defined.
PolarPoint random_point(const SurfaceFamily& f, std::mt19937_64& rng) {
    const auto lim = f.psi_limits().value_or(DomainInterval{-kPi / 2.0, kPi / 2.0});
    std::uniform_real_distribution<double> theta(-2.0 * kPi, 2.0 * kPi);
    std::uniform_real_distribution<double> psi(0.98 * lim.lo, 0.98 * lim.hi);
    return {theta(rng), psi(rng)};
}

double ulp_distance(double a, double b) {
    return std::abs(a - b) / (std::nextafter(std::abs(b), INFINITY) - std::abs(b));
}
}  // namespace

TEST(Properties, CrossProductNormalMatchesClosedForm) {
    std::mt19937_64 rng(17);
    for (const auto& f : polar_families()) {
        for (int i = 0; i < 500; ++i) {
            const auto s = surface_sample(f, random_point(f, rng));
            const Vec3 n = closed_form_normal(s);
            ASSERT_LT(norm(n - s.N), 1e-10 * norm(s.N)) << f.name();
        }
    }
}

TEST(Properties, ProofIdentities) {
    std::mt19937_64 rng(23);
    for (const auto& f : polar_families()) {
        for (int i = 0; i < 500; ++i) {
            const auto s = surface_sample(f, random_point(f, rng));
            const double c = std::cos(s.p.psi);
            const double r = s.rho;
            ASSERT_LT(oracle::rel_diff(dot(s.N, s.X) / (r * r * r), c), 1e-10);
            ASSERT_LT(std::abs(norm_squared(s.X) - r * r), 1e-10 * r * r);
            const double n2 = r * r * (s.rho_psi * s.rho_psi * c * c + r * r * c * c + s.rho_theta * s.rho_theta);
            ASSERT_LT(std::abs(norm_squared(s.N) - n2), 1e-10 * n2) << f.name();
        }
    }
}

TEST(Properties, PartialsMatchFiniteDifferences) {
    std::mt19937_64 rng(5);
    for (const auto& f : polar_families()) {
        for (int i = 0; i < 200; ++i) {
            const PolarPoint p = random_point(f, rng);
            const auto d = eval_rho_partials(f, p);
            const double fd_theta =
                oracle::central_difference([&](double t) { return eval_rho(f, {t, p.psi}); }, p.theta);
            const double fd_psi = oracle::central_difference([&](double q) { return eval_rho(f, {p.theta, q}); }, p.psi);
            const double scale = std::max(1.0, eval_rho(f, p));
            ASSERT_LT(std::abs(d.rho_theta - fd_theta), 1e-6 * scale) << f.name();
            ASSERT_LT(std::abs(d.rho_psi - fd_psi), 1e-6 * scale) << f.name();
        }
    }
}

TEST(Properties, HIsOddAndIncreasing) {
    std::mt19937_64 rng(99);
    for (const auto& [mu, a] : {std::pair{0.1, 2.0}, std::pair{0.1, 20.0}, std::pair{1.0, 2.0}, std::pair{0.5, 0.5}}) {
        const HParams p(mu, a);
        const auto dom = psi_domain(a);
        std::uniform_real_distribution<double> u(dom.lo, dom.hi);
        std::vector<double> xs(1000);
        for (double& x : xs) x = u(rng);
        std::sort(xs.begin(), xs.end());
        double prev = -INFINITY;
        for (double x : xs) {
            const double h = h_closed(p, x);
            const double hm = h_closed(p, -x);
            if (h != 0.0) ASSERT_LE(ulp_distance(-hm, h), 4.0) << mu << " " << a << " " << x;
            ASSERT_GE(h, prev);
            prev = h;
        }
    }
}

TEST(Properties, DerivativeOfH) {
    std::mt19937_64 rng(3);
    for (const auto& [mu, a] : {std::pair{0.1, 2.0}, std::pair{1.0, 2.0}, std::pair{0.5, 0.5}}) {
        const HParams p(mu, a);
        const auto dom = psi_domain(a);
        std::uniform_real_distribution<double> u(0.99 * dom.lo, 0.99 * dom.hi);
        for (int i = 0; i < 200; ++i) {
            const double x = u(rng);
            const double t = std::tan(x);
            const double expected = mu * std::sqrt(a * a - t * t);
            ASSERT_NEAR(h_derivative(p, x), expected, 1e-12 * std::max(1.0, expected));
            const double fd = oracle::central_difference([&](double q) { return h_closed(p, q); }, x);
            ASSERT_LT(std::abs(fd - expected), 1e-6 * std::max(1.0, expected));
        }
    }
}

TEST(Properties, SmallMuApproachesRotationalCone) {
    // Fixed beta, mu -> 0: h(psi) -> psi tan(beta).
    const double tb = 0.3;
    const double mu = 0.01;
    const double a = a_from_beta_mu(Angle{std::atan(tb)}, mu);
    const HParams p(mu, a);
    const auto dom = psi_domain(a);
    double sup = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double x = 0.9 * (dom.lo + (dom.hi - dom.lo) * i / 400.0);
        sup = std::max(sup, std::abs(h_closed(p, x) - x * tb));
    }
    EXPECT_LT(sup, 0.01);
}

TEST(Properties, SeparatedVariables) {
    // rho_theta / rho = +-mu and rho_psi / rho = +-h'(psi) independently of the other coordinate.
    std::mt19937_64 rng(41);
    for (int st : {1, -1}) {
        for (int sp : {1, -1}) {
            const auto f = SurfaceFamily::equiangular(1.3, 0.5, 2.0, st, sp);
            const HParams p(0.5, 2.0);
            for (int i = 0; i < 200; ++i) {
                const PolarPoint q = random_point(f, rng);
                const double r = eval_rho(f, q);
                const auto d = eval_rho_partials(f, q);
                ASSERT_NEAR(d.rho_theta / r, st * 0.5, 1e-14);
                ASSERT_NEAR(d.rho_psi / r, sp * h_derivative(p, q.psi), 1e-13);
            }
        }
    }
}

TEST(Properties, ParameterSweepResidualAndAngle) {
    for (double mu : {0.05, 0.1, 0.5, 1.0}) {
        for (double a : {0.5, 2.0, 20.0}) {
            for (int st : {1, -1}) {
                for (int sp : {1, -1}) {
                    const auto f = SurfaceFamily::equiangular(1.0, mu, a, st, sp);
                    const auto dom = psi_domain(a);
                    const Grid g(0.0, 4 * kPi, dom.lo, dom.hi, 12, 12, 0.99);
                    const Angle beta = beta_from_mu_a(mu, a);
                    ASSERT_TRUE(check_pde(f, g, beta, 1e-9).passed()) << mu << " " << a;
                    const auto r = check_equiangular(f, g, 1e-7);
                    ASSERT_TRUE(r.passed()) << mu << " " << a;
                    ASSERT_NEAR(r.mean, beta.radians, 1e-8);
                }
            }
        }
    }
}
