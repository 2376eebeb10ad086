#include "recipes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "seashell/special_functions.hpp"

namespace seashell::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<std::string_view, 5> kNames = {"fig2", "fig3", "fig4", "fig5", "fig6"};

// Equiangular surfaces are sampled on 0.99 * I_a, clear of the endpoints.
constexpr double kEquiangularMargin = 0.99;
// Fig. 3 uses the open range -pi/2 < psi < pi/2.
constexpr double kOpenPsiMargin = 0.99;

FigureRecipe equiangular_recipe(std::string name, double mu, double a) {
    const DomainInterval dom = psi_domain(a);
    return {std::move(name), SurfaceFamily::equiangular(1.0, mu, a),
            Grid(0.0, 4.0 * kPi, dom.lo, dom.hi, default_theta_samples(0.0, 4.0 * kPi), kDefaultPsiSamples,
                 kEquiangularMargin),
            ""};
}

}  // namespace

std::size_t default_theta_samples(double theta_lo, double theta_hi) {
    const double n = std::round(128.0 * (theta_hi - theta_lo) / (2.0 * kPi));
    return std::max<std::size_t>(2, static_cast<std::size_t>(std::max(0.0, n)));
}

std::span<const std::string_view> recipe_names() { return kNames; }

std::optional<FigureRecipe> find_recipe(std::string_view name) {
    if (name == "fig2") {
        return FigureRecipe{"fig2", SurfaceFamily::rotational_spiral(1.0, 0.2),
                            Grid(0.0, 2.0 * kPi, -kPi / 2.0, 3.0 * kPi / 2.0, default_theta_samples(0.0, 2.0 * kPi),
                                 kDefaultPsiSamples),
                            "r0 and k are implementation defaults"};
    }
    if (name == "fig3") {
        return FigureRecipe{"fig3", SurfaceFamily::self_similar(1.0, 0.5, 0.2),
                            Grid(0.0, 2.0 * kPi, -kPi / 2.0, kPi / 2.0, default_theta_samples(0.0, 2.0 * kPi),
                                 kDefaultPsiSamples, kOpenPsiMargin),
                            ""};
    }
    if (name == "fig4") return equiangular_recipe("fig4", 0.1, 2.0);
    if (name == "fig5") return equiangular_recipe("fig5", 0.1, 20.0);
    if (name == "fig6") return equiangular_recipe("fig6", 1.0, 2.0);
    return std::nullopt;
}

}  // namespace seashell::cli
