#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "seashell/family.hpp"
#include "seashell/grid.hpp"

namespace seashell::cli {

/// Built-in parameter set reproducing one of the reference figures.
struct FigureRecipe {
    std::string name;
    SurfaceFamily family;
    Grid grid;
    /// Empty for figures whose parameters are all published; otherwise names
    /// the values that are implementation defaults.
    std::string note;
};

/// fig2 .. fig6; nullopt for unknown names.
std::optional<FigureRecipe> find_recipe(std::string_view name);

std::span<const std::string_view> recipe_names();

/// Default lattice density: 128 samples per 2 pi of theta (at least 2).
std::size_t default_theta_samples(double theta_lo, double theta_hi);
inline constexpr std::size_t kDefaultPsiSamples = 64;

}  // namespace seashell::cli
