#include "seashell/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "seashell/errors.hpp"

namespace seashell {
namespace {

// Kronrod nodes on [0, 1] (symmetric), odd indices are the Gauss-7 nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
};

struct PanelEstimate {
    double kronrod;
    double error;
};

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];

    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opts) {
    QuadratureResult result;
    if (lo == hi) return result;

    std::vector<Panel> stack{{lo, hi}};
    while (!stack.empty()) {
        const Panel panel = stack.back();
        stack.pop_back();

        if (++result.panels > opts.max_panels) {
            throw ConvergenceError("adaptive quadrature exceeded its budget of " +
                                   std::to_string(opts.max_panels) + " panels");
        }

        const PanelEstimate est = gauss_kronrod_15(f, panel.lo, panel.hi);
        const double mid = 0.5 * (panel.lo + panel.hi);
        const bool unsplittable = mid == panel.lo || mid == panel.hi;
        if (est.error <= opts.panel_tolerance || unsplittable) {
            result.value += est.kronrod;
            result.error_estimate += est.error;
            continue;
        }
        stack.push_back({mid, panel.hi});
        stack.push_back({panel.lo, mid});
    }
    return result;
}

}  // namespace seashell
