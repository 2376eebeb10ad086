// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "recipes.hpp"
#include "seashell/mesh.hpp"
#include "seashell/quadrature.hpp"
#include "seashell/special_functions.hpp"
#include "seashell/surface.hpp"
#include "seashell/verification.hpp"

using namespace seashell;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok{true};
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

double ulps(double value, double expected) {
    const double spacing = std::nextafter(std::abs(expected), INFINITY) - std::abs(expected);
    return std::abs(value - expected) / spacing;
}

std::string read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

int cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

Outcome pde_sweep() {
    Outcome o;
    double worst = 0.0;
    for (double mu : {0.05, 0.1, 0.5, 1.0}) {
        for (double a : {0.5, 2.0, 20.0}) {
            const auto dom = psi_domain(a);
            const Grid grid(0.0, 4 * kPi, dom.lo, dom.hi, 40, 40, 0.99);
            const Angle beta = beta_from_mu_a(mu, a);
            for (int st : {1, -1}) {
                for (int sp : {1, -1}) {
                    const auto f = SurfaceFamily::equiangular(1.0, mu, a, st, sp);
                    for (const PolarPoint& p : grid.points()) worst = std::max(worst, std::abs(pde_residual(f, p, beta)));
                }
            }
        }
    }
    o.require(worst < 1e-9, "max residual " + fmt("%.3g", worst));
    o.detail = o.ok ? "max residual " + fmt("%.3g", worst) : o.detail;
    return o;
}

Outcome angle_constancy() {
    Outcome o;
    const auto dom = psi_domain(2.0);
    const auto r = check_equiangular(SurfaceFamily::equiangular(1.0, 0.1, 2.0),
                                     Grid(0.0, 4 * kPi, dom.lo, dom.hi, 100, 100, 0.99), 1e-7);
    const double err = std::abs(r.mean - std::atan(0.1 * std::sqrt(5.0)));
    o.require(r.max_abs_deviation < 1e-7, "max deviation " + fmt("%.3g", r.max_abs_deviation));
    o.require(err < 1e-8, "mean off by " + fmt("%.3g", err));
    if (o.ok) o.detail = "max deviation " + fmt("%.3g", r.max_abs_deviation) + ", mean error " + fmt("%.3g", err);
    return o;
}

Outcome self_similar_dichotomy() {
    Outcome o;
    const Grid grid(0.0, 2 * kPi, -1.2, 1.2, 40, 40);
    const auto fig3 = check_equiangular(SurfaceFamily::self_similar(1.0, 0.5, 0.2), grid, 1e-7);
    o.require(!fig3.passed(), "fig3 parameters reported equiangular");
    o.require(fig3.max_abs_deviation > 0.05, "fig3 deviation only " + fmt("%.3g", fig3.max_abs_deviation));
    const auto rot = check_equiangular(SurfaceFamily::self_similar(1.0, 0.0, 0.2), grid, 1e-9);
    o.require(rot.passed(), "mu = 0 not equiangular");
    o.require(std::abs(rot.mean - std::atan(0.2)) < 1e-9, "mu = 0 angle " + fmt("%.12g", rot.mean));
    if (o.ok) o.detail = "fig3 deviation " + fmt("%.3g", fig3.max_abs_deviation);
    return o;
}

Outcome h_cross_validation() {
    Outcome o;
    double worst = 0.0, worst_limit = 0.0;
    for (const auto& [mu, a] : {std::pair{0.1, 2.0}, std::pair{0.1, 20.0}, std::pair{1.0, 2.0}}) {
        const HParams p(mu, a);
        const double end = std::atan(a);
        for (int i = 0; i < 100; ++i) {
            const double psi = 0.999 * end * (-1.0 + 2.0 * i / 99.0);
            worst = std::max(worst, std::abs(h_closed(p, psi) - h_quadrature(p, psi)));
        }
        // h(end) - h(end - d) ~ C d^{3/2}: one Richardson step from two interior points.
        const double d = 1e-4;
        const double h1 = h_quadrature(p, end - d);
        const double h2 = h_quadrature(p, end - d / 4.0);
        const double extrapolated = (8.0 * h2 - h1) / 7.0;
        const double limit = mu * (kPi / 2.0) * (std::sqrt(a * a + 1.0) - 1.0);
        worst_limit = std::max(worst_limit, std::abs(extrapolated - limit));
        o.require(std::abs(h_endpoint_limit(p) - limit) < 1e-15, "endpoint limit formula");
    }
    o.require(worst < 1e-9, "closed vs quadrature " + fmt("%.3g", worst));
    o.require(worst_limit < 1e-6, "endpoint extrapolation " + fmt("%.3g", worst_limit));
    if (o.ok) o.detail = "max diff " + fmt("%.3g", worst) + ", endpoint " + fmt("%.3g", worst_limit);
    return o;
}

Outcome maclaurin() {
    Outcome o;
    const HParams p(0.1, 2.0);
    const double e = std::max(std::abs(h_series(p, 0.1) - h_closed(p, 0.1)),
                              std::abs(h_series(p, -0.1) - h_closed(p, -0.1)));
    o.require(e < 1e-8, "series error " + fmt("%.3g", e));
    const double eps = 1e-7;
    const double linear = (h_series(p, eps) - h_series(p, -eps)) / (2.0 * eps);
    const double tb = std::tan(beta_from_mu_a(0.1, 2.0).radians);
    const double expected = std::sqrt(tb * tb - 0.01);
    o.require(std::abs(linear - expected) < 1e-12, "linear coefficient " + fmt("%.17g", linear));
    if (o.ok) o.detail = "series error " + fmt("%.3g", e);
    return o;
}

Outcome self_similarity() {
    Outcome o;
    const auto f = SurfaceFamily::self_similar(1.0, 0.5, 0.2);
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> ti(0, 99), pj(0, 99);
    const Grid grid(0.0, 2 * kPi, -kPi / 2.0, kPi / 2.0, 100, 100);
    double worst = 0.0;
    for (double dt : {0.1, 1.0, kPi}) {
        const double expected = std::exp(0.5 * dt);
        for (int n = 0; n < 1000; ++n) {
            const PolarPoint p{grid.theta(ti(rng)), grid.psi(pj(rng))};
            const double ratio = eval_rho(f, {p.theta + dt, p.psi}) / eval_rho(f, p);
            worst = std::max(worst, ulps(ratio, expected));
        }
    }
    o.require(worst <= 4.0, "max error " + fmt("%.2g", worst) + " ulp");
    if (o.ok) o.detail = "max error " + fmt("%.2g", worst) + " ulp";
    return o;
}

Outcome conchospirals() {
    Outcome o;
    std::vector<double> thetas(200);
    for (int i = 0; i < 200; ++i) thetas[i] = 4 * kPi * i / 199.0;
    const auto f = SurfaceFamily::equiangular(1.0, 0.1, 2.0);
    double worst_cone = 0.0, worst_fit = 0.0, worst_slope = 0.0;
    for (double c : {0.0, 0.3, 0.8}) {
        const auto r = check_conchospiral_level_curve(f, c, thetas);
        const auto& m = r.per_family_metadata;
        worst_cone = std::max(worst_cone, m.at("cone_ratio_max_deviation"));
        worst_fit = std::max(worst_fit, m.at("fit_residual_max"));
        worst_slope = std::max(worst_slope, std::abs(m.at("slope") - 0.1));
        o.require(r.passed(), "level curve at psi = " + fmt("%g", c));
    }
    o.require(worst_cone < 1e-12, "cone ratio deviation " + fmt("%.3g", worst_cone));
    o.require(worst_fit < 1e-10, "fit residual " + fmt("%.3g", worst_fit));
    o.require(worst_slope < 1e-10, "slope error " + fmt("%.3g", worst_slope));
    if (o.ok) o.detail = "cone " + fmt("%.3g", worst_cone) + ", fit " + fmt("%.3g", worst_fit);
    return o;
}

Outcome near_self_similar() {
    Outcome o;
    const double mu = 0.01;
    const double a = a_from_beta_mu(Angle{std::atan(0.3)}, mu);
    const auto general = SurfaceFamily::equiangular(1.0, mu, a);
    const auto matched = SurfaceFamily::self_similar(1.0, mu, std::sqrt(0.09 - mu * mu));
    const auto dom = psi_domain(a);
    const Grid grid(0.0, 2 * kPi, dom.lo, dom.hi, 100, 100, 0.5);
    double worst = 0.0;
    for (const PolarPoint& p : grid.points()) {
        const Vec3 x = surface_point(general, p);
        const Vec3 y = surface_point(matched, p);
        worst = std::max(worst, norm(x - y) / norm(y));
    }
    o.require(worst < 0.01, "sup relative difference " + fmt("%.3g", worst));
    if (o.ok) o.detail = "sup relative difference " + fmt("%.3g", worst);
    return o;
}

Outcome spiral2d() {
    Outcome o;
    std::vector<double> thetas(100);
    for (int i = 0; i < 100; ++i) thetas[i] = 4 * kPi * i / 99.0;
    for (double k : {0.0, 0.1, 1.0}) {
        const auto r = spiral2d_equiangular_check(1.0, k, thetas);
        o.require(r.passed() && r.tolerance <= 1e-9, "k = " + fmt("%g", k) + " deviation " + fmt("%.3g", r.max_abs_deviation));
        double worst = 0.0;
        for (double t : thetas) {
            const Point2 x = spiral2d_point(1.0, k, t);
            const Point2 v = spiral2d_velocity(1.0, k, t);
            const double alpha = std::atan2(std::abs(x.x * v.y - x.y * v.x), x.x * v.x + x.y * v.y);
            worst = std::max(worst, std::abs(std::cos(alpha) / std::sin(alpha) - k));
        }
        o.require(worst < 1e-9, "independent cot alpha at k = " + fmt("%g", k));
    }
    return o;
}

Outcome proof_identities() {
    Outcome o;
    const std::vector<SurfaceFamily> families = {
        SurfaceFamily::sphere(2.0),
        SurfaceFamily::rotational_spiral(1.0, 0.2),
        SurfaceFamily::self_similar(1.0, 0.5, 0.2),
        SurfaceFamily::self_similar(1.0, 0.0, 0.2),
        SurfaceFamily::equiangular(1.0, 0.1, 2.0),
        SurfaceFamily::equiangular(1.0, 0.1, 20.0, -1, 1),
        SurfaceFamily::equiangular(1.0, 1.0, 2.0, 1, -1),
        SurfaceFamily::equiangular(1.0, 0.5, 0.5, -1, -1),
    };
    double worst = 0.0;
    for (const auto& f : families) {
        const auto lim = f.psi_limits().value_or(DomainInterval{-kPi / 2.0, kPi / 2.0});
        const Grid grid(0.0, 4 * kPi, lim.lo, lim.hi, 50, 50, 0.99);
        for (const PolarPoint& p : grid.points()) {
            const auto s = surface_sample(f, p);
            const double c = std::cos(p.psi);
            const double r = s.rho;
            const double n2 = r * r * (s.rho_psi * s.rho_psi * c * c + r * r * c * c + s.rho_theta * s.rho_theta);
            worst = std::max({worst, std::abs(dot(s.N, s.X) - r * r * r * c) / (r * r * r * c),
                              std::abs(norm_squared(s.X) - r * r) / (r * r), std::abs(norm_squared(s.N) - n2) / n2});
        }
    }
    o.require(worst < 1e-10, "max relative error " + fmt("%.3g", worst));
    if (o.ok) o.detail = "max relative error " + fmt("%.3g", worst);
    return o;
}

Outcome export_integrity() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("seashell_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);

    const auto fig4 = cli::find_recipe("fig4").value();
    const auto mesh = tessellate(fig4.family, fig4.grid);
    save_obj(mesh, dir / "fig4.obj");
    std::ifstream in(dir / "fig4.obj");
    const auto back = read_obj(in);
    o.require(back.vertices.size() == mesh.vertices.size(), "vertex count changed");
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(back.vertices.size(), mesh.vertices.size()); ++i) {
        worst = std::max(worst, norm(back.vertices[i] - mesh.vertices[i]) / std::max(1.0, norm(mesh.vertices[i])));
    }
    o.require(worst < 1e-8, "coordinate error " + fmt("%.3g", worst));

    const auto fig5 = cli::find_recipe("fig5").value();
    const auto mesh5 = tessellate(fig5.family, fig5.grid);
    save_stl(mesh5, dir / "fig5.stl");
    o.require(fs::file_size(dir / "fig5.stl") == 84 + 50 * mesh5.faces.size(), "STL size mismatch");

    for (const char* fmt_name : {"obj", "stl"}) {
        const std::string ext = fmt_name;
        const auto a = dir / ("a." + ext);
        const auto b = dir / ("b." + ext);
        const int ca = cli({"generate", "--figure", "fig5", "--format", ext, "--out", a.string()});
        const int cb = cli({"generate", "--figure", "fig5", "--format", ext, "--out", b.string(), "--threads", "4"});
        o.require(ca == 0 && cb == 0, "generate failed");
        o.require(read_bytes(a) == read_bytes(b), ext + " output not byte-identical");
    }
    fs::remove_all(dir);
    if (o.ok) o.detail = "OBJ error " + fmt("%.3g", worst) + ", " + std::to_string(mesh5.faces.size()) + " STL faces";
    return o;
}

Outcome cli_contract() {
    Outcome o;
    const int a = cli({"verify", "--figure", "fig4", "--property", "equiangular"});
    const int b = cli({"verify", "--figure", "fig3", "--property", "equiangular"});
    const int c = cli({"generate", "--family", "equiangular", "--mu", "0", "--a", "2", "--out", "unused.obj"});
    o.require(a == 0, "fig4 exit " + std::to_string(a));
    o.require(b == 1, "fig3 exit " + std::to_string(b));
    o.require(c == 2, "mu = 0 exit " + std::to_string(c));
    if (o.ok) o.detail = "exit codes 0, 1, 2";
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"PDE residual sweep", pde_sweep},
        {"Angle constancy (fig4)", angle_constancy},
        {"Self-similar dichotomy (fig3)", self_similar_dichotomy},
        {"h closed form vs quadrature", h_cross_validation},
        {"Maclaurin series", maclaurin},
        {"Self-similarity ratio", self_similarity},
        {"Level curves on cones", conchospirals},
        {"Near self-similar limit", near_self_similar},
        {"2D spiral angle", spiral2d},
        {"Frame identities", proof_identities},
        {"Export integrity", export_integrity},
        {"CLI exit codes", cli_contract},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %d. %s%s%s\n", o.ok ? "PASS" : "FAIL", index++, name, o.detail.empty() ? "" : ": ",
                    o.detail.c_str());
        if (!o.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
