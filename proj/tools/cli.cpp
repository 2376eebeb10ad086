#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "recipes.hpp"
#include "seashell/errors.hpp"
#include "seashell/mesh.hpp"
#include "seashell/special_functions.hpp"
#include "seashell/surface.hpp"
#include "seashell/verification.hpp"

namespace seashell::cli {
namespace {

constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flags shared by every subcommand that names a surface.
struct FamilyArgs {
    std::string figure;
    std::string family;
    std::optional<double> rho0, r0, mu, a, b, k, radius, half_angle;
    std::optional<int> sign_theta, sign_psi;
    std::vector<double> normal;
    std::optional<double> theta_lo, theta_hi, psi_lo, psi_hi, margin;
    std::optional<std::size_t> n_theta, n_psi;
    bool degrees{false};
    unsigned threads{0};

    double angle(double v) const { return degrees ? v * kPi / 180.0 : v; }
};

struct Resolved {
    SurfaceFamily family;
    std::optional<Grid> grid;
    std::string figure;
    std::string note;
};

const std::vector<std::string> kFamilies = {"equiangular", "self-similar", "rotational", "spiral2d",
                                            "sphere",      "cone",         "plane"};

void add_family_options(CLI::App* sub, FamilyArgs& fa, bool with_grid) {
    std::vector<std::string> figures(recipe_names().begin(), recipe_names().end());
    sub->add_option("--figure", fa.figure, "Built-in recipe")->check(CLI::IsMember(figures));
    sub->add_option("--family", fa.family, "Surface family")->check(CLI::IsMember(kFamilies));
    sub->add_option("--rho0", fa.rho0, "Scale rho0 (self-similar, equiangular)");
    sub->add_option("--r0", fa.r0, "Scale r0 (rotational, spiral2d)");
    sub->add_option("--mu", fa.mu, "Growth rate in theta");
    sub->add_option("--a", fa.a, "Latitude parameter a of the equiangular family");
    sub->add_option("--b", fa.b, "Growth rate in psi (self-similar)");
    sub->add_option("--k", fa.k, "Spiral rate k (rotational, spiral2d)");
    sub->add_option("--radius", fa.radius, "Sphere radius");
    sub->add_option("--half-angle", fa.half_angle, "Cone half-angle");
    sub->add_option("--sign-theta", fa.sign_theta, "Branch sign of the theta exponent (+1 or -1)");
    sub->add_option("--sign-psi", fa.sign_psi, "Branch sign of the psi exponent (+1 or -1)");
    sub->add_option("--normal", fa.normal, "Plane normal (3 values)")->expected(3);
    sub->add_flag("--degrees", fa.degrees, "Read angle arguments in degrees");
    if (with_grid) {
        sub->add_option("--theta-lo", fa.theta_lo, "Grid theta lower bound");
        sub->add_option("--theta-hi", fa.theta_hi, "Grid theta upper bound");
        sub->add_option("--psi-lo", fa.psi_lo, "Grid psi lower bound");
        sub->add_option("--psi-hi", fa.psi_hi, "Grid psi upper bound");
        sub->add_option("--n-theta", fa.n_theta, "Grid samples in theta");
        sub->add_option("--n-psi", fa.n_psi, "Grid samples in psi");
        sub->add_option("--margin", fa.margin, "Shrink factor applied to the psi range");
        sub->add_option("--threads", fa.threads, "Worker threads (0 = available parallelism)");
    }
}

std::map<std::string, double> recipe_parameters(const std::optional<FigureRecipe>& recipe) {
    std::map<std::string, double> out;
    if (recipe) {
        for (const auto& [name, value] : recipe->family.parameters()) out[name] = value;
    }
    return out;
}

SurfaceFamily build_family(const FamilyArgs& fa, const std::string& kind, const std::map<std::string, double>& base) {
    const auto value = [&](const char* name, const std::optional<double>& flag,
                           std::optional<double> fallback = std::nullopt) -> double {
        if (flag) return *flag;
        if (auto it = base.find(name); it != base.end()) return it->second;
        if (fallback) return *fallback;
        throw UsageError(std::string("--") + name + " is required for family " + kind);
    };
    const auto sign = [&](const char* name, const std::optional<int>& flag) -> int {
        if (flag) return *flag;
        if (auto it = base.find(name); it != base.end()) return static_cast<int>(it->second);
        return 1;
    };

    if (kind == "equiangular") {
        return SurfaceFamily::equiangular(value("rho0", fa.rho0, 1.0), value("mu", fa.mu), value("a", fa.a),
                                          sign("sign_theta", fa.sign_theta), sign("sign_psi", fa.sign_psi));
    }
    if (kind == "self-similar") {
        return SurfaceFamily::self_similar(value("rho0", fa.rho0, 1.0), value("mu", fa.mu), value("b", fa.b));
    }
    if (kind == "rotational") return SurfaceFamily::rotational_spiral(value("r0", fa.r0, 1.0), value("k", fa.k));
    if (kind == "spiral2d") return SurfaceFamily::log_spiral_2d(value("r0", fa.r0, 1.0), value("k", fa.k));
    if (kind == "sphere") return SurfaceFamily::sphere(value("radius", fa.radius));
    if (kind == "cone") {
        std::optional<double> half;
        if (fa.half_angle) half = fa.angle(*fa.half_angle);
        return SurfaceFamily::cone(value("half_angle", half));
    }
    if (kind == "plane") {
        if (fa.normal.size() != 3) throw UsageError("--normal (3 values) is required for family plane");
        return SurfaceFamily::plane({fa.normal[0], fa.normal[1], fa.normal[2]});
    }
    throw UsageError("unknown family '" + kind + "'");
}

Resolved resolve(const FamilyArgs& fa) {
    std::optional<FigureRecipe> recipe;
    if (!fa.figure.empty()) {
        recipe = find_recipe(fa.figure);
        if (!recipe) throw UsageError("unknown figure '" + fa.figure + "'");
    }
    std::string kind = fa.family;
    if (recipe) {
        const std::string recipe_kind(recipe->family.name());
        if (!kind.empty() && kind != recipe_kind) {
            throw UsageError("--family " + kind + " conflicts with --figure " + fa.figure + " (" + recipe_kind + ")");
        }
        kind = recipe_kind;
    }
    if (kind.empty()) throw UsageError("either --figure or --family is required");

    Resolved r{build_family(fa, kind, recipe_parameters(recipe)), std::nullopt, fa.figure,
               recipe ? recipe->note : std::string()};
    if (!r.family.polar_representable()) return r;

    double theta_lo = recipe ? recipe->grid.theta_lo() : 0.0;
    double theta_hi = recipe ? recipe->grid.theta_hi() : 2.0 * kPi;
    double psi_lo = recipe ? recipe->grid.psi_lo() : -kPi / 2.0;
    double psi_hi = recipe ? recipe->grid.psi_hi() : kPi / 2.0;
    double margin = recipe ? recipe->grid.margin() : 0.99;
    if (const auto lim = r.family.psi_limits()) {
        psi_lo = lim->lo;
        psi_hi = lim->hi;
    }
    if (fa.theta_lo) theta_lo = fa.angle(*fa.theta_lo);
    if (fa.theta_hi) theta_hi = fa.angle(*fa.theta_hi);
    if (fa.psi_lo) psi_lo = fa.angle(*fa.psi_lo);
    if (fa.psi_hi) psi_hi = fa.angle(*fa.psi_hi);
    if (fa.margin) margin = *fa.margin;

    const std::size_t n_theta = fa.n_theta.value_or(default_theta_samples(theta_lo, theta_hi));
    const std::size_t n_psi = fa.n_psi.value_or(recipe ? recipe->grid.n_psi() : kDefaultPsiSamples);
    r.grid = Grid(theta_lo, theta_hi, psi_lo, psi_hi, n_theta, n_psi, margin);
    return r;
}

nlohmann::json parameters_json(const SurfaceFamily& family) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : family.parameters()) {
        if (name == "sign_theta" || name == "sign_psi") {
            j[name] = static_cast<int>(value);
        } else {
            j[name] = value;
        }
    }
    return j;
}

void annotate(nlohmann::json& j, const Resolved& r) {
    j["family"] = std::string(r.family.name());
    j["parameters"] = parameters_json(r.family);
    if (!r.figure.empty()) j["figure"] = r.figure;
    if (!r.note.empty()) j["note"] = r.note;
}

const Grid& require_grid(const Resolved& r) {
    if (!r.grid) throw UnsupportedFamily(std::string(r.family.name()) + " has no polar equation rho(theta, psi)");
    return *r.grid;
}

// Frames exist only for cos(psi) > 0; clip wider ranges (the nested shells of
// the rotational recipe) to the central shell.
Grid frame_grid(const Grid& g, std::ostream& err) {
    const double limit = kPi / 2.0;
    if (g.psi_lo() >= -limit && g.psi_hi() <= limit) return g;
    err << "note: psi range clipped to (-pi/2, pi/2) where the surface frame is defined\n";
    const double margin = g.margin() < 1.0 ? g.margin() : 0.99;
    return Grid(g.theta_lo(), g.theta_hi(), std::max(g.psi_lo(), -limit), std::min(g.psi_hi(), limit), g.n_theta(),
                g.n_psi(), margin);
}

std::string format_vec(const Vec3& v) {
    std::ostringstream os;
    os << std::setprecision(6) << '(' << v.x << ", " << v.y << ", " << v.z << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
    FamilyArgs fa;
    std::string out;
    std::string format{"obj"};
    bool weld{false};
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
    const Resolved r = resolve(args.fa);
    const Grid& grid = require_grid(r);
    TessellateOptions opts;
    opts.weld = args.weld;
    opts.threads = args.fa.threads;
    const TriangleMesh mesh = tessellate(r.family, grid, opts);

    if (args.format == "stl") {
        save_stl(mesh, args.out);
    } else {
        save_obj(mesh, args.out);
    }

    Vec3 lo = mesh.vertices.front();
    Vec3 hi = lo;
    for (const Vec3& v : mesh.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    out << (r.figure.empty() ? std::string(r.family.name()) : r.figure) << ": " << mesh.vertices.size()
        << " vertices, " << mesh.faces.size() << " faces, bbox " << format_vec(lo) << " .. " << format_vec(hi)
        << " -> " << args.out << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    FamilyArgs fa;
    std::string property;
    std::optional<double> tol;
    std::optional<double> psi_c;
    double shift_theta{1.0};
    double shift_psi{0.0};
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const Resolved r = resolve(args.fa);
    const Grid& grid = require_grid(r);
    const unsigned threads = args.fa.threads;

    VerificationReport report;
    if (args.property == "equiangular") {
        report = check_equiangular(r.family, frame_grid(grid, err), args.tol.value_or(1e-7), threads);
    } else if (args.property == "pde") {
        report = check_pde(r.family, frame_grid(grid, err), reference_beta(r.family), args.tol.value_or(1e-9), threads);
    } else if (args.property == "self-similar") {
        const Shift shift{args.fa.angle(args.shift_theta), args.fa.angle(args.shift_psi)};
        Grid g = grid;
        if (const auto lim = r.family.psi_limits(); lim && shift.d_psi != 0.0) {
            // Keep the shifted lattice inside I_a.
            const double lo = std::max(g.psi_lo(), lim->lo - std::min(0.0, shift.d_psi));
            const double hi = std::min(g.psi_hi(), lim->hi - std::max(0.0, shift.d_psi));
            if (!(lo < hi)) throw UsageError("psi shift leaves no room inside [-arctan a, arctan a]");
            g = Grid(g.theta_lo(), g.theta_hi(), lo, hi, g.n_theta(), g.n_psi(), g.margin());
        }
        const Shift shifts[] = {shift};
        report = check_self_similar(r.family, shifts, g, args.tol.value_or(1e-12));
    } else if (args.property == "conchospiral") {
        if (args.tol) err << "note: --tol is ignored for conchospiral (fixed tolerances 1e-12 and 1e-10)\n";
        std::vector<double> thetas;
        for (std::size_t i = 0; i < grid.n_theta(); ++i) thetas.push_back(grid.theta(i));
        const double psi_c = args.psi_c ? args.fa.angle(*args.psi_c) : 0.0;
        report = check_conchospiral_level_curve(r.family, psi_c, thetas);
    } else if (args.property == "spiral2d") {
        double r0 = 0.0;
        double k = 0.0;
        if (const auto* f = r.family.get_if<LogSpiral2D>()) {
            r0 = f->r0;
            k = f->k;
        } else if (const auto* f = r.family.get_if<RotationalSpiral>()) {
            r0 = f->r0;
            k = f->k;
        } else {
            throw UsageError("property spiral2d needs family spiral2d or rotational");
        }
        std::vector<double> thetas;
        for (std::size_t i = 0; i < grid.n_theta(); ++i) thetas.push_back(grid.theta(i));
        report = spiral2d_equiangular_check(r0, k, thetas);
        if (args.tol) {
            report.tolerance = *args.tol;
            report.verdict = report.max_abs_deviation <= report.tolerance;
        }
    } else {
        throw UsageError("unknown property '" + args.property + "'");
    }

    nlohmann::json j = to_json(report);
    annotate(j, r);
    out << j.dump() << '\n';
    return report.verdict ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------

std::string format_number(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

int cmd_info(const FamilyArgs& fa, std::ostream& out) {
    const Resolved r = resolve(fa);
    nlohmann::json j = nlohmann::json::object();
    annotate(j, r);

    const auto set_beta = [&](Angle beta) {
        j["beta_rad"] = beta.radians;
        j["beta_deg"] = beta.degrees();
        j["tan_beta"] = std::tan(beta.radians);
    };

    if (const auto* f = r.family.get_if<EquiangularGeneral>()) {
        const Angle beta = beta_from_mu_a(f->h.mu(), f->h.a());
        const DomainInterval dom = psi_domain(f->h.a());
        set_beta(beta);
        j["psi_domain_lo"] = dom.lo;
        j["psi_domain_hi"] = dom.hi;
        j["h_endpoint_limit"] = h_endpoint_limit(f->h);
        j["self_similar"] = false;
        j["classification"] = "equiangular";
        j["summary"] = "equiangular, beta = arctan(" + format_number(f->h.tan_beta()) + "), not self-similar";
    } else if (const auto* f = r.family.get_if<SelfSimilar>()) {
        const Classification c = classify_self_similar_equiangular(f->mu, f->b);
        j["self_similar"] = true;
        if (c.equiangular) {
            set_beta(c.beta);
            j["classification"] = "equiangular";
            j["summary"] = "equiangular, beta = arctan " + format_number(std::abs(f->b));
        } else {
            std::vector<double> psis;
            std::vector<double> betas;
            for (const auto& [psi, beta] : c.witnesses) {
                psis.push_back(psi);
                betas.push_back(beta.radians);
            }
            j["witness_psi"] = psis;
            j["witness_beta_rad"] = betas;
            j["classification"] = "not equiangular";
            j["summary"] = "not equiangular (mu != 0)";
        }
    } else if (const auto* f = r.family.get_if<LogSpiral2D>()) {
        j["alpha_rad"] = std::atan2(1.0, f->k);
        j["cot_alpha"] = f->k;
        j["self_similar"] = true;
        j["classification"] = "equiangular spiral";
        j["summary"] = "equiangular spiral, cot alpha = " + format_number(f->k);
    } else {
        const Angle beta = *r.family.characteristic_angle();
        set_beta(beta);
        j["self_similar"] = true;
        const bool degenerate = r.family.kind() == FamilyKind::Cone || r.family.kind() == FamilyKind::PlaneThroughOrigin;
        j["classification"] = degenerate ? "equiangular (degenerate)" : "equiangular";
        j["summary"] = std::string(degenerate ? "equiangular (degenerate)" : "equiangular") + ", beta = " +
                       format_number(beta.radians) + " rad";
    }
    out << j.dump() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SectionArgs {
    FamilyArgs fa;
    std::string plane;
    std::size_t n{400};
    std::string out;
};

int cmd_section(const SectionArgs& args, std::ostream& out) {
    if (args.n < 2) throw UsageError("need at least 2 samples");
    const Resolved r = resolve(args.fa);
    const Grid& grid = require_grid(r);
    const SectionPlane plane = parse_section_plane(args.plane);

    // Explicit or recipe latitude range without the sampling margin.
    std::optional<DomainInterval> range;
    if (!r.figure.empty() || args.fa.psi_lo || args.fa.psi_hi) range = DomainInterval{grid.psi_lo(), grid.psi_hi()};
    const std::vector<Polyline> lines = cross_section(r.family, plane, args.n, range);

    std::ofstream file;
    file.exceptions(std::ios::failbit | std::ios::badbit);
    file.open(args.out, std::ios::trunc);
    write_polylines_csv(lines, file);
    file.close();

    std::size_t points = 0;
    for (const auto& l : lines) points += l.points.size();
    out << (r.figure.empty() ? std::string(r.family.name()) : r.figure) << ": " << lines.size() << " polylines, "
        << points << " points -> " << args.out << '\n';
    return kExitOk;
}

void report_error(std::ostream& err, const RunOptions& opts, const std::string& message) {
    if (opts.color) {
        err << "\x1b[31merror:\x1b[0m " << message << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts) {
    CLI::App app{"Equiangular and self-similar surfaces: meshes, sections and property checks", "seashell"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Tessellate a surface and write OBJ or STL");
    add_family_options(generate, gen.fa, true);
    generate->add_option("--out", gen.out, "Output mesh path")->required();
    generate->add_option("--format", gen.format, "obj or stl")->check(CLI::IsMember({"obj", "stl"}));
    generate->add_flag("--weld", gen.weld, "Merge coincident seam vertices");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check a geometric property and print a JSON report");
    add_family_options(verify, ver.fa, true);
    verify->add_option("--property", ver.property, "Property to check")
        ->required()
        ->check(CLI::IsMember({"equiangular", "self-similar", "pde", "conchospiral", "spiral2d"}));
    verify->add_option("--tol", ver.tol, "Pass/fail tolerance");
    verify->add_option("--psi-c", ver.psi_c, "Latitude of the level curve (conchospiral)");
    verify->add_option("--shift-theta", ver.shift_theta, "Theta shift (self-similar)");
    verify->add_option("--shift-psi", ver.shift_psi, "Psi shift (self-similar)");

    FamilyArgs info_args;
    auto* info = app.add_subcommand("info", "Print derived quantities as JSON");
    add_family_options(info, info_args, false);

    SectionArgs sec;
    auto* section = app.add_subcommand("section", "Write cross-section polylines as CSV");
    add_family_options(section, sec.fa, true);
    section->add_option("--plane", sec.plane, "x0 or y0")->required();
    section->add_option("--n", sec.n, "Samples per polyline");
    section->add_option("--out", sec.out, "Output CSV path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, opts, e.what());
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, out);
        if (verify->parsed()) return cmd_verify(ver, out, err);
        if (info->parsed()) return cmd_info(info_args, out);
        if (section->parsed()) return cmd_section(sec, out);
        report_error(err, opts, "no subcommand given");
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        report_error(err, opts, std::string("I/O failure: ") + e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        report_error(err, opts, std::string("I/O failure: ") + e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        report_error(err, opts, e.what());
        return kExitUsage;
    }
}

}  // namespace seashell::cli
