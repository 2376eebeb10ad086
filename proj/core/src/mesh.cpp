#include "seashell/mesh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "seashell/errors.hpp"
#include "seashell/parallel.hpp"
#include "seashell/surface.hpp"

namespace seashell {
namespace {

constexpr double kDegenerateRatio = 1e-12;

// Twice the triangle area is negligible against its longest edge squared.
bool degenerate(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double twice_area = norm(cross(b - a, c - a));
    const double longest =
        std::max({norm_squared(b - a), norm_squared(c - b), norm_squared(a - c)});
    return !(twice_area > kDegenerateRatio * longest);
}

std::string format_g9(double v) {
    char buf[32];
    // Avoid "-0" so identical geometry always prints identically.
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void put_u32(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

void put_f32(std::ostream& out, double v) { put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v))); }

void put_vec(std::ostream& out, const Vec3& v) {
    put_f32(out, v.x);
    put_f32(out, v.y);
    put_f32(out, v.z);
}

void require_non_empty(const TriangleMesh& mesh) {
    if (mesh.faces.empty()) throw EmptyMesh("mesh has no faces");
}

template <typename Writer>
void save_with(const TriangleMesh& mesh, const std::filesystem::path& path, Writer&& writer, bool binary) {
    require_non_empty(mesh);
    std::ofstream out;
    out.exceptions(std::ios::failbit | std::ios::badbit);
    out.open(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    writer(mesh, out);
    out.close();
}

// Drops vertices welded into another index and renumbers faces.
void compact(TriangleMesh& mesh, const std::vector<std::uint32_t>& remap) {
    std::vector<std::uint32_t> new_index(mesh.vertices.size());
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (remap[i] != i) continue;
        new_index[i] = static_cast<std::uint32_t>(vertices.size());
        vertices.push_back(mesh.vertices[i]);
        normals.push_back(mesh.normals[i]);
    }
    for (auto& f : mesh.faces) {
        for (auto& idx : f) idx = new_index[remap[idx]];
    }
    mesh.vertices = std::move(vertices);
    mesh.normals = std::move(normals);
}

}  // namespace

TriangleMesh tessellate(const SurfaceFamily& family, const Grid& grid, const TessellateOptions& opts) {
    if (!family.polar_representable()) {
        throw UnsupportedFamily(std::string(family.name()) + " cannot be tessellated from a polar equation");
    }
    const std::size_t nt = grid.n_theta();
    const std::size_t np = grid.n_psi();
    if (grid.size() > std::numeric_limits<std::uint32_t>::max()) throw MeshError("grid too large for 32-bit indices");

    TriangleMesh mesh;
    mesh.vertices.resize(grid.size());
    mesh.normals.resize(grid.size());
    std::vector<char> analytic(grid.size(), 0);

    parallel_for(grid.size(), opts.threads, [&](std::size_t k) {
        const PolarPoint p = grid.at(k);
        const double rho = eval_rho(family, p);
        if (!(rho > 0.0)) {
            std::ostringstream msg;
            msg << "rho vanishes at (theta = " << p.theta << ", psi = " << p.psi << ")";
            throw MeshError(msg.str());
        }
        mesh.vertices[k] = to_cartesian(p, rho);
        if (frame_defined(family, p)) {
            const Vec3 n = surface_sample(family, p).N;
            const double len = norm(n);
            if (len > 0.0 && std::isfinite(len)) {
                mesh.normals[k] = n * (1.0 / len);
                analytic[k] = 1;
            }
        }
    });

    mesh.faces.reserve(2 * (nt - 1) * (np - 1));
    const auto index = [nt](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i + j * nt); };
    for (std::size_t j = 0; j + 1 < np; ++j) {
        for (std::size_t i = 0; i + 1 < nt; ++i) {
            const std::uint32_t v00 = index(i, j);
            const std::uint32_t v10 = index(i + 1, j);
            const std::uint32_t v11 = index(i + 1, j + 1);
            const std::uint32_t v01 = index(i, j + 1);
            for (const std::array<std::uint32_t, 3> f : {std::array{v00, v10, v11}, std::array{v00, v11, v01}}) {
                if (!degenerate(mesh.vertices[f[0]], mesh.vertices[f[1]], mesh.vertices[f[2]])) {
                    mesh.faces.push_back(f);
                }
            }
        }
    }

    // Area-weighted face normals for vertices without an analytic frame.
    if (std::find(analytic.begin(), analytic.end(), 0) != analytic.end()) {
        std::vector<Vec3> accum(mesh.vertices.size());
        for (const auto& f : mesh.faces) {
            const Vec3 n = cross(mesh.vertices[f[1]] - mesh.vertices[f[0]], mesh.vertices[f[2]] - mesh.vertices[f[0]]);
            for (auto idx : f) accum[idx] += n;
        }
        for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
            if (analytic[k]) continue;
            if (norm(accum[k]) > 0.0) {
                mesh.normals[k] = normalized(accum[k]);
            } else {
                mesh.normals[k] = normalized(mesh.vertices[k]);
            }
        }
    }

    if (opts.weld) {
        std::vector<std::uint32_t> remap(mesh.vertices.size());
        for (std::size_t k = 0; k < remap.size(); ++k) remap[k] = static_cast<std::uint32_t>(k);
        bool any = false;
        for (std::size_t j = 0; j < np; ++j) {
            const std::uint32_t first = index(0, j);
            const std::uint32_t last = index(nt - 1, j);
            if (norm(mesh.vertices[last] - mesh.vertices[first]) <= opts.weld_tolerance) {
                remap[last] = first;
                any = true;
            }
        }
        if (any) compact(mesh, remap);
    }
    return mesh;
}

Vec3 face_normal(const TriangleMesh& mesh, std::size_t face) {
    const auto& f = mesh.faces.at(face);
    const Vec3& a = mesh.vertices[f[0]];
    return normalized(cross(mesh.vertices[f[1]] - a, mesh.vertices[f[2]] - a));
}

void write_obj(const TriangleMesh& mesh, std::ostream& out) {
    require_non_empty(mesh);
    if (mesh.normals.size() != mesh.vertices.size()) throw MeshError("normal count differs from vertex count");

    std::string buf;
    for (const Vec3& v : mesh.vertices) {
        buf += "v " + format_g9(v.x) + ' ' + format_g9(v.y) + ' ' + format_g9(v.z) + '\n';
    }
    for (const Vec3& n : mesh.normals) {
        buf += "vn " + format_g9(n.x) + ' ' + format_g9(n.y) + ' ' + format_g9(n.z) + '\n';
    }
    for (const auto& f : mesh.faces) {
        buf += 'f';
        for (auto idx : f) {
            const std::string i = std::to_string(idx + 1);
            buf += ' ' + i + "//" + i;
        }
        buf += '\n';
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_stl(const TriangleMesh& mesh, std::ostream& out) {
    require_non_empty(mesh);

    char header[80] = {};
    constexpr char title[] = "seashell binary STL";
    std::copy(std::begin(title), std::end(title) - 1, header);
    out.write(header, sizeof header);
    put_u32(out, static_cast<std::uint32_t>(mesh.faces.size()));

    constexpr char attribute[2] = {0, 0};
    for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
        put_vec(out, face_normal(mesh, i));
        for (auto idx : mesh.faces[i]) put_vec(out, mesh.vertices[idx]);
        out.write(attribute, 2);
    }
}

void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path) {
    save_with(mesh, path, [](const TriangleMesh& m, std::ostream& o) { write_obj(m, o); }, false);
}

void save_stl(const TriangleMesh& mesh, const std::filesystem::path& path) {
    save_with(mesh, path, [](const TriangleMesh& m, std::ostream& o) { write_stl(m, o); }, true);
}

TriangleMesh read_obj(std::istream& in) {
    TriangleMesh mesh;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v" || tag == "vn") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) throw MeshError("malformed OBJ record: " + line);
            (tag == "v" ? mesh.vertices : mesh.normals).push_back(v);
        } else if (tag == "f") {
            std::array<std::uint32_t, 3> f{};
            for (auto& idx : f) {
                std::string token;
                if (!(ls >> token)) throw MeshError("malformed OBJ face: " + line);
                const unsigned long one_based = std::stoul(token.substr(0, token.find('/')));
                if (one_based == 0) throw MeshError("OBJ indices are 1-based: " + line);
                idx = static_cast<std::uint32_t>(one_based - 1);
            }
            mesh.faces.push_back(f);
        }
    }
    return mesh;
}

SectionPlane parse_section_plane(std::string_view name) {
    if (name == "x0") return SectionPlane::X0;
    if (name == "y0") return SectionPlane::Y0;
    throw UnsupportedPlane("unsupported section plane '" + std::string(name) + "' (expected x0 or y0)");
}

std::vector<Polyline> cross_section(const SurfaceFamily& family, SectionPlane plane, std::size_t n,
                                    std::optional<DomainInterval> psi_range) {
    if (!family.polar_representable()) {
        throw UnsupportedFamily(std::string(family.name()) + " has no polar equation to section");
    }
    if (n < 2) throw InvalidParameter("need at least 2 samples");
    if (plane != SectionPlane::X0 && plane != SectionPlane::Y0) throw UnsupportedPlane("unsupported section plane");

    DomainInterval range{-std::numbers::pi / 2.0, std::numbers::pi / 2.0};
    if (psi_range) {
        range = *psi_range;
    } else if (const auto lim = family.psi_limits()) {
        range = *lim;
    }
    if (!(range.lo < range.hi)) throw InvalidParameter("section latitude range must be non-empty");

    struct HalfPlane {
        double theta;
        double c;
        double s;
    };
    constexpr double pi = std::numbers::pi;
    const std::array<HalfPlane, 2> halves =
        plane == SectionPlane::Y0 ? std::array<HalfPlane, 2>{{{0.0, 1.0, 0.0}, {pi, -1.0, 0.0}}}
                                  : std::array<HalfPlane, 2>{{{pi / 2.0, 0.0, 1.0}, {3.0 * pi / 2.0, 0.0, -1.0}}};

    std::vector<Polyline> out;
    for (const HalfPlane& h : halves) {
        Polyline line;
        line.points.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double psi =
                i + 1 == n ? range.hi : range.lo + (range.hi - range.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
            const double rho = eval_rho(family, {h.theta, psi});
            const double horizontal = rho * std::cos(psi);
            const Vec3 p{horizontal * h.c, horizontal * h.s, rho * std::sin(psi)};
            if (!line.points.empty() && line.points.back() == p) {
                throw MeshError("section polyline has coincident consecutive points");
            }
            line.points.push_back(p);
        }
        out.push_back(std::move(line));
    }
    return out;
}

void write_polylines_csv(std::span<const Polyline> lines, std::ostream& out) {
    std::string buf = "x,y,z\n";
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (k > 0) buf += '\n';
        for (const Vec3& p : lines[k].points) {
            buf += format_g9(p.x) + ',' + format_g9(p.y) + ',' + format_g9(p.z) + '\n';
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

}  // namespace seashell
