#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seashell/family.hpp"
#include "seashell/geometry.hpp"
#include "seashell/grid.hpp"

namespace seashell {

struct TriangleMesh {
    std::vector<Vec3> vertices;
    /// Unit vertex normals, one per vertex.
    std::vector<Vec3> normals;
    /// Counterclockwise seen from the side the normals point to.
    std::vector<std::array<std::uint32_t, 3>> faces;

    bool empty() const { return faces.empty(); }
};

struct TessellateOptions {
    /// Merge last-column seam vertices into the first column when they coincide.
    bool weld{false};
    double weld_tolerance{1e-9};
    unsigned threads{1};
};

/// Lattice mesh of the family over the grid: vertex (i, j) sits at
/// X(theta_i, psi_j) with index i + j * n_theta, two triangles per cell.
/// Vertex normals come from the analytic frame where it exists; elsewhere
/// (cos psi <= 0, pole rows) they are area-weighted averages of the adjacent
/// face normals. Zero-area triangles, which appear where a grid row collapses
/// onto the z-axis, are dropped.
///
/// Throws UnsupportedFamily for non-polar families, DomainError if the grid
/// leaves the family domain, MeshError if rho vanishes.
TriangleMesh tessellate(const SurfaceFamily& family, const Grid& grid, const TessellateOptions& opts = {});

/// Unit normal of a face from the cross product of its edges.
Vec3 face_normal(const TriangleMesh& mesh, std::size_t face);

/// ASCII OBJ with `v`, `vn` and `f i//i j//j k//k` records, 9 significant
/// digits. Throws EmptyMesh before writing anything.
void write_obj(const TriangleMesh& mesh, std::ostream& out);

/// Binary little-endian STL, 84 + 50 * faces bytes. Throws EmptyMesh.
void write_stl(const TriangleMesh& mesh, std::ostream& out);

/// File variants; the file is only created once the mesh is known to be
/// writable. Throws std::ios_base::failure on IO errors.
void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path);
void save_stl(const TriangleMesh& mesh, const std::filesystem::path& path);

/// Minimal OBJ reader for `v`, `vn` and `f a//a b//b c//c` records.
TriangleMesh read_obj(std::istream& in);

struct Polyline {
    std::vector<Vec3> points;
};

/// Axis-aligned planes through the z-axis.
enum class SectionPlane {
    X0,  ///< x = 0, half-planes theta = pi/2 and 3 pi/2
    Y0,  ///< y = 0, half-planes theta = 0 and pi
};

/// Meridian curves of the family in the section plane, one polyline per
/// half-plane, each sampled at n latitudes over `psi_range` (default: the
/// family domain, or [-pi/2, pi/2]). Throws UnsupportedPlane for planes not
/// containing the z-axis and InvalidParameter if n < 2.
std::vector<Polyline> cross_section(const SurfaceFamily& family, SectionPlane plane, std::size_t n,
                                    std::optional<DomainInterval> psi_range = std::nullopt);

/// Parses "x0" / "y0"; anything else is UnsupportedPlane.
SectionPlane parse_section_plane(std::string_view name);

/// CSV with header `x,y,z` and one point per line (9 significant digits);
/// polylines are separated by an empty line.
void write_polylines_csv(std::span<const Polyline> lines, std::ostream& out);

}  // namespace seashell
