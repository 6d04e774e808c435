#ifndef DEVSURF_GEOM_IO_HPP
#define DEVSURF_GEOM_IO_HPP

#include <array>
#include <string>

#include "devsurf/tangent_dev.hpp"
#include "devsurf/vec.hpp"

namespace devsurf {

// Mesh document: 1-based face indices, quads or triangles.
struct Mesh3Doc {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  std::vector<std::array<double, 2>> provenance;  // optional (tau, s) per vertex
};

// Developed-pattern document: directrix polyline plus ruling segments.
struct Flat2Doc {
  std::vector<Vec2> directrix;
  std::vector<std::array<Vec2, 2>> rulings;
};

struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
};

Mesh3Doc mesh_from_grid(const SurfaceMesh& grid);

// ASCII OBJ, 17 significant digits, deterministic order. Throws IoError
// on out-of-range indices or non-finite coordinates.
std::string export_obj(const Mesh3Doc& mesh);

// Standalone SVG; y axis flipped (SVG is y-down), which is noted in a
// comment element.
std::string export_svg(const Flat2Doc& flat, double stroke_width = 0.01);

// Header row then data rows, 17 significant digits, LF endings.
std::string export_csv(const Table& table);

// Inverse of export_csv; values round-trip bitwise.
Table parse_csv(const std::string& text);

}  // namespace devsurf

#endif
