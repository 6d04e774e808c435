#include "devsurf/geom_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "devsurf/error.hpp"

namespace devsurf {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_finite(const Vec3& v) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
    throw IoError("export_obj: non-finite vertex coordinate");
}

}  // namespace

Mesh3Doc mesh_from_grid(const SurfaceMesh& grid) {
  Mesh3Doc doc;
  doc.vertices.reserve(grid.vertices.size());
  doc.provenance.reserve(grid.vertices.size());
  for (const auto& p : grid.vertices) {
    doc.vertices.push_back(p.p);
    doc.provenance.push_back({p.tau, p.s});
  }
  for (int i = 0; i + 1 < grid.ntau; ++i) {
    for (int j = 0; j + 1 < grid.ns; ++j) {
      const int a = i * grid.ns + j + 1;
      const int b = (i + 1) * grid.ns + j + 1;
      doc.faces.push_back({a, b, b + 1, a + 1});
    }
  }
  return doc;
}

std::string export_obj(const Mesh3Doc& mesh) {
  std::string out = "# devsurf mesh\n";
  out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 20);
  for (const auto& v : mesh.vertices) {
    require_finite(v);
    out += "v " + num(v.x) + " " + num(v.y) + " " + num(v.z) + "\n";
  }
  const int n = static_cast<int>(mesh.vertices.size());
  for (const auto& f : mesh.faces) {
    if (f.size() < 3) throw IoError("export_obj: face with fewer than 3 indices");
    out += "f";
    for (int idx : f) {
      if (idx < 1 || idx > n) throw IoError("export_obj: face index out of range");
      out += " " + std::to_string(idx);
    }
    out += "\n";
  }
  return out;
}

std::string export_svg(const Flat2Doc& flat, double stroke_width) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  auto grow = [&](const Vec2& p) {
    if (first) {
      x0 = x1 = p.x;
      y0 = y1 = -p.y;
      first = false;
      return;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, -p.y);
    y1 = std::max(y1, -p.y);
  };
  for (const auto& p : flat.directrix) grow(p);
  for (const auto& r : flat.rulings) {
    grow(r[0]);
    grow(r[1]);
  }
  const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-6});
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) +
                    " " + num(y0) + " " + num(x1 - x0) + " " + num(y1 - y0) + "\">\n";
  out += "<!-- y axis flipped: plane (x, y) maps to SVG (x, -y) -->\n";
  const std::string sw = num(stroke_width);
  for (const auto& r : flat.rulings) {
    out += "<line x1=\"" + num(r[0].x) + "\" y1=\"" + num(-r[0].y) + "\" x2=\"" +
           num(r[1].x) + "\" y2=\"" + num(-r[1].y) +
           "\" stroke=\"#888888\" stroke-width=\"" + sw + "\"/>\n";
  }
  if (!flat.directrix.empty()) {
    out += "<path fill=\"none\" stroke=\"#000000\" stroke-width=\"" + sw + "\" d=\"";
    for (std::size_t i = 0; i < flat.directrix.size(); ++i) {
      out += (i == 0 ? "M " : " L ");
      out += num(flat.directrix[i].x) + " " + num(-flat.directrix[i].y);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string export_csv(const Table& table) {
  if (table.names.size() != table.columns.size())
    throw IoError("export_csv: name/column count mismatch");
  std::size_t rows = 0;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c == 0)
      rows = table.columns[c].size();
    else if (table.columns[c].size() != rows)
      throw IoError("export_csv: ragged columns");
  }
  std::string out;
  for (std::size_t c = 0; c < table.names.size(); ++c) {
    if (c) out += ",";
    out += table.names[c];
  }
  out += "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ",";
      out += num(table.columns[c][r]);
    }
    out += "\n";
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table table;
  std::size_t pos = 0;
  auto next_line = [&](std::string& line) {
    if (pos >= text.size()) return false;
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    return true;
  };
  std::string line;
  if (!next_line(line) || line.empty()) throw IoError("parse_csv: missing header");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    table.names.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  table.columns.resize(table.names.size());
  std::size_t row = 1;
  while (next_line(line)) {
    if (line.empty()) continue;
    start = 0;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (start > line.size())
        throw IoError("parse_csv: short row " + std::to_string(row));
      const std::size_t comma = line.find(',', start);
      const std::string cell = line.substr(start, comma - start);
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0')
        throw IoError("parse_csv: bad number '" + cell + "' in row " +
                      std::to_string(row));
      table.columns[c].push_back(v);
      start = comma == std::string::npos ? line.size() + 1 : comma + 1;
    }
    if (start <= line.size())
      throw IoError("parse_csv: extra cells in row " + std::to_string(row));
    ++row;
  }
  return table;
}

}  // namespace devsurf
