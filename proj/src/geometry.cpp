#include "sepdist/geometry.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sepdist/error.hpp"

namespace sepdist {

namespace {

// 4 x eigenvalues of w_c; all nonnegative iff c is in the tetrahedron.
std::array<double, 4> tetra_margins(const Vec3& c) {
  return {1.0 - c(0) - c(1) - c(2), 1.0 - c(0) + c(1) + c(2), 1.0 + c(0) - c(1) + c(2),
          1.0 + c(0) + c(1) - c(2)};
}

bool inside(const std::array<double, 4>& margins) {
  for (double m : margins)
    if (m < -kBoundaryTol) return false;
  return true;
}

double grid_coord(int k, int resolution) {
  return -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(resolution - 1);
}

std::vector<CRegionSample> sample(int resolution, bool parallel) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  const int total = resolution * resolution * resolution;
  std::vector<CRegionSample> out(static_cast<std::size_t>(total));
  auto fill = [&](int idx) {
    const int i = idx / (resolution * resolution);
    const int j = (idx / resolution) % resolution;
    const int k = idx % resolution;
    out[static_cast<std::size_t>(idx)] = classify_c(
        Vec3(grid_coord(i, resolution), grid_coord(j, resolution), grid_coord(k, resolution)));
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < total; ++idx) fill(idx);
  } else {
    for (int idx = 0; idx < total; ++idx) fill(idx);
  }
  return out;
}

// Wind every face counter-clockwise seen from outside (mesh centred at 0).
void orient_outward(Mesh& m) {
  for (auto& f : m.faces) {
    const Vec3& p0 = m.vertices[static_cast<std::size_t>(f[0])];
    const Vec3& p1 = m.vertices[static_cast<std::size_t>(f[1])];
    const Vec3& p2 = m.vertices[static_cast<std::size_t>(f[2])];
    if ((p1 - p0).cross(p2 - p0).dot(p0 + p1 + p2) < 0.0) std::swap(f[1], f[2]);
  }
}

Mesh tetra_mesh(double sign) {
  Mesh m;
  for (const Vec3& v : tetrahedron_vertices()) m.vertices.push_back(sign * v);
  m.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  orient_outward(m);
  return m;
}

Mesh octahedron_mesh() {
  Mesh m;
  m.vertices = {Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
                Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1)};
  // One face per octant.
  for (int sx : {0, 1})
    for (int sy : {2, 3})
      for (int sz : {4, 5}) m.faces.push_back({sx, sy, sz});
  orient_outward(m);
  return m;
}

}  // namespace

const std::array<Vec3, 4>& tetrahedron_vertices() {
  static const std::array<Vec3, 4> v = {Vec3(-1, -1, -1), Vec3(-1, 1, 1), Vec3(1, -1, 1),
                                        Vec3(1, 1, -1)};
  return v;
}

CRegionSample classify_c(const Vec3& c) {
  const bool tetra = inside(tetra_margins(c));
  // Partial transposition maps c to (c1, -c2, c3), the mirror image.
  const bool mirror = inside(tetra_margins(Vec3(c(0), -c(1), c(2))));
  const bool separable = c.cwiseAbs().sum() <= 1.0 + kBoundaryTol;
  return {c, tetra, mirror, separable, std::nullopt};
}

std::vector<CRegionSample> sample_regions(int resolution) { return sample(resolution, true); }

namespace serial {
std::vector<CRegionSample> sample_regions(int resolution) { return sample(resolution, false); }
}  // namespace serial

Region parse_region(const std::string& name) {
  if (name == "tetra") return Region::Tetra;
  if (name == "mirror") return Region::Mirror;
  if (name == "intersection") return Region::Intersection;
  if (name == "pyramid") return Region::Pyramid;
  throw Error(ErrorCode::UnknownRegion, "'" + name + "' is not tetra|mirror|intersection|pyramid");
}

Mesh export_mesh(Region which) {
  switch (which) {
    case Region::Tetra: return tetra_mesh(1.0);
    case Region::Mirror: return tetra_mesh(-1.0);
    case Region::Intersection:
    case Region::Pyramid: return octahedron_mesh();
  }
  throw Error(ErrorCode::UnknownRegion, "unknown region");
}

std::string mesh_to_json(const Mesh& mesh) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Vec3& v : mesh.vertices) j["vertices"].push_back({v(0), v(1), v(2)});
  j["faces"] = mesh.faces;
  return j.dump(2);
}

std::string mesh_to_off(const Mesh& mesh) {
  std::ostringstream os;
  os << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
  for (const Vec3& v : mesh.vertices) os << v(0) << ' ' << v(1) << ' ' << v(2) << '\n';
  for (const auto& f : mesh.faces) os << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  return os.str();
}

void write_samples_csv(std::ostream& out, const std::vector<CRegionSample>& samples) {
  out << "c1,c2,c3,in_tetra,in_mirror,separable\n";
  out << std::setprecision(9);
  for (const auto& s : samples) {
    out << s.c(0) << ',' << s.c(1) << ',' << s.c(2) << ',' << int(s.in_tetrahedron) << ','
        << int(s.in_mirror) << ',' << int(s.separable) << '\n';
  }
}

}  // namespace sepdist
