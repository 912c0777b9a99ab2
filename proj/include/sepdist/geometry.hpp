#pragma once

// Diagonal-correlation slice w_c = (1 + sum c_i s_i x s_i)/4 of the two-qubit
// state space: the Bell tetrahedron, its partial-transpose mirror image and
// the separable octahedron |c_1| + |c_2| + |c_3| <= 1.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sepdist/pauli_space.hpp"

namespace sepdist {

inline constexpr double kBoundaryTol = 1e-10;

struct CRegionSample {
  Vec3 c;
  bool in_tetrahedron;
  bool in_mirror;
  bool separable;
  std::optional<double> distance;
};

/// Vertices of the tetrahedron of states (the four Bell projectors).
const std::array<Vec3, 4>& tetrahedron_vertices();

/// Classification by half-space tests; `separable` is sum|c_i| <= 1.
CRegionSample classify_c(const Vec3& c);

/// resolution^3 points of the regular grid over [-1, 1]^3, lexicographic in
/// (c1, c2, c3).
std::vector<CRegionSample> sample_regions(int resolution);

enum class Region { Tetra, Mirror, Intersection, Pyramid };

Region parse_region(const std::string& name);

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

Mesh export_mesh(Region which);

/// {"vertices": [[x,y,z]...], "faces": [[i,j,k]...]}
std::string mesh_to_json(const Mesh& mesh);
/// Object File Format text.
std::string mesh_to_off(const Mesh& mesh);

/// c1,c2,c3,in_tetra,in_mirror,separable with a header row.
void write_samples_csv(std::ostream& out, const std::vector<CRegionSample>& samples);

namespace serial {
std::vector<CRegionSample> sample_regions(int resolution);
}  // namespace serial

}  // namespace sepdist
