#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sepdist/distance_solver.hpp"
#include "sepdist/geometry.hpp"
#include "sepdist/states.hpp"

using namespace sepdist;

TEST_CASE("vertices are the Bell states") {
  const auto& v = tetrahedron_vertices();
  const auto p = bell_projectors();
  for (int i = 0; i < 4; ++i) CHECK(hs_norm(w_c_state(v[i]).op() - p[i].op()) < 1e-12);
}

TEST_CASE("classification of named points") {
  CHECK(classify_c(Vec3::Zero()).separable);
  CHECK(classify_c(Vec3(-1, -1, -1)).in_tetrahedron);
  CHECK_FALSE(classify_c(Vec3(-1, -1, -1)).in_mirror);
  CHECK_FALSE(classify_c(Vec3(-1, -1, -1)).separable);
  CHECK(classify_c(Vec3(1, 0, 0)).separable);  // octahedron vertex
  CHECK_FALSE(classify_c(Vec3(0.5, 0.5, 0.5)).in_tetrahedron);
  CHECK(classify_c(Vec3(1.0 / 3, 1.0 / 3, 1.0 / 3)).separable);
}

TEST_CASE("four-way agreement on the grid") {
  const auto samples = sample_regions(21);
  REQUIRE(samples.size() == 21u * 21u * 21u);
  int separable = 0;
  for (const auto& s : samples) {
    const bool sum_rule = s.c.cwiseAbs().sum() <= 1.0 + kBoundaryTol;
    CHECK(s.separable == (s.in_tetrahedron && s.in_mirror));
    CHECK(s.separable == sum_rule);
    if (s.in_tetrahedron) CHECK(is_ppt(w_c_state(s.c)) == s.separable);
    separable += s.separable;
  }
  CHECK(std::abs(separable / 9261.0 - 1.0 / 6.0) < 0.05 / 6.0);
}

TEST_CASE("samples are in lexicographic order and match the serial path") {
  const auto p = sample_regions(9), s = serial::sample_regions(9);
  REQUIRE(p.size() == s.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p[i].c == s[i].c);
    CHECK(p[i].separable == s[i].separable);
  }
  CHECK(p.front().c == Vec3(-1, -1, -1));
  CHECK(p[1].c == Vec3(-1, -1, -0.75));
  CHECK_THROWS_AS(sample_regions(1), std::invalid_argument);
}

TEST_CASE("meshes are closed and outward oriented") {
  for (Region r : {Region::Tetra, Region::Mirror, Region::Intersection, Region::Pyramid}) {
    const Mesh m = export_mesh(r);
    std::map<std::pair<int, int>, int> edges;
    double volume = 0.0;
    for (const auto& f : m.faces) {
      for (int k = 0; k < 3; ++k) edges[{f[k], f[(k + 1) % 3]}] += 1;
      volume += m.vertices[f[0]].dot(m.vertices[f[1]].cross(m.vertices[f[2]])) / 6.0;
    }
    for (const auto& [e, count] : edges) {
      CHECK(count == 1);
      CHECK(edges.count({e.second, e.first}) == 1);
    }
    const double expected = (r == Region::Tetra || r == Region::Mirror) ? 8.0 / 3.0 : 4.0 / 3.0;
    CHECK(volume == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(export_mesh(Region::Intersection).faces.size() == 8);
}

TEST_CASE("mesh serializations") {
  const Mesh m = export_mesh(Region::Tetra);
  std::istringstream off(mesh_to_off(m));
  std::string header;
  int nv = 0, nf = 0, ne = -1;
  off >> header >> nv >> nf >> ne;
  CHECK(header == "OFF");
  CHECK(nv == 4);
  CHECK(nf == 4);
  const auto j = nlohmann::json::parse(mesh_to_json(m));
  CHECK(j.at("vertices").size() == 4);
  CHECK(j.at("faces").size() == 4);
  CHECK(parse_region("pyramid") == Region::Pyramid);
  CHECK_THROWS_AS(parse_region("cube"), Error);
}

TEST_CASE("CSV columns") {
  std::ostringstream os;
  write_samples_csv(os, sample_regions(2));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "c1,c2,c3,in_tetra,in_mirror,separable");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
}

TEST_CASE("partial transpose mirrors c2") {
  Rng rng(derive_seed(7, 0));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const Vec3 c(u(rng), u(rng), u(rng));
    PauliCoeffs2Q p;
    p.alpha = 0.25;
    p.c = c.asDiagonal();
    p.c /= 4.0;
    const PauliCoeffs2Q q = to_pauli(partial_transpose_b(from_pauli(p)));
    const Vec3 mirrored(c(0), -c(1), c(2));
    CHECK((4.0 * q.c.diagonal() - mirrored).norm() < 1e-14);
    CHECK((q.c - Mat3(q.c.diagonal().asDiagonal())).norm() < 1e-14);
  }
}

TEST_CASE("w_c distance is positive iff sum |c| > 1") {
  Rng rng(derive_seed(7, 1));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 50) {
    const Vec3 c(u(rng), u(rng), u(rng));
    const CRegionSample s = classify_c(c);
    if (!s.in_tetrahedron || std::abs(c.cwiseAbs().sum() - 1.0) < 0.02) continue;
    const double d = distance(w_c_state(c)).distance;
    CHECK((d > 1e-6) == (c.cwiseAbs().sum() > 1.0));
    ++checked;
  }
}
