#include "doctest.h"
#include "oracles.hpp"

#include "tetradf/errors.hpp"
#include "tetradf/simplex.hpp"

#include <random>

using namespace tetradf;

namespace
{

double dist(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

double dist2(const Point2 &a, const Point2 &b) { return std::hypot(a.u - b.u, a.v - b.v); }

} // namespace

TEST_CASE("build_tetra: radius for the 0.5 m array")
{
  const auto array = TetraArray::build(0.5, 3e8);
  CHECK(array.circumradius() == doctest::Approx(0.306186217847897262).epsilon(1e-15));
  CHECK(array.edge_length() == 0.5);
  CHECK(array.propagation_speed() == 3e8);
}

TEST_CASE("build_tetra: unit radius puts d at (0, 0, 1)")
{
  const auto array = TetraArray::build(4.0 / std::sqrt(6.0), 1.0);
  const Vec3 &d = array.vertex(Vertex::d);
  CHECK(d.x == 0.0);
  CHECK(d.y == 0.0);
  CHECK(d.z == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("build_tetra: vertices follow the vertex table")
{
  const auto array = TetraArray::build(0.5, 1500.0);
  const auto expected = oracle::table_vertices(oracle::radius_for_edge(0.5));
  for (auto v : kVertices)
  {
    const Vec3 &got = array.vertex(v);
    const Vec3 &want = expected[index_of(v)];
    CHECK(dist(got, want) < 1e-15);
  }
}

TEST_CASE("build_tetra: sum of squared vertex norms is 1.5 l^2")
{
  const auto array = TetraArray::build(1.0, 1.0);
  double s = 0.0;
  for (const auto &v : array.vertices())
    s += dot(v, v);
  CHECK(s == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("build_tetra: rejects non-positive and non-finite parameters")
{
  CHECK_THROWS_AS(TetraArray::build(0.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(TetraArray::build(-1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(TetraArray::build(1.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(TetraArray::build(NAN, 1.0), InvalidParameter);
  CHECK_THROWS_AS(TetraArray::build(1.0, INFINITY), InvalidParameter);
}

TEST_CASE("geometry identities over random edge lengths")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_edge(-3.0, 3.0);
  for (int i = 0; i < 500; ++i)
  {
    const double l = std::pow(10.0, log_edge(rng));
    const auto array = TetraArray::build(l, 343.0);
    const double r = array.circumradius();
    CHECK(std::abs(4.0 * r * r - 1.5 * l * l) <= 1e-12 * l * l);

    Vec3 centroid;
    double sum_sq = 0.0;
    for (const auto &v : array.vertices())
    {
      centroid += v;
      sum_sq += dot(v, v);
    }
    CHECK(std::abs(centroid.x) < 1e-12 * l);
    CHECK(std::abs(centroid.y) < 1e-12 * l);
    CHECK(std::abs(centroid.z) < 1e-12 * l);
    CHECK(std::abs(sum_sq - 4.0 * r * r) <= 1e-12 * r * r);

    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q)
        CHECK(std::abs(dist(array.vertices()[p], array.vertices()[q]) - l) <= 1e-12 * l);

    // Tight frame: sum v v^T = (4R^2/3) I.
    double m[3][3] = {};
    for (const auto &v : array.vertices())
    {
      const double c[3] = {v.x, v.y, v.z};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          m[a][b] += c[a] * c[b];
    }
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(std::abs(m[a][b] - (a == b ? 4.0 * r * r / 3.0 : 0.0)) <= 1e-12 * r * r);

    for (auto excluded : kVertices)
    {
      const auto face = face_of(array, excluded);
      CHECK(std::abs(3.0 * face.circumradius * face.circumradius - l * l) <= 1e-12 * l * l);
    }
  }
}

TEST_CASE("face_of: base face of a unit-radius tetrahedron")
{
  const auto array = TetraArray::build(4.0 / std::sqrt(6.0), 1.0);
  const auto face = face_of(array, Vertex::d);

  // Distance from (0, 0, -1/3) to a = (0, 2 sqrt2 / 3, -1/3).
  CHECK(face.circumradius == doctest::Approx(0.942809041582063366).epsilon(1e-14));
  for (const auto &p : face.points)
    CHECK(std::hypot(p.u, p.v) == doctest::Approx(0.942809041582063366).epsilon(1e-14));

  CHECK(face.vertex_ids == std::array<Vertex, 3>{Vertex::a, Vertex::b, Vertex::c});
  CHECK(face.vertex_azimuths_deg[0] == doctest::Approx(90.0).epsilon(1e-12));
  CHECK(face.vertex_azimuths_deg[1] == doctest::Approx(330.0).epsilon(1e-12));
  CHECK(face.vertex_azimuths_deg[2] == doctest::Approx(210.0).epsilon(1e-12));
}

TEST_CASE("face_of: every face is regular, centred, and 120 degrees apart")
{
  const auto array = TetraArray::build(0.5, 3e8);
  for (auto excluded : kVertices)
  {
    CAPTURE(to_string(excluded));
    const auto face = face_of(array, excluded);

    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 3; ++q)
        CHECK(std::abs(dist2(face.points[p], face.points[q]) - 0.5) < 1e-12);

    double cu = 0.0;
    double cv = 0.0;
    for (const auto &p : face.points)
    {
      cu += p.u;
      cv += p.v;
    }
    CHECK(std::abs(cu) < 1e-12);
    CHECK(std::abs(cv) < 1e-12);

    for (std::size_t p = 0; p < 3; ++p)
    {
      const double gap = wrap_360(face.vertex_azimuths_deg[(p + 1) % 3] - face.vertex_azimuths_deg[p]);
      CHECK((std::abs(gap - 120.0) < 1e-9 || std::abs(gap - 240.0) < 1e-9));
    }

    // Face centroid sits opposite the excluded vertex, on the line through the origin.
    const Vec3 v = array.vertex(excluded);
    CHECK(norm(face.centroid + v / 3.0) < 1e-12);
    CHECK(dot(face.centroid, v) < 0.0);

    // Right-handed orthonormal frame with the normal toward the excluded vertex.
    CHECK(std::abs(norm(face.axis_u) - 1.0) < 1e-14);
    CHECK(std::abs(dot(face.axis_u, face.axis_v)) < 1e-14);
    CHECK(norm(cross(face.axis_u, face.axis_v) - face.normal) < 1e-14);
    CHECK(dot(face.normal, v) > 0.0);
  }
}

TEST_CASE("gating window is the transit time across the circumscribed sphere")
{
  CHECK(gating_window(TetraArray::build(0.5, 3e8)) == doctest::Approx(2.04124145231931508e-9).epsilon(1e-14));
  CHECK(gating_window(TetraArray::build(0.5, 1500.0)) == doctest::Approx(4.08248290463863016e-4).epsilon(1e-14));
  const auto array = TetraArray::build(2.0, 343.0);
  CHECK(gating_window(array) == 2.0 * array.circumradius() / 343.0);
}

TEST_CASE("half dihedral angle")
{
  CHECK(half_dihedral_deg() == doctest::Approx(35.2643896827546543).epsilon(1e-14));
}

TEST_CASE("vertex names round-trip")
{
  for (auto v : kVertices)
    CHECK(parse_vertex(to_string(v)) == v);
  CHECK_FALSE(parse_vertex("e").has_value());
}
