#pragma once

// Regular tetrahedron receiver array and its triangular faces.
//
// Canonical frame: vertex d on +z, base face (a, b, c) in the plane z = -R/3,
// centroid at the origin. Bearing is measured in the xy-plane counterclockwise
// from +x in [0, 360); elevation from the xy-plane in [-90, 90].

#include "tetradf/vec3.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace tetradf
{

enum class Vertex : std::uint8_t
{
  a = 0,
  b = 1,
  c = 2,
  d = 3,
};

inline constexpr std::array<Vertex, 4> kVertices{Vertex::a, Vertex::b, Vertex::c, Vertex::d};

constexpr std::size_t index_of(Vertex v) { return static_cast<std::size_t>(v); }

std::string_view to_string(Vertex v);
std::optional<Vertex> parse_vertex(std::string_view name);

// Half the dihedral angle, arccos(1/3)/2 in degrees (~35.26). Every direction lies
// within this angle of at least one vertex's normal plane.
double half_dihedral_deg();

class TetraArray
{
public:
  // Throws InvalidParameter unless both arguments are finite and positive.
  static TetraArray build(double edge_length_m, double propagation_speed_mps);

  double edge_length() const { return edge_length_; }
  double circumradius() const { return circumradius_; }
  double propagation_speed() const { return propagation_speed_; }
  const Vec3 &vertex(Vertex v) const { return vertices_[index_of(v)]; }
  const std::array<Vec3, 4> &vertices() const { return vertices_; }

private:
  TetraArray(double edge, double radius, double speed, const std::array<Vec3, 4> &vertices)
      : edge_length_(edge), circumradius_(radius), propagation_speed_(speed), vertices_(vertices)
  {
  }

  double edge_length_;
  double circumradius_;
  double propagation_speed_;
  std::array<Vec3, 4> vertices_;
};

// One face of the tetrahedron, described in an orthonormal basis of its own plane.
//
// `normal` points from the face toward the excluded vertex, so "above" the face
// is the excluded vertex's side. `axis_u`, `axis_v` and `normal` form a
// right-handed frame. In-plane azimuths are measured from `axis_u` toward `axis_v`.
// For the base face (d excluded) the local frame coincides with the canonical one.
struct TriangleFace
{
  Vertex excluded = Vertex::d;
  std::array<Vertex, 3> vertex_ids{};
  double edge_length = 0.0;
  double circumradius = 0.0;
  std::array<Point2, 3> points{};
  std::array<double, 3> vertex_azimuths_deg{};

  Vec3 centroid;
  Vec3 normal;
  Vec3 axis_u;
  Vec3 axis_v;

  // Unit vector in the canonical frame for a direction given in this face's frame.
  Vec3 direction(double bearing_deg, double elevation_deg) const;
};

TriangleFace face_of(const TetraArray &array, Vertex excluded);

// Receiver enable interval after the first arrival: the wavefront transit time
// across the circumscribed sphere, 2R / c, in seconds.
double gating_window(const TetraArray &array);

} // namespace tetradf
