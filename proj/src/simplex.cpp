#include "tetradf/simplex.hpp"

#include "tetradf/errors.hpp"

#include <cmath>
#include <string>

namespace tetradf
{

std::string_view to_string(Vertex v)
{
  switch (v)
  {
  case Vertex::a:
    return "a";
  case Vertex::b:
    return "b";
  case Vertex::c:
    return "c";
  case Vertex::d:
    return "d";
  }
  return "?";
}

std::optional<Vertex> parse_vertex(std::string_view name)
{
  for (auto v : kVertices)
  {
    if (to_string(v) == name)
      return v;
  }
  return std::nullopt;
}

double half_dihedral_deg() { return rad_to_deg(std::acos(1.0 / 3.0)) / 2.0; }

TetraArray TetraArray::build(double edge_length_m, double propagation_speed_mps)
{
  if (!std::isfinite(edge_length_m) || edge_length_m <= 0.0)
    throw InvalidParameter("edge length must be finite and positive, got " + std::to_string(edge_length_m));
  if (!std::isfinite(propagation_speed_mps) || propagation_speed_mps <= 0.0)
    throw InvalidParameter("propagation speed must be finite and positive, got " +
                           std::to_string(propagation_speed_mps));

  const double r = std::sqrt(6.0) / 4.0 * edge_length_m;
  const double t = std::sqrt(2.0 * r * r);
  const double s6 = std::sqrt(6.0);

  // Vertex placement as a function of the circumradius, d on the +z axis.
  const std::array<Vec3, 4> vertices{{
      {0.0, 2.0 * t / 3.0, -r / 3.0},
      {s6 * r / 3.0, -t / 3.0, -r / 3.0},
      {-s6 * r / 3.0, -t / 3.0, -r / 3.0},
      {0.0, 0.0, r},
  }};
  return TetraArray(edge_length_m, r, propagation_speed_mps, vertices);
}

Vec3 TriangleFace::direction(double bearing_deg, double elevation_deg) const
{
  const double b = deg_to_rad(bearing_deg);
  const double e = deg_to_rad(elevation_deg);
  return std::sin(e) * normal + std::cos(e) * (std::cos(b) * axis_u + std::sin(b) * axis_v);
}

TriangleFace face_of(const TetraArray &array, Vertex excluded)
{
  TriangleFace face;
  face.excluded = excluded;
  face.edge_length = array.edge_length();
  face.circumradius = array.edge_length() / std::sqrt(3.0);

  std::size_t n = 0;
  for (auto v : kVertices)
  {
    if (v != excluded)
      face.vertex_ids[n++] = v;
  }

  Vec3 centroid;
  for (auto v : face.vertex_ids)
    centroid += array.vertex(v);
  face.centroid = centroid / 3.0;

  face.normal = normalized(array.vertex(excluded));
  if (excluded == Vertex::d)
  {
    face.axis_u = {1.0, 0.0, 0.0};
    face.axis_v = {0.0, 1.0, 0.0};
  }
  else
  {
    // Tilted faces: u is "up" (+z) projected into the face plane.
    const Vec3 up{0.0, 0.0, 1.0};
    face.axis_u = normalized(up - dot(up, face.normal) * face.normal);
    face.axis_v = cross(face.normal, face.axis_u);
  }

  for (std::size_t k = 0; k < 3; ++k)
  {
    const Vec3 offset = array.vertex(face.vertex_ids[k]) - face.centroid;
    face.points[k] = {dot(offset, face.axis_u), dot(offset, face.axis_v)};
    face.vertex_azimuths_deg[k] = wrap_360(rad_to_deg(std::atan2(face.points[k].v, face.points[k].u)));
  }
  return face;
}

double gating_window(const TetraArray &array) { return 2.0 * array.circumradius() / array.propagation_speed(); }

} // namespace tetradf
