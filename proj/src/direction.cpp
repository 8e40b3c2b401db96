#include "tetradf/direction.hpp"

#include "tetradf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tetradf
{

namespace
{

// S - 1 below this is rounding noise in the readings, not elevation.
constexpr double kScaleResolution = 8.0 * std::numeric_limits<double>::epsilon();

// Near-field tolerance below S = 1 before the clamp is reported.
constexpr double kScaleFloorTolerance = 1e-9;

double clamp_unit(double x, bool &clamped)
{
  if (x > 1.0 || x < -1.0)
  {
    clamped = true;
    return std::clamp(x, -1.0, 1.0);
  }
  return x;
}

} // namespace

std::array<VertexAngle, 4> vertex_angles(const NormalizedReadings &readings, const TetraArray &array)
{
  const double radius = array.circumradius();
  std::array<VertexAngle, 4> out{};
  for (auto v : kVertices)
  {
    auto &reading = out[index_of(v)];
    reading.vertex = v;
    const double s = -readings.r[index_of(v)];
    const double ratio = clamp_unit(s / radius, reading.clamped);
    reading.angle_to_plane_deg = 90.0 - rad_to_deg(std::acos(ratio));
  }
  return out;
}

Vertex select_best_vertex(const std::array<VertexAngle, 4> &angles)
{
  const auto best = std::min_element(angles.begin(), angles.end(), [](const VertexAngle &x, const VertexAngle &y) {
    return std::abs(x.angle_to_plane_deg) < std::abs(y.angle_to_plane_deg);
  });
  return best->vertex;
}

PreparedTriangle prepare_triangle(const std::array<double, 3> &raw, const TriangleFace &face)
{
  std::array<double, 3> r = raw;

  const double lowest = *std::min_element(r.begin(), r.end());
  for (auto &v : r)
    v -= lowest;

  // Q = P - (P.N)N with N = (1,1,1)/sqrt(3) is the mean removal.
  const double mean = (r[0] + r[1] + r[2]) / 3.0;
  for (auto &v : r)
    v -= mean;

  const double q_norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (!(q_norm >= 1e-12 * face.circumradius))
    throw DegenerateReadings("triangle readings are all equal; source lies on the face normal axis");

  const double target = std::sqrt(1.5) * face.circumradius;
  PreparedTriangle out;
  out.scale_factor = target / q_norm;
  for (std::size_t k = 0; k < 3; ++k)
    out.readings.r[k] = r[k] * out.scale_factor;
  out.readings.state = TriangleState::scaled;
  return out;
}

double triangle_bearing(const TriangleReadings &prepared, const TriangleFace &face)
{
  if (prepared.state != TriangleState::scaled)
    throw InvalidParameter("triangle_bearing requires scaled readings");

  double sin_sum = 0.0;
  double cos_sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k)
  {
    const double az = deg_to_rad(face.vertex_azimuths_deg[k]);
    sin_sum += prepared.r[k] * std::sin(az);
    cos_sum += prepared.r[k] * std::cos(az);
  }
  return wrap_360(rad_to_deg(std::atan2(sin_sum, cos_sum)));
}

std::array<double, 3> triangle_vertex_angles(const TriangleReadings &prepared, const TriangleFace &face)
{
  std::array<double, 3> out{};
  bool clamped = false;
  for (std::size_t k = 0; k < 3; ++k)
    out[k] = rad_to_deg(std::acos(clamp_unit(prepared.r[k] / face.circumradius, clamped)));
  return out;
}

ScaleElevation triangle_elevation(double scale_factor)
{
  ScaleElevation out;
  if (scale_factor < 1.0 - kScaleFloorTolerance)
  {
    out.clamped = true;
    return out;
  }
  if (scale_factor - 1.0 <= kScaleResolution)
    return out;

  // arccos(1/S) written as atan(sqrt(S^2 - 1)); S - 1 is exact here.
  out.magnitude_deg = rad_to_deg(std::atan(std::sqrt((scale_factor - 1.0) * (scale_factor + 1.0))));
  return out;
}

std::string_view to_string(SolveMode mode) { return mode == SolveMode::full_tetra ? "full-tetra" : "degraded-triangle"; }

std::optional<SignHint> parse_sign_hint(std::string_view name)
{
  if (name == "above")
    return SignHint::above;
  if (name == "below")
    return SignHint::below;
  return std::nullopt;
}

DirectionEstimate solve_full(const TdoaSample &sample, const TetraArray &array)
{
  const NormalizedReadings readings = normalize(sample, array);
  const auto angles = vertex_angles(readings, array);
  const Vertex chosen = select_best_vertex(angles);
  const TriangleFace face = face_of(array, chosen);

  std::array<double, 3> projections{};
  for (std::size_t k = 0; k < 3; ++k)
    projections[k] = -readings.r[index_of(face.vertex_ids[k])];

  const PreparedTriangle prepared = prepare_triangle(projections, face);
  const double face_bearing = triangle_bearing(prepared.readings, face);
  const double elevation_to_face = angles[index_of(chosen)].angle_to_plane_deg;

  // Elevation comes from the chosen vertex, bearing from the opposite face;
  // together they fix the direction in the face frame.
  const Vec3 u = face.direction(face_bearing, elevation_to_face);
  const double horizontal = std::hypot(u.x, u.y);

  DirectionEstimate est;
  est.mode = SolveMode::full_tetra;
  est.chosen_vertex = chosen;
  est.clamped = std::any_of(angles.begin(), angles.end(), [](const VertexAngle &a) { return a.clamped; });
  est.elevation_deg = rad_to_deg(std::atan2(u.z, horizontal));
  est.bearing_defined = horizontal > 1e-12;
  est.bearing_deg = est.bearing_defined ? wrap_360(rad_to_deg(std::atan2(u.y, u.x))) : 0.0;
  return est;
}

DirectionEstimate solve_degraded(const std::array<double, 3> &lags_m, const TriangleFace &face,
                                 std::optional<SignHint> sign_hint)
{
  for (double v : lags_m)
  {
    if (!std::isfinite(v))
      throw InvalidSample("degraded sample contains a non-finite value");
  }

  const std::array<double, 3> projections{-lags_m[0], -lags_m[1], -lags_m[2]};
  const PreparedTriangle prepared = prepare_triangle(projections, face);
  const ScaleElevation elevation = triangle_elevation(prepared.scale_factor);

  DirectionEstimate est;
  est.mode = SolveMode::degraded_triangle;
  est.chosen_vertex = face.excluded;
  est.bearing_deg = triangle_bearing(prepared.readings, face);
  est.clamped = elevation.clamped;
  est.elevation_deg = sign_hint == SignHint::below ? -elevation.magnitude_deg : elevation.magnitude_deg;
  est.ambiguous = !sign_hint.has_value() && elevation.magnitude_deg != 0.0;
  return est;
}

double range_from_altitude(double height_difference_m, double elevation_deg)
{
  const double s = std::sin(deg_to_rad(elevation_deg));
  if (std::abs(s) < 1e-12)
    throw Coplanar("elevation is zero; range cannot be derived from a height difference");
  return std::abs(height_difference_m / s);
}

} // namespace tetradf
