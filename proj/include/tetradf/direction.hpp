#pragma once

// Direct-calculation direction finding on a regular tetrahedron.
//
// Sign convention: arrival lags are negated before any arccos so that the vertex
// nearest the source carries the largest value. Per-vertex angles are then
// positive on the vertex's side of its normal plane.

#include "tetradf/simplex.hpp"
#include "tetradf/tdoa.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace tetradf
{

struct VertexAngle
{
  Vertex vertex = Vertex::a;
  // Angle of the source above (+) or below (-) the plane through the centroid
  // normal to this vertex's centroid line, degrees in [-90, 90].
  double angle_to_plane_deg = 0.0;
  bool clamped = false;
};

std::array<VertexAngle, 4> vertex_angles(const NormalizedReadings &readings, const TetraArray &array);

// Vertex with the smallest |angle_to_plane|, ties broken by order a < b < c < d.
Vertex select_best_vertex(const std::array<VertexAngle, 4> &angles);

struct PreparedTriangle
{
  TriangleReadings readings;
  // sqrt(1.5 R^2) / |Q|; 1/cos of the source's angle to the face plane in far field.
  double scale_factor = 1.0;
};

// Min-subtract, mean-subtract (projection onto sum r = 0) and rescale to
// sum r^2 = 1.5 R_face^2. `raw` is in projection convention: larger values for
// vertices nearer the source. Throws DegenerateReadings if |Q| < 1e-12 R_face.
PreparedTriangle prepare_triangle(const std::array<double, 3> &raw, const TriangleFace &face);

// In-plane bearing in the face frame, [0, 360). Fuses the three cosine readings
// as atan2(sum r_k sin az_k, sum r_k cos az_k). Requires state `scaled`.
double triangle_bearing(const TriangleReadings &prepared, const TriangleFace &face);

// Diagnostic per-vertex readings arccos(r_k / R_face) in degrees: the angle
// between the source bearing and each vertex azimuth.
std::array<double, 3> triangle_vertex_angles(const TriangleReadings &prepared, const TriangleFace &face);

struct ScaleElevation
{
  double magnitude_deg = 0.0;
  // S fell below 1 (curved wavefront); 0 degrees is assumed.
  bool clamped = false;
};

// Unsigned angle between the source and the face plane: arccos(1/S).
// S within a few ulps of 1 is indistinguishable from an in-plane source and maps to 0.
ScaleElevation triangle_elevation(double scale_factor);

enum class SolveMode
{
  full_tetra,
  degraded_triangle,
};

std::string_view to_string(SolveMode mode);

enum class SignHint
{
  above,
  below,
};

std::optional<SignHint> parse_sign_hint(std::string_view name);

struct DirectionEstimate
{
  double bearing_deg = 0.0;   // [0, 360)
  double elevation_deg = 0.0; // [-90, 90]
  Vertex chosen_vertex = Vertex::a;
  SolveMode mode = SolveMode::full_tetra;
  bool clamped = false;
  // Degraded mode only: no sign hint and a non-zero elevation magnitude.
  bool ambiguous = false;
  // False when the direction is (numerically) vertical; bearing is then reported as 0.
  bool bearing_defined = true;
};

// Four-channel solve in the canonical frame. Throws InvalidSample or
// DegenerateReadings.
DirectionEstimate solve_full(const TdoaSample &sample, const TetraArray &array);

// Three-channel solve with one vertex shielded. `lags_m` are arrival lags in
// meters for face.vertex_ids; bearing and elevation are in the face frame
// (canonical when d is the shielded vertex).
DirectionEstimate solve_degraded(const std::array<double, 3> &lags_m, const TriangleFace &face,
                                 std::optional<SignHint> sign_hint = std::nullopt);

// Slant range from a known height difference and elevation angle, |h / sin(elevation)|.
// Throws Coplanar when |sin(elevation)| < 1e-12.
double range_from_altitude(double height_difference_m, double elevation_deg);

} // namespace tetradf
