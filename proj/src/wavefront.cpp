#include "tetradf/wavefront.hpp"

#include "tetradf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tetradf
{

namespace
{

TdoaSample to_lag_sample(std::array<double, 4> path, double speed)
{
  const double earliest = *std::min_element(path.begin(), path.end());
  TdoaSample sample;
  sample.unit = SampleUnit::seconds;
  for (std::size_t k = 0; k < 4; ++k)
    sample.values[k] = (path[k] - earliest) / speed;
  return sample;
}

} // namespace

Vec3 source_direction(double bearing_deg, double elevation_deg)
{
  const double b = deg_to_rad(bearing_deg);
  const double e = deg_to_rad(elevation_deg);
  return {std::cos(e) * std::cos(b), std::cos(e) * std::sin(b), std::sin(e)};
}

TdoaSample simulate_spherical(const SourceSpec &source, const TetraArray &array)
{
  if (!source.range_m || !std::isfinite(*source.range_m) || *source.range_m <= 0.0)
    throw InvalidParameter("spherical source needs a finite positive range");

  const double range = *source.range_m;
  const Vec3 p = range * source_direction(source.bearing_deg, source.elevation_deg);

  // |P - v| - |P| = (|v|^2 - 2 P.v) / (|P - v| + |P|), free of cancellation at long range.
  std::array<double, 4> path{};
  for (auto v : kVertices)
  {
    const Vec3 &vertex = array.vertex(v);
    const double numerator = dot(vertex, vertex) - 2.0 * dot(p, vertex);
    path[index_of(v)] = numerator / (norm(p - vertex) + range);
  }
  return to_lag_sample(path, array.propagation_speed());
}

TdoaSample simulate_plane(const SourceSpec &source, const TetraArray &array)
{
  const Vec3 u = source_direction(source.bearing_deg, source.elevation_deg);
  std::array<double, 4> path{};
  for (auto v : kVertices)
    path[index_of(v)] = -dot(u, array.vertex(v));
  return to_lag_sample(path, array.propagation_speed());
}

TdoaSample simulate(const SourceSpec &source, const TetraArray &array)
{
  return source.range_m ? simulate_spherical(source, array) : simulate_plane(source, array);
}

} // namespace tetradf
