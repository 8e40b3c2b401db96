#include "tetradf/tdoa.hpp"

#include "tetradf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tetradf
{

std::string_view to_string(SampleUnit unit) { return unit == SampleUnit::seconds ? "seconds" : "meters"; }

std::optional<SampleUnit> parse_unit(std::string_view name)
{
  if (name == "seconds" || name == "s")
    return SampleUnit::seconds;
  if (name == "meters" || name == "m")
    return SampleUnit::meters;
  return std::nullopt;
}

NormalizedReadings normalize(const TdoaSample &sample, const TetraArray &array)
{
  for (double v : sample.values)
  {
    if (!std::isfinite(v))
      throw InvalidSample("TDOA sample contains a non-finite value");
  }

  const double to_meters = sample.unit == SampleUnit::seconds ? array.propagation_speed() : 1.0;

  NormalizedReadings out;
  std::array<double, 4> m{};
  for (std::size_t k = 0; k < 4; ++k)
    m[k] = sample.values[k] * to_meters;

  // TDOA readings need at least one zero channel before the mean offset.
  out.min_subtracted = *std::min_element(m.begin(), m.end());
  for (auto &v : m)
    v -= out.min_subtracted;

  out.mean_offset = std::accumulate(m.begin(), m.end(), 0.0) / 4.0;
  for (std::size_t k = 0; k < 4; ++k)
  {
    out.r[k] = m[k] - out.mean_offset;
    if (std::abs(out.r[k]) > array.circumradius())
      out.exceeds_radius = true;
  }
  return out;
}

namespace
{

template <std::size_t N> double recover_distance(const std::array<double, N> &r, double sum_sq_radius, double radius)
{
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : r)
  {
    sum += v;
    sum_sq += v * v;
  }
  if (std::abs(sum) < 1e-12 * radius)
    throw AtInfinity("readings sum to zero; source distance is unrecoverable");
  return (sum_sq_radius - sum_sq) / (2.0 * sum);
}

} // namespace

double recover_distance_tetra(const std::array<double, 4> &relative, const TetraArray &array)
{
  const double r = array.circumradius();
  return recover_distance(relative, 4.0 * r * r, r);
}

double recover_distance_triangle(const std::array<double, 3> &relative, const TriangleFace &face)
{
  const double r = face.circumradius;
  return recover_distance(relative, 3.0 * r * r, r);
}

} // namespace tetradf
