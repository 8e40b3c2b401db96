#pragma once

// Raw four-channel arrival measurements and their conversion into the mean-zero,
// distance-unit readings the direction solver consumes.

#include "tetradf/simplex.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace tetradf
{

enum class SampleUnit
{
  seconds,
  meters,
};

std::string_view to_string(SampleUnit unit);
std::optional<SampleUnit> parse_unit(std::string_view name);

// Arrival lags at vertices (a, b, c, d). Only differences between channels matter.
struct TdoaSample
{
  std::array<double, 4> values{};
  SampleUnit unit = SampleUnit::meters;
};

// Path-length readings with the mean removed (sum is zero), in meters.
//
// Positive values mean the wavefront arrived at that vertex later than average.
struct NormalizedReadings
{
  std::array<double, 4> r{};
  double min_subtracted = 0.0; // meters
  double mean_offset = 0.0;    // meters, applied after the minimum
  // Some |r_k| exceeds the circumradius, only possible with a curved wavefront.
  bool exceeds_radius = false;
};

// Throws InvalidSample on non-finite values.
NormalizedReadings normalize(const TdoaSample &sample, const TetraArray &array);

enum class TriangleState
{
  raw,
  zero_sum,
  scaled,
};

struct TriangleReadings
{
  std::array<double, 3> r{};
  TriangleState state = TriangleState::raw;
};

// Distance from the array centroid to the source, given the true vertex distances
// each reduced by that same unknown distance: x = (4R^2 - sum r^2) / (2 sum r).
// Throws AtInfinity when |sum r| < 1e-12 R.
double recover_distance_tetra(const std::array<double, 4> &relative, const TetraArray &array);

// Triangle analogue: x = (3R^2 - sum r^2) / (2 sum r) with R the face circumradius.
double recover_distance_triangle(const std::array<double, 3> &relative, const TriangleFace &face);

} // namespace tetradf
