#pragma once

// Exact forward model: arrival lags at the array for a point source (spherical
// wavefront) or a source at infinity (plane wave). Noise-free and deterministic.

#include "tetradf/simplex.hpp"
#include "tetradf/tdoa.hpp"

#include <optional>

namespace tetradf
{

struct SourceSpec
{
  double bearing_deg = 0.0;
  double elevation_deg = 0.0;
  std::optional<double> range_m; // empty: at infinity

  static SourceSpec at_range(double bearing_deg, double elevation_deg, double range_m)
  {
    return {bearing_deg, elevation_deg, range_m};
  }
  static SourceSpec at_infinity(double bearing_deg, double elevation_deg) { return {bearing_deg, elevation_deg, {}}; }
};

// Unit vector toward (bearing, elevation) in the canonical frame.
Vec3 source_direction(double bearing_deg, double elevation_deg);

// Lags (|P - v_k| - min_j |P - v_j|) / c in seconds. Throws InvalidParameter
// unless the range is finite and positive.
TdoaSample simulate_spherical(const SourceSpec &source, const TetraArray &array);

// Lags (-u.v_k - min_j(-u.v_j)) / c in seconds. The range field is ignored.
TdoaSample simulate_plane(const SourceSpec &source, const TetraArray &array);

// Dispatches on whether the source has a range.
TdoaSample simulate(const SourceSpec &source, const TetraArray &array);

} // namespace tetradf
