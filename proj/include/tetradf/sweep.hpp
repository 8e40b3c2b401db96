#pragma once

// Near-field error sweeps: simulate a spherical wavefront over a bearing x
// elevation grid at fixed ranges, solve, and measure angular and positional error.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tetradf
{

// Inclusive arithmetic grid. `stop` is included when it lies on the step lattice.
struct Grid
{
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

// Radius of the circle on which a bearing error is measured.
enum class ChordRadius
{
  horizontal, // range * cos(true elevation)
  slant,      // range
};

std::string_view to_string(ChordRadius radius);
std::optional<ChordRadius> parse_chord_radius(std::string_view name);

struct SweepConfig
{
  double edge_length_m = 0.5;
  double propagation_speed_mps = 299792458.0;
  std::vector<double> ranges_m{1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6};
  Grid bearing{0.0, 360.0, 5.0};
  Grid elevation{-35.0, 35.0, 5.0};
  ChordRadius chord_radius = ChordRadius::horizontal;
  unsigned threads = 0; // 0: hardware concurrency

  // Throws InvalidParameter.
  void validate() const;
};

struct ErrorRecord
{
  double range_m = 0.0;
  double true_bearing_deg = 0.0;
  double true_elevation_deg = 0.0;
  double est_bearing_deg = 0.0;
  double est_elevation_deg = 0.0;
  double bearing_error_deg = 0.0;   // wrapped to (-180, 180]
  double elevation_error_deg = 0.0; // estimate - truth
  double positional_error_cm = 0.0;
};

// Least-squares fit of offset + A sin(k theta + phase).
struct SinusoidFit
{
  int harmonic = 0;
  double amplitude_deg = 0.0;
  double phase_deg = 0.0;
  double offset_deg = 0.0;
  double sin_coeff = 0.0; // A cos(phase)
  double cos_coeff = 0.0; // A sin(phase)
  double residual_deg = 0.0; // RMS
};

struct RangeSummary
{
  double range_m = 0.0;
  std::size_t count = 0;
  double min_cm = 0.0;
  double avg_cm = 0.0;
  double max_cm = 0.0;
  // Fits over bearing; absent when the grid has too few bearings.
  std::optional<SinusoidFit> bearing_fit;
  double low_elevation_deg = 0.0;
  double high_elevation_deg = 0.0;
  std::optional<SinusoidFit> elevation_fit_low;
  std::optional<SinusoidFit> elevation_fit_high;
};

struct SweepReport
{
  SweepConfig config;
  std::vector<ErrorRecord> records; // sorted by (range, bearing, elevation)
  std::vector<RangeSummary> summaries;
};

// Chord 2 d sin(|alpha| / 2) subtended by an angular error at distance d, meters.
double chord_error(double angular_error_deg, double distance_m);

// sqrt(CD^2 + C'D'^2) in meters: bearing chord on the ChordRadius circle,
// elevation chord on the range sphere.
double positional_error(double bearing_error_deg, double elevation_error_deg, double distance_m,
                        double true_elevation_deg = 0.0, ChordRadius radius = ChordRadius::horizontal);

// Throws InvalidParameter for harmonic < 1, mismatched spans, fewer than
// 2k + 1 points or a singular design.
SinusoidFit fit_sinusoid(std::span<const double> theta_deg, std::span<const double> values, int harmonic);

// The k-th harmonic components of two fits point in opposite directions (phase free).
bool harmonics_opposed(const SinusoidFit &first, const SinusoidFit &second);

// Per-range aggregates and fits. Records may be in any order.
std::vector<RangeSummary> summarize(std::span<const ErrorRecord> records, int harmonic = 3);

SweepReport run_sweep(const SweepConfig &config);

} // namespace tetradf
