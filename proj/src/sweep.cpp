#include "tetradf/sweep.hpp"

#include "tetradf/direction.hpp"
#include "tetradf/errors.hpp"
#include "tetradf/wavefront.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

namespace tetradf
{

std::vector<double> Grid::values() const
{
  std::vector<double> out;
  if (!(step > 0.0) || stop < start)
    return out;
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.push_back(start + static_cast<double>(i) * step);
  return out;
}

std::string_view to_string(ChordRadius radius) { return radius == ChordRadius::horizontal ? "horizontal" : "slant"; }

std::optional<ChordRadius> parse_chord_radius(std::string_view name)
{
  if (name == "horizontal")
    return ChordRadius::horizontal;
  if (name == "slant")
    return ChordRadius::slant;
  return std::nullopt;
}

namespace
{

void check_grid(const Grid &grid, const char *name)
{
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) || !std::isfinite(grid.step))
    throw InvalidParameter(std::string(name) + " grid must be finite");
  if (grid.step <= 0.0)
    throw InvalidParameter(std::string(name) + " grid step must be positive");
  if (grid.stop < grid.start)
    throw InvalidParameter(std::string(name) + " grid stop is below its start");
}

} // namespace

void SweepConfig::validate() const
{
  if (!std::isfinite(edge_length_m) || edge_length_m <= 0.0)
    throw InvalidParameter("edge length must be positive");
  if (!std::isfinite(propagation_speed_mps) || propagation_speed_mps <= 0.0)
    throw InvalidParameter("propagation speed must be positive");
  if (ranges_m.empty())
    throw InvalidParameter("at least one range is required");
  for (double r : ranges_m)
  {
    if (!std::isfinite(r) || r <= 0.0)
      throw InvalidParameter("ranges must be finite and positive");
  }
  check_grid(bearing, "bearing");
  check_grid(elevation, "elevation");
  if (elevation.start < -90.0 || elevation.stop > 90.0)
    throw InvalidParameter("elevation grid must lie within [-90, 90]");
}

double chord_error(double angular_error_deg, double distance_m)
{
  return 2.0 * distance_m * std::sin(deg_to_rad(std::abs(angular_error_deg)) / 2.0);
}

double positional_error(double bearing_error_deg, double elevation_error_deg, double distance_m,
                        double true_elevation_deg, ChordRadius radius)
{
  const double bearing_radius =
      radius == ChordRadius::horizontal ? distance_m * std::cos(deg_to_rad(true_elevation_deg)) : distance_m;
  return std::hypot(chord_error(bearing_error_deg, bearing_radius), chord_error(elevation_error_deg, distance_m));
}

namespace
{

// Solves the 3x3 system in place by Gaussian elimination with partial pivoting.
bool solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> rhs, std::array<double, 3> &x)
{
  double scale = 0.0;
  for (const auto &row : m)
    for (double v : row)
      scale = std::max(scale, std::abs(v));

  for (std::size_t col = 0; col < 3; ++col)
  {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < 3; ++row)
    {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col]))
        pivot = row;
    }
    if (std::abs(m[pivot][col]) <= 1e-12 * scale)
      return false;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t row = col + 1; row < 3; ++row)
    {
      const double f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < 3; ++k)
        m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 3; i-- > 0;)
  {
    double acc = rhs[i];
    for (std::size_t k = i + 1; k < 3; ++k)
      acc -= m[i][k] * x[k];
    x[i] = acc / m[i][i];
  }
  return true;
}

} // namespace

SinusoidFit fit_sinusoid(std::span<const double> theta_deg, std::span<const double> values, int harmonic)
{
  if (harmonic < 1)
    throw InvalidParameter("harmonic must be at least 1");
  if (theta_deg.size() != values.size())
    throw InvalidParameter("theta and value counts differ");
  if (theta_deg.size() < static_cast<std::size_t>(2 * harmonic + 1))
    throw InvalidParameter("need at least 2k + 1 points to fit harmonic " + std::to_string(harmonic));

  // Normal equations over the basis (1, sin k theta, cos k theta).
  std::array<std::array<double, 3>, 3> ata{};
  std::array<double, 3> atb{};
  for (std::size_t i = 0; i < theta_deg.size(); ++i)
  {
    const double t = harmonic * deg_to_rad(theta_deg[i]);
    const std::array<double, 3> basis{1.0, std::sin(t), std::cos(t)};
    for (std::size_t r = 0; r < 3; ++r)
    {
      for (std::size_t c = 0; c < 3; ++c)
        ata[r][c] += basis[r] * basis[c];
      atb[r] += basis[r] * values[i];
    }
  }

  std::array<double, 3> coeff{};
  if (!solve3(ata, atb, coeff))
    throw InvalidParameter("sample angles do not determine the harmonic");

  SinusoidFit fit;
  fit.harmonic = harmonic;
  fit.offset_deg = coeff[0];
  fit.sin_coeff = coeff[1];
  fit.cos_coeff = coeff[2];
  fit.amplitude_deg = std::hypot(coeff[1], coeff[2]);
  fit.phase_deg = rad_to_deg(std::atan2(coeff[2], coeff[1]));

  double sq = 0.0;
  for (std::size_t i = 0; i < theta_deg.size(); ++i)
  {
    const double t = harmonic * deg_to_rad(theta_deg[i]);
    const double e = values[i] - (coeff[0] + coeff[1] * std::sin(t) + coeff[2] * std::cos(t));
    sq += e * e;
  }
  fit.residual_deg = std::sqrt(sq / static_cast<double>(theta_deg.size()));
  return fit;
}

bool harmonics_opposed(const SinusoidFit &first, const SinusoidFit &second)
{
  return first.sin_coeff * second.sin_coeff + first.cos_coeff * second.cos_coeff < 0.0;
}

namespace
{

std::optional<SinusoidFit> try_fit(const std::vector<double> &theta, const std::vector<double> &values, int harmonic)
{
  try
  {
    return fit_sinusoid(theta, values, harmonic);
  }
  catch (const InvalidParameter &)
  {
    return std::nullopt;
  }
}

} // namespace

std::vector<RangeSummary> summarize(std::span<const ErrorRecord> records, int harmonic)
{
  std::map<double, std::vector<const ErrorRecord *>> by_range;
  for (const auto &rec : records)
    by_range[rec.range_m].push_back(&rec);

  std::vector<RangeSummary> out;
  out.reserve(by_range.size());
  for (const auto &[range, group] : by_range)
  {
    RangeSummary s;
    s.range_m = range;
    s.count = group.size();
    s.min_cm = std::numeric_limits<double>::infinity();
    s.max_cm = -std::numeric_limits<double>::infinity();
    s.low_elevation_deg = std::numeric_limits<double>::infinity();
    s.high_elevation_deg = -std::numeric_limits<double>::infinity();

    double total = 0.0;
    std::vector<double> theta;
    std::vector<double> bearing_err;
    for (const auto *rec : group)
    {
      s.min_cm = std::min(s.min_cm, rec->positional_error_cm);
      s.max_cm = std::max(s.max_cm, rec->positional_error_cm);
      total += rec->positional_error_cm;
      s.low_elevation_deg = std::min(s.low_elevation_deg, rec->true_elevation_deg);
      s.high_elevation_deg = std::max(s.high_elevation_deg, rec->true_elevation_deg);
      theta.push_back(rec->true_bearing_deg);
      bearing_err.push_back(rec->bearing_error_deg);
    }
    s.avg_cm = total / static_cast<double>(group.size());
    s.bearing_fit = try_fit(theta, bearing_err, harmonic);

    auto elevation_fit = [&](double elevation) {
      std::vector<double> t;
      std::vector<double> v;
      for (const auto *rec : group)
      {
        if (rec->true_elevation_deg == elevation)
        {
          t.push_back(rec->true_bearing_deg);
          v.push_back(rec->elevation_error_deg);
        }
      }
      return try_fit(t, v, harmonic);
    };
    s.elevation_fit_low = elevation_fit(s.low_elevation_deg);
    s.elevation_fit_high = elevation_fit(s.high_elevation_deg);
    out.push_back(std::move(s));
  }
  return out;
}

SweepReport run_sweep(const SweepConfig &config)
{
  config.validate();
  const TetraArray array = TetraArray::build(config.edge_length_m, config.propagation_speed_mps);

  std::vector<double> ranges = config.ranges_m;
  std::sort(ranges.begin(), ranges.end());
  ranges.erase(std::unique(ranges.begin(), ranges.end()), ranges.end());
  const std::vector<double> bearings = config.bearing.values();
  const std::vector<double> elevations = config.elevation.values();

  SweepReport report;
  report.config = config;
  report.records.resize(ranges.size() * bearings.size() * elevations.size());

  auto evaluate = [&](std::size_t index) {
    const std::size_t e = index % elevations.size();
    const std::size_t b = (index / elevations.size()) % bearings.size();
    const std::size_t r = index / (elevations.size() * bearings.size());

    ErrorRecord &rec = report.records[index];
    rec.range_m = ranges[r];
    rec.true_bearing_deg = bearings[b];
    rec.true_elevation_deg = elevations[e];

    const TdoaSample sample =
        simulate_spherical(SourceSpec::at_range(rec.true_bearing_deg, rec.true_elevation_deg, rec.range_m), array);
    const DirectionEstimate est = solve_full(sample, array);

    rec.est_bearing_deg = est.bearing_deg;
    rec.est_elevation_deg = est.elevation_deg;
    rec.bearing_error_deg = wrap_180(est.bearing_deg - rec.true_bearing_deg);
    rec.elevation_error_deg = est.elevation_deg - rec.true_elevation_deg;
    rec.positional_error_cm = 100.0 * positional_error(rec.bearing_error_deg, rec.elevation_error_deg, rec.range_m,
                                                       rec.true_elevation_deg, config.chord_radius);
  };

  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, report.records.size()));

  if (workers <= 1)
  {
    for (std::size_t i = 0; i < report.records.size(); ++i)
      evaluate(i);
  }
  else
  {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      // Each record depends only on its grid point; results land at fixed indices.
      for (unsigned w = 0; w < workers; ++w)
      {
        pool.emplace_back([&] {
          try
          {
            for (std::size_t i = next++; i < report.records.size(); i = next++)
              evaluate(i);
          }
          catch (...)
          {
            std::lock_guard lock(error_mutex);
            if (!first_error)
              first_error = std::current_exception();
            next = report.records.size();
          }
        });
      }
    }
    if (first_error)
      std::rethrow_exception(first_error);
  }

  report.summaries = summarize(report.records);
  return report;
}

} // namespace tetradf
