#include "tetradf/sweep_io.hpp"

#include "tetradf/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace tetradf
{

void write_csv(std::ostream &out, std::span<const ErrorRecord> records)
{
  out << kCsvHeader << '\n';
  for (const auto &r : records)
  {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.range_m, r.true_bearing_deg, r.true_elevation_deg,
                       r.est_bearing_deg, r.est_elevation_deg, r.bearing_error_deg, r.elevation_error_deg,
                       r.positional_error_cm);
  }
}

namespace
{

double parse_field(std::string_view field, std::size_t line_no)
{
  while (!field.empty() && field.front() == ' ')
    field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\r'))
    field.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw InvalidParameter(fmt::format("CSV line {}: bad number '{}'", line_no, field));
  return value;
}

} // namespace

std::vector<ErrorRecord> read_csv(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line))
    throw InvalidParameter("CSV is empty");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  if (line != kCsvHeader)
    throw InvalidParameter("CSV header does not match the sweep record layout");

  std::vector<ErrorRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty() || line == "\r")
      continue;

    std::array<double, 8> v{};
    std::size_t field = 0;
    std::string_view rest(line);
    while (true)
    {
      const auto comma = rest.find(',');
      if (field >= v.size())
        throw InvalidParameter(fmt::format("CSV line {}: too many fields", line_no));
      v[field++] = parse_field(rest.substr(0, comma), line_no);
      if (comma == std::string_view::npos)
        break;
      rest.remove_prefix(comma + 1);
    }
    if (field != v.size())
      throw InvalidParameter(fmt::format("CSV line {}: expected 8 fields, got {}", line_no, field));

    records.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  return records;
}

namespace
{

std::string format_range(double r)
{
  return r == std::floor(r) && std::abs(r) < 1e15 ? fmt::format("{:.0f}", r) : fmt::format("{}", r);
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

nlohmann::json fit_json(const std::optional<SinusoidFit> &fit)
{
  if (!fit)
    return nullptr;
  return {
      {"harmonic", fit->harmonic},       {"amplitude_deg", fit->amplitude_deg}, {"phase_deg", fit->phase_deg},
      {"offset_deg", fit->offset_deg},   {"sin_coeff", fit->sin_coeff},         {"cos_coeff", fit->cos_coeff},
      {"residual_deg", fit->residual_deg},
  };
}

nlohmann::json grid_json(const Grid &g) { return {{"start", g.start}, {"stop", g.stop}, {"step", g.step}}; }

} // namespace

nlohmann::json summary_json(const SweepReport &report)
{
  const auto &c = report.config;
  nlohmann::json out;
  out["metadata"] = {
      {"generator", "tetradf"},
      {"record_count", report.records.size()},
      {"config",
       {
           {"edge_length_m", c.edge_length_m},
           {"propagation_speed_mps", c.propagation_speed_mps},
           {"ranges_m", c.ranges_m},
           {"bearing_grid_deg", grid_json(c.bearing)},
           {"elevation_grid_deg", grid_json(c.elevation)},
           {"chord_radius", std::string(to_string(c.chord_radius))},
       }},
  };

  auto &ranges = out["ranges"] = nlohmann::json::array();
  for (const auto &s : report.summaries)
  {
    nlohmann::json row = {
        {"range_m", s.range_m},
        {"count", s.count},
        {"min_cm", round2(s.min_cm)},
        {"avg_cm", round2(s.avg_cm)},
        {"max_cm", round2(s.max_cm)},
        {"bearing_fit", fit_json(s.bearing_fit)},
        {"low_elevation_deg", s.low_elevation_deg},
        {"high_elevation_deg", s.high_elevation_deg},
        {"elevation_fit_low", fit_json(s.elevation_fit_low)},
        {"elevation_fit_high", fit_json(s.elevation_fit_high)},
    };
    if (s.elevation_fit_low && s.elevation_fit_high)
      row["elevation_harmonic_flip"] = harmonics_opposed(*s.elevation_fit_low, *s.elevation_fit_high);
    ranges.push_back(std::move(row));
  }
  return out;
}

std::string format_summary_table(std::span<const RangeSummary> summaries)
{
  std::string out = fmt::format("{:>14}  {:>10}  {:>10}  {:>10}  {:>16}\n", "Distance (m)", "Min (cm)", "Avg (cm)",
                                "Max (cm)", "Bearing A (deg)");
  for (const auto &s : summaries)
  {
    const std::string amplitude = s.bearing_fit ? fmt::format("{:.3g}", s.bearing_fit->amplitude_deg) : "-";
    out += fmt::format("{:>14}  {:>10.2f}  {:>10.2f}  {:>10.2f}  {:>16}\n", format_range(s.range_m), s.min_cm,
                       s.avg_cm, s.max_cm, amplitude);
  }
  return out;
}

} // namespace tetradf
