#include "tetradf/config.hpp"

#include "tetradf/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace tetradf
{

namespace
{

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key)
{
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidParameter("config key '" + std::string(key) + "': bad number '" + std::string(text) + "'");
  return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view key)
{
  std::vector<double> out;
  if (trim(text).empty())
    return out;
  while (true)
  {
    const auto comma = text.find(',');
    out.push_back(parse_number(text.substr(0, comma), key));
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Grid parse_grid(std::string_view text, std::string_view key)
{
  const auto v = parse_list(text, key);
  if (v.size() != 3)
    throw InvalidParameter("config key '" + std::string(key) + "' needs start, stop, step");
  return {v[0], v[1], v[2]};
}

} // namespace

CliConfig parse_config(std::string_view text)
{
  CliConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty())
  {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InvalidParameter("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "edge_length_m")
      cfg.sweep.edge_length_m = parse_number(value, key);
    else if (key == "propagation_speed_mps")
      cfg.sweep.propagation_speed_mps = parse_number(value, key);
    else if (key == "ranges_m")
      cfg.sweep.ranges_m = parse_list(value, key);
    else if (key == "bearing_grid_deg")
      cfg.sweep.bearing = parse_grid(value, key);
    else if (key == "elevation_grid_deg")
      cfg.sweep.elevation = parse_grid(value, key);
    else if (key == "chord_radius")
    {
      const auto radius = parse_chord_radius(value);
      if (!radius)
        throw InvalidParameter("chord_radius must be 'horizontal' or 'slant'");
      cfg.sweep.chord_radius = *radius;
    }
    else if (key == "csv_path")
      cfg.csv_path = std::string(value);
    else if (key == "json_path")
      cfg.json_path = std::string(value);
    else if (key == "threads")
    {
      const double t = parse_number(value, key);
      if (!(t >= 0.0 && t <= 4096.0) || t != std::floor(t))
        throw InvalidParameter("threads must be a non-negative integer");
      cfg.sweep.threads = static_cast<unsigned>(t);
    }
    else
      throw InvalidParameter("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
  }
  cfg.sweep.validate();
  return cfg;
}

CliConfig load_config(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidParameter("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

} // namespace tetradf
