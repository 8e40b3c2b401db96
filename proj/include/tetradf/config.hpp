#pragma once

// Flat key = value configuration for the command-line tool.
//
//   # comment
//   edge_length_m         = 0.5
//   propagation_speed_mps = 299792458
//   ranges_m              = 1, 10, 100
//   bearing_grid_deg      = 0, 360, 5      # start, stop, step
//   elevation_grid_deg    = -35, 35, 5
//   chord_radius          = horizontal     # or slant
//   csv_path              = sweep.csv
//   json_path             = sweep_summary.json
//   threads               = 0              # 0: hardware concurrency
//
// Every key is optional; omitted keys keep the defaults of SweepConfig.

#include "tetradf/sweep.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tetradf
{

struct CliConfig
{
  SweepConfig sweep;
  std::string csv_path = "sweep.csv";
  std::string json_path = "sweep_summary.json";
};

// Throws InvalidParameter on unknown keys, malformed values or an invalid sweep.
CliConfig parse_config(std::string_view text);

// Throws InvalidParameter if the file cannot be read.
CliConfig load_config(const std::filesystem::path &path);

} // namespace tetradf
