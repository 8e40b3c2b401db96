#include "doctest.h"

#include "tetradf/config.hpp"
#include "tetradf/errors.hpp"
#include "tetradf/sweep_io.hpp"

#include <sstream>

using namespace tetradf;

TEST_CASE("parse_config: full file")
{
  const auto cfg = parse_config(R"(
# comment line
edge_length_m = 0.25
propagation_speed_mps = 1500   # water
ranges_m = 1, 10,100
bearing_grid_deg = 0, 350, 10
elevation_grid_deg = -30, 30, 10
chord_radius = slant
csv_path = out/records.csv
json_path = out/summary.json
threads = 2
)");
  CHECK(cfg.sweep.edge_length_m == 0.25);
  CHECK(cfg.sweep.propagation_speed_mps == 1500.0);
  CHECK(cfg.sweep.ranges_m == std::vector<double>{1.0, 10.0, 100.0});
  CHECK(cfg.sweep.bearing.stop == 350.0);
  CHECK(cfg.sweep.elevation.start == -30.0);
  CHECK(cfg.sweep.chord_radius == ChordRadius::slant);
  CHECK(cfg.csv_path == "out/records.csv");
  CHECK(cfg.json_path == "out/summary.json");
  CHECK(cfg.sweep.threads == 2);
}

TEST_CASE("parse_config: defaults and errors")
{
  const auto cfg = parse_config("");
  CHECK(cfg.sweep.edge_length_m == 0.5);
  CHECK(cfg.sweep.ranges_m.size() == 7);

  CHECK_THROWS_AS(parse_config("ranges_m ="), InvalidParameter);
  CHECK_THROWS_AS(parse_config("edge_length_m = abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_config("edge_length_m = -1"), InvalidParameter);
  CHECK_THROWS_AS(parse_config("colour = blue"), InvalidParameter);
  CHECK_THROWS_AS(parse_config("just some words"), InvalidParameter);
  CHECK_THROWS_AS(parse_config("bearing_grid_deg = 0, 360"), InvalidParameter);
  CHECK_THROWS_AS(parse_config("chord_radius = diagonal"), InvalidParameter);
  CHECK_THROWS_AS(parse_config("threads = 1.5"), InvalidParameter);
  CHECK_THROWS_AS(load_config("/nonexistent/sweep.cfg"), InvalidParameter);
}

TEST_CASE("CSV round-trips exactly")
{
  SweepConfig cfg;
  cfg.ranges_m = {1.0, 1e6};
  cfg.bearing = {0.0, 90.0, 15.0};
  cfg.elevation = {-20.0, 20.0, 10.0};
  const auto report = run_sweep(cfg);

  std::stringstream buf;
  write_csv(buf, report.records);
  CHECK(buf.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);

  const auto back = read_csv(buf);
  REQUIRE(back.size() == report.records.size());
  for (std::size_t i = 0; i < back.size(); ++i)
  {
    CHECK(back[i].range_m == report.records[i].range_m);
    CHECK(back[i].est_bearing_deg == report.records[i].est_bearing_deg);
    CHECK(back[i].elevation_error_deg == report.records[i].elevation_error_deg);
    CHECK(back[i].positional_error_cm == report.records[i].positional_error_cm);
  }

  const auto again = summarize(back);
  REQUIRE(again.size() == report.summaries.size());
  for (std::size_t i = 0; i < again.size(); ++i)
  {
    CHECK(again[i].avg_cm == report.summaries[i].avg_cm);
    CHECK(again[i].max_cm == report.summaries[i].max_cm);
  }
}

TEST_CASE("read_csv: rejects malformed input")
{
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), InvalidParameter);
  std::istringstream header("range,bearing\n1,2\n");
  CHECK_THROWS_AS(read_csv(header), InvalidParameter);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), InvalidParameter);
  std::istringstream bad_number(std::string(kCsvHeader) + "\n1,2,3,4,5,6,7,x\n");
  CHECK_THROWS_AS(read_csv(bad_number), InvalidParameter);
}

TEST_CASE("summary JSON and table")
{
  SweepConfig cfg;
  cfg.ranges_m = {10.0};
  const auto report = run_sweep(cfg);
  const auto js = summary_json(report);
  CHECK(js["metadata"]["config"]["edge_length_m"] == 0.5);
  CHECK(js["metadata"]["config"]["chord_radius"] == "horizontal");
  REQUIRE(js["ranges"].size() == 1);
  const auto &row = js["ranges"][0];
  CHECK(row["range_m"] == 10.0);
  CHECK(row["avg_cm"].get<double>() == doctest::Approx(std::round(report.summaries[0].avg_cm * 100.0) / 100.0));
  CHECK(row["bearing_fit"]["harmonic"] == 3);
  CHECK(row["elevation_harmonic_flip"] == true);

  // Same config, same bytes.
  CHECK(summary_json(run_sweep(cfg)).dump() == js.dump());

  const auto table = format_summary_table(report.summaries);
  CHECK(table.find("Distance (m)") != std::string::npos);
  CHECK(table.find("10 ") != std::string::npos);
}
