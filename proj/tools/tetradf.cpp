// tetradf: direction finding from TDOA readings at a regular-tetrahedron array.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 degenerate solve.

#include "tetradf/config.hpp"
#include "tetradf/direction.hpp"
#include "tetradf/errors.hpp"
#include "tetradf/sweep_io.hpp"
#include "tetradf/wavefront.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace
{

using nlohmann::json;
using namespace tetradf;

constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;

struct ArrayOptions
{
  double edge_length_m = 0.5;
  double propagation_speed_mps = 299792458.0;
  std::string config_path;

  void add_to(CLI::App &cmd)
  {
    cmd.add_option("--edge", edge_length_m, "Tetrahedron edge length in meters")->capture_default_str();
    cmd.add_option("--speed", propagation_speed_mps, "Propagation speed in m/s")->capture_default_str();
    cmd.add_option("--config", config_path, "Config file providing edge_length_m and propagation_speed_mps");
  }

  TetraArray build(const CLI::App &cmd) const
  {
    double edge = edge_length_m;
    double speed = propagation_speed_mps;
    if (!config_path.empty())
    {
      const CliConfig cfg = load_config(config_path);
      // Explicit flags win over the file.
      if (cmd.count("--edge") == 0)
        edge = cfg.sweep.edge_length_m;
      if (cmd.count("--speed") == 0)
        speed = cfg.sweep.propagation_speed_mps;
    }
    return TetraArray::build(edge, speed);
  }
};

void print_error(const std::string &kind, const std::string &message)
{
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

json estimate_json(const DirectionEstimate &est)
{
  return {
      {"bearing_deg", est.bearing_deg},
      {"elevation_deg", est.elevation_deg},
      {"chosen_vertex", std::string(to_string(est.chosen_vertex))},
      {"mode", std::string(to_string(est.mode))},
      {"clamped", est.clamped},
      {"ambiguous", est.ambiguous},
      {"bearing_defined", est.bearing_defined},
  };
}

// Channel values from stdin: either `simulate` JSON output or whitespace-separated numbers.
std::vector<double> read_stdin_values(SampleUnit &unit)
{
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
  {
    const json doc = json::parse(text);
    if (doc.contains("seconds"))
    {
      unit = SampleUnit::seconds;
      return doc.at("seconds").get<std::vector<double>>();
    }
    unit = SampleUnit::meters;
    return doc.at("meters").get<std::vector<double>>();
  }
  std::vector<double> values;
  std::istringstream in(text);
  double v = 0.0;
  while (in >> v)
    values.push_back(v);
  if (!in.eof())
    throw CLI::ValidationError("stdin", "expected numbers");
  return values;
}

struct SolveOptions
{
  ArrayOptions array;
  std::vector<double> values;
  std::string unit = "seconds";
  bool degraded = false;
  std::string shielded = "d";
  std::string sign_hint;
};

int run_solve(const CLI::App &cmd, const SolveOptions &opt)
{
  const TetraArray array = opt.array.build(cmd);

  auto unit = parse_unit(opt.unit);
  if (!unit)
    throw CLI::ValidationError("--unit", "must be seconds or meters");

  std::vector<double> values = opt.values;
  if (values.empty())
    values = read_stdin_values(*unit);

  const double to_meters = *unit == SampleUnit::seconds ? array.propagation_speed() : 1.0;

  if (!opt.degraded)
  {
    if (values.size() != 4)
      throw CLI::ValidationError("--values", "full solve needs 4 channel values (a b c d)");
    TdoaSample sample;
    sample.unit = *unit;
    std::copy(values.begin(), values.end(), sample.values.begin());
    std::cout << estimate_json(solve_full(sample, array)).dump() << '\n';
    return 0;
  }

  const auto shielded = parse_vertex(opt.shielded);
  if (!shielded)
    throw CLI::ValidationError("--shielded", "must be one of a, b, c, d");
  std::optional<SignHint> hint;
  if (!opt.sign_hint.empty())
  {
    hint = parse_sign_hint(opt.sign_hint);
    if (!hint)
      throw CLI::ValidationError("--sign-hint", "must be above or below");
  }

  const TriangleFace face = face_of(array, *shielded);
  std::array<double, 3> lags{};
  if (values.size() == 4)
  {
    for (std::size_t k = 0; k < 3; ++k)
      lags[k] = values[index_of(face.vertex_ids[k])] * to_meters;
  }
  else if (values.size() == 3)
  {
    for (std::size_t k = 0; k < 3; ++k)
      lags[k] = values[k] * to_meters;
  }
  else
  {
    throw CLI::ValidationError("--values", "degraded solve needs 3 values (or 4 with the shielded one ignored)");
  }

  std::cout << estimate_json(solve_degraded(lags, face, hint)).dump() << '\n';
  return 0;
}

struct SimulateOptions
{
  ArrayOptions array;
  double bearing_deg = 0.0;
  double elevation_deg = 0.0;
  double range_m = 0.0;
  bool far_field = false;
};

int run_simulate(const CLI::App &cmd, const SimulateOptions &opt)
{
  const TetraArray array = opt.array.build(cmd);
  if (!opt.far_field && cmd.count("--range") == 0)
    throw CLI::ValidationError("--range", "give --range or --far-field");

  const SourceSpec source = opt.far_field ? SourceSpec::at_infinity(opt.bearing_deg, opt.elevation_deg)
                                          : SourceSpec::at_range(opt.bearing_deg, opt.elevation_deg, opt.range_m);
  const TdoaSample sample = simulate(source, array);

  std::vector<double> meters;
  for (double s : sample.values)
    meters.push_back(s * array.propagation_speed());

  json out;
  out["source"] = {{"bearing_deg", opt.bearing_deg}, {"elevation_deg", opt.elevation_deg}};
  out["source"]["range_m"] = opt.far_field ? json(nullptr) : json(opt.range_m);
  out["unit"] = "seconds";
  out["seconds"] = sample.values;
  out["meters"] = meters;
  std::cout << out.dump() << '\n';
  return 0;
}

struct SweepOptions
{
  std::string config_path;
  std::string csv_path;
  std::string json_path;
};

int run_sweep_cmd(const SweepOptions &opt)
{
  CliConfig cfg = load_config(opt.config_path);
  if (!opt.csv_path.empty())
    cfg.csv_path = opt.csv_path;
  if (!opt.json_path.empty())
    cfg.json_path = opt.json_path;

  if (const char *cap = std::getenv("TETRADF_THREADS"); cap != nullptr && *cap != '\0')
  {
    const long n = std::strtol(cap, nullptr, 10);
    if (n > 0 && (cfg.sweep.threads == 0 || static_cast<unsigned>(n) < cfg.sweep.threads))
      cfg.sweep.threads = static_cast<unsigned>(n);
  }

  const SweepReport report = run_sweep(cfg.sweep);

  std::ofstream csv(cfg.csv_path);
  if (!csv)
    throw InvalidParameter("cannot write " + cfg.csv_path);
  write_csv(csv, report.records);

  std::ofstream js(cfg.json_path);
  if (!js)
    throw InvalidParameter("cannot write " + cfg.json_path);
  js << summary_json(report).dump(2) << '\n';

  std::cout << format_summary_table(report.summaries);
  return 0;
}

int run_report(const std::string &csv_path)
{
  std::ifstream in(csv_path);
  if (!in)
    throw InvalidParameter("cannot read " + csv_path);
  const auto records = read_csv(in);
  if (records.empty())
    throw InvalidParameter(csv_path + " has no records");
  std::cout << format_summary_table(summarize(records));
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Direction finding from TDOA readings at a regular-tetrahedron array"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto *solve = app.add_subcommand("solve", "Bearing and elevation from arrival lags (JSON on stdout)");
  solve_opt.array.add_to(*solve);
  solve->add_option("--values", solve_opt.values, "Channel lags a b c d (or 3 face values with --degraded); "
                                                  "read from stdin when omitted");
  solve->add_option("--unit", solve_opt.unit, "seconds or meters")->capture_default_str();
  solve->add_flag("--degraded", solve_opt.degraded, "Solve from the three unshielded channels");
  solve->add_option("--shielded", solve_opt.shielded, "Shielded vertex in degraded mode")->capture_default_str();
  solve->add_option("--sign-hint", solve_opt.sign_hint, "above or below the face plane (degraded mode)");

  SimulateOptions sim_opt;
  auto *sim = app.add_subcommand("simulate", "Arrival lags for a source (JSON on stdout)");
  sim_opt.array.add_to(*sim);
  sim->add_option("--bearing", sim_opt.bearing_deg, "Bearing in degrees")->required();
  sim->add_option("--elevation", sim_opt.elevation_deg, "Elevation in degrees")->required();
  auto *range_opt = sim->add_option("--range", sim_opt.range_m, "Range from the array centroid in meters");
  sim->add_flag("--far-field", sim_opt.far_field, "Plane wave from infinity")->excludes(range_opt);

  SweepOptions sweep_opt;
  auto *sweep = app.add_subcommand("sweep", "Near-field error sweep; writes CSV and JSON, prints a summary");
  sweep->add_option("config", sweep_opt.config_path, "Sweep config file")->required();
  sweep->add_option("--csv", sweep_opt.csv_path, "Override csv_path");
  sweep->add_option("--json", sweep_opt.json_path, "Override json_path");

  std::string report_csv;
  auto *report = app.add_subcommand("report", "Summarize a sweep CSV");
  report->add_option("csv", report_csv, "Sweep CSV file")->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try
  {
    if (*solve)
      return run_solve(*solve, solve_opt);
    if (*sim)
      return run_simulate(*sim, sim_opt);
    if (*sweep)
      return run_sweep_cmd(sweep_opt);
    if (*report)
      return run_report(report_csv);
  }
  catch (const DegenerateReadings &e)
  {
    print_error("degenerate-readings", e.what());
    return kExitDegenerate;
  }
  catch (const CLI::Error &e)
  {
    print_error("usage", e.what());
    return kExitUsage;
  }
  catch (const json::exception &e)
  {
    print_error("usage", e.what());
    return kExitUsage;
  }
  catch (const std::invalid_argument &e)
  {
    print_error("invalid-parameter", e.what());
    return kExitUsage;
  }
  catch (const std::domain_error &e)
  {
    print_error("domain", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
