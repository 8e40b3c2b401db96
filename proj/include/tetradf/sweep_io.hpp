#pragma once

#include "tetradf/sweep.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tetradf
{

inline constexpr const char *kCsvHeader =
    "range_m,bearing_deg,elev_deg,est_bearing_deg,est_elev_deg,bearing_err_deg,elev_err_deg,pos_err_cm";

// One record per row, shortest round-trip formatting for every value.
void write_csv(std::ostream &out, std::span<const ErrorRecord> records);

// Throws InvalidParameter on a wrong header or malformed row.
std::vector<ErrorRecord> read_csv(std::istream &in);

// Per-range aggregates (cm, two decimals) and fits, plus a metadata block echoing the config.
nlohmann::json summary_json(const SweepReport &report);

// Fixed-width min/avg/max table, one row per range.
std::string format_summary_table(std::span<const RangeSummary> summaries);

} // namespace tetradf
