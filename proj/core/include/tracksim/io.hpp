#ifndef TRACKSIM_IO_HPP
#define TRACKSIM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tracksim/mission.hpp"
#include "tracksim/perf.hpp"

namespace tracksim {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kScenarioSchemaVersion = 1;

/// Parse a target trace CSV (`time_s,lat_deg,lon_deg[,alt_m]`; missing
/// altitude reads as 0). Malformed rows raise IoError with the line number;
/// non-monotone times raise ValidationError naming the offending timestamps.
std::vector<TraceSample> load_target_trace(std::istream& in);
std::vector<TraceSample> load_target_trace(const std::filesystem::path& csv_path);

void write_target_trace(const std::vector<TraceSample>& trace, std::ostream& out);

/// Scenario config file: a JSON tree mirroring the Scenario struct; every
/// field is optional and falls back to the demo-scenario defaults. The
/// target trace comes from `target_trace_csv`, resolved relative to the
/// scenario file.
Scenario load_scenario(const std::filesystem::path& json_path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& json_path,
                   const std::string& trace_csv_name);

/// Vehicle + battery config (the `perf --config` / `calibrate --out` format).
PerfConfig load_perf_config(const std::filesystem::path& json_path);
void save_perf_config(const PerfConfig& config, const std::filesystem::path& json_path);

/// Published-performance fixture file: endurance rows for both platform
/// configurations plus the hover/max-speed anchor block.
struct CalibrationFixtures {
  CalibrationTable table;
  HoverMetrics anchors;
};
CalibrationFixtures load_calibration_fixtures(const std::filesystem::path& json_path);

/// Scalar summary mirrored into report.json; written and read back exactly.
struct ReportSummary {
  int schema_version = kReportSchemaVersion;
  std::string scenario_name;
  double duration_s = 0.0;
  std::string termination;
  double max_horizontal_distance_m = 0.0;
  double mean_horizontal_distance_m = 0.0;
  double in_frame_fraction = 0.0;
  double target_update_period_s = 0.0;
  double energy_dispensed_j = 0.0;
  double final_soc = 0.0;
  double final_voltage_v = 0.0;
  long sample_count = 0;

  bool operator==(const ReportSummary&) const = default;
};

ReportSummary summarize(const MissionReport& report);

/// Write report.json plus one CSV per time series into `dir` (created if
/// missing): distance.csv, battery.csv, power.csv, visibility.csv,
/// rssi.csv, spl.csv.
void write_report(const MissionReport& report, const std::filesystem::path& dir);

ReportSummary read_report_summary(const std::filesystem::path& json_path);

} // namespace tracksim

#endif // TRACKSIM_IO_HPP
