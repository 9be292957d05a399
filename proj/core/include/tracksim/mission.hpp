#ifndef TRACKSIM_MISSION_HPP
#define TRACKSIM_MISSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "tracksim/airframe.hpp"
#include "tracksim/env.hpp"
#include "tracksim/geo.hpp"
#include "tracksim/sensors.hpp"
#include "tracksim/track.hpp"

namespace tracksim {

struct AbortPolicy {
  bool on_battery_cutoff = true;
  std::string on_link_lost; // link name, empty = never abort on link loss
};

struct TraceSample {
  double time_s = 0.0;
  GeoPoint point;
};

/// Full experiment description: models, policies, and the target GPS trace.
struct Scenario {
  std::string name = "scenario";
  GeoPoint origin;
  double standoff_altitude_m = 55.0;
  VehicleParams vehicle;
  BatteryState battery;
  GimbalState gimbal;
  std::vector<CameraModel> cameras;
  std::vector<LinkModel> links;
  AcousticModel acoustic;
  std::vector<EnuVector> ground_listeners;
  std::vector<TraceSample> target_trace;
  double sim_dt_s = 0.1;
  double target_update_period_s = 1.0;
  double target_latency_s = 0.2;
  AbortPolicy abort_policy;
};

/// Throws ValidationError with a field-specific message on the first
/// violated constraint. Called by run_mission before any stepping.
void validate_scenario(const Scenario& scenario);

enum class Termination { TraceEnd, BatteryCutoff, LinkLost };

const char* to_string(Termination t);

struct DistanceSample {
  double time_s = 0.0;
  double distance_m = 0.0;
};

struct BatterySample {
  double time_s = 0.0;
  double voltage_v = 0.0;
  double soc = 0.0;
};

struct PowerSample {
  double time_s = 0.0;
  double power_w = 0.0;
};

struct RssiSample {
  double time_s = 0.0;
  double rssi_dbm = 0.0;
  LinkState state = LinkState::Connected;
};

struct SplSample {
  double time_s = 0.0;
  double spl_db = 0.0;
};

/// Everything the run produced: scalar outcome plus the full time series,
/// all on the same time base (samples at k * sim_dt after each step).
struct MissionReport {
  std::string scenario_name;
  double duration_s = 0.0;
  Termination termination = Termination::TraceEnd;
  TrackReport track;
  double energy_dispensed_j = 0.0;
  BatteryState final_battery;
  std::vector<DistanceSample> distance_trace;
  std::vector<BatterySample> battery_trace;
  std::vector<PowerSample> power_trace;
  std::vector<std::pair<std::string, std::vector<RssiSample>>> rssi_traces; // scenario link order
  std::vector<std::vector<SplSample>> spl_traces;                           // per listener
  std::vector<VisibilityRecord> visibility_log;                             // gimbal camera
};

/// Run the closed-loop tracking simulation: per fixed step, sample the
/// delayed/held target, issue the track command, step gimbal/vehicle/
/// battery, and evaluate visibility, per-link RSSI at the ground station
/// (scenario origin), and SPL at each listener. Ends at trace end or per
/// the abort policy. Deterministic: identical scenarios produce
/// bitwise-identical reports.
MissionReport run_mission(const Scenario& scenario);

/// Interpolated target position at a mission time (clamped to the trace).
GeoPoint trace_at(const std::vector<TraceSample>& trace, double time_s);

/// The bundled reproduction scenario: launch-site origin, 55 m standoff,
/// 8 m/s speed limit, payload configuration, default camera/link/acoustic
/// models, and a synthetic ~5.5 minute car trace (two loops joined by a
/// straightaway).
Scenario demo_scenario();

/// The demo car trace by itself, 1 Hz samples.
std::vector<TraceSample> demo_target_trace(const GeoPoint& origin);

} // namespace tracksim

#endif // TRACKSIM_MISSION_HPP
