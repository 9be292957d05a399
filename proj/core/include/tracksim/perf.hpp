#ifndef TRACKSIM_PERF_HPP
#define TRACKSIM_PERF_HPP

#include <vector>

#include "tracksim/airframe.hpp"

namespace tracksim {

/// Calculator input: a vehicle + battery pair and whether the imaging
/// payload is attached. `vehicle` holds the payload-attached values;
/// detaching removes exactly the documented deltas (1.350 kg, 3 A).
struct PerfConfig {
  VehicleParams vehicle;
  BatteryState battery;
  bool payload_attached = true;

  VehicleParams effective_vehicle() const {
    return payload_attached ? vehicle : vehicle.without_payload();
  }
  double nominal_pack_voltage() const { return battery.cell_count * kCellNominalVolts; }
};

/// One endurance/range table row. range == airspeed * endurance by
/// construction for feasible rows.
struct PerfRow {
  double airspeed_kmh = 0.0;
  double endurance_s = 0.0;
  double range_m = 0.0;
  bool feasible = true;
};

struct HoverMetrics {
  double hover_time_s = 0.0;
  double thrust_weight_ratio = 0.0;
  double specific_thrust_g_per_w = 0.0;
  double per_motor_current_a = 0.0;
  double hover_throttle = 0.0; // fraction of linear throttle travel
  double total_hover_power_w = 0.0;
  double max_speed_ms = 0.0;
  double max_climb_rate_ms = 0.0;
};

/// Endurance = usable battery energy / electrical power at each airspeed;
/// range = v * endurance. Airspeeds at or above the tilt-limited maximum get
/// an infeasible marker instead of numbers. Airspeeds must be >= 0.
std::vector<PerfRow> endurance_range_table(const PerfConfig& config,
                                           const std::vector<double>& airspeeds_kmh);

/// Hover-point summary. Throws when thrust_weight_ratio would be <= 1.
HoverMetrics hover_metrics(const PerfConfig& config);

/// Tilt-limited level maximum speed: at max_tilt the horizontal thrust
/// component balances parasitic drag while the vertical component carries
/// the weight. Solved by bisection; throws when no equilibrium exists below
/// 100 m/s.
double max_speed_estimate(const PerfConfig& config);

/// Published-table fixtures the power model is fitted against. Rows carry
/// airspeed and endurance; either list may be empty.
struct CalibrationTable {
  std::vector<PerfRow> payload_rows;
  std::vector<PerfRow> base_rows;
};

struct CalibrationResult {
  VehicleParams vehicle;      // input params with the four coefficients replaced
  double usable_fraction = 0; // battery usable-capacity fraction
  double rms_relative_error = 0;
};

/// Weighted least-squares fit of drag_area, profile_power_coeff,
/// figure_of_merit, and usable_fraction to the endurance rows, the hover
/// power anchor, and the max-speed anchor (anchors.total_hover_power_w,
/// anchors.max_speed_ms). Deterministic: fixed initial guess, tolerance
/// 1e-10. Throws CalibrationError when the residual exceeds 15% RMS,
/// naming the worst row.
CalibrationResult calibrate(const CalibrationTable& table, const HoverMetrics& anchors,
                            const PerfConfig& seed);

} // namespace tracksim

#endif // TRACKSIM_PERF_HPP
