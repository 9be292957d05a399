#ifndef TRACKSIM_AIRFRAME_HPP
#define TRACKSIM_AIRFRAME_HPP

#include "tracksim/geo.hpp"

namespace tracksim {

inline constexpr double kGravity = 9.80665;     // m/s^2
inline constexpr double kAirDensity = 1.225;    // kg/m^3, sea level
inline constexpr double kCellNominalVolts = 3.7;

/// Airframe and power-model parameters. Masses and the payload deltas follow
/// the platform build (2.8 kg bare, +1.350 kg / +3 A with the imaging
/// payload); drag_area, profile_power_coeff, figure_of_merit are calibration
/// outputs (see perf.hpp) and default to the fit against the shipped
/// performance fixtures.
struct VehicleParams {
  double base_mass_kg = 2.8;
  double payload_mass_kg = 1.35;     // 0 when the payload is removed
  double max_speed = 18.06;          // m/s, horizontal command limit
  double max_tilt_rad = 45.0 * kDeg2Rad;
  double max_accel = kGravity;       // m/s^2; defaults to g*tan(max_tilt)
  int rotor_count = 4;
  double prop_diameter_m = 0.2794;   // 11 in
  double avionics_current_a = 5.0;   // 2 A flight electronics + 3 A payload
  double max_thrust_per_rotor_n = 17.3;

  // calibrated power-model coefficients (perf::calibrate)
  double drag_area_m2 = 0.2032;
  double profile_power_coeff = 1.19e-4; // W per (rad/s)^3 equivalent rotor speed
  double figure_of_merit = 0.673;

  // guidance / kinematic shaping
  double pursuit_gain = 0.5;         // 1/s, commanded velocity per meter of error
  double velocity_tau_s = 0.25;      // first-order velocity response
  double yaw_rate_limit = 90.0 * kDeg2Rad;
  double max_vertical_speed = 4.0;   // m/s

  double total_mass_kg() const { return base_mass_kg + payload_mass_kg; }
  double weight_n() const { return total_mass_kg() * kGravity; }
  double rotor_disk_area_m2() const;

  /// Copy with the documented payload deltas removed (-1.350 kg, -3 A).
  VehicleParams without_payload() const;
};

struct VehicleState {
  EnuVector position;      // m
  EnuVector velocity;      // m/s
  double heading_rad = 0;  // azimuth of the nose, clockwise from north
};

/// Two-axis gimbal: pan is body-relative (0 = nose), tilt 0 = horizontal and
/// negative = down. Angles are kept inside their ranges at all times.
struct GimbalState {
  double pan_rad = 0.0;
  double tilt_rad = 0.0;
  double pan_rate_limit = 90.0 * kDeg2Rad;   // rad/s
  double tilt_rate_limit = 90.0 * kDeg2Rad;  // rad/s
  double pan_min = -170.0 * kDeg2Rad;
  double pan_max = 170.0 * kDeg2Rad;
  double tilt_min = -90.0 * kDeg2Rad;
  double tilt_max = 25.0 * kDeg2Rad;
};

struct BatteryState {
  int cell_count = 6;
  double capacity_mah = 8000.0;
  double usable_fraction = 0.6494;   // calibration output
  double state_of_charge = 1.0;      // fraction of usable capacity remaining
  double internal_resistance_ohm = 0.002; // whole pack
  double cutoff_voltage_per_cell = 3.6;
  double loaded_voltage = 0.0;       // set by step_battery; 0 = not yet loaded
  bool depleted = false;

  double open_circuit_voltage() const; // pack volts at current state of charge
  double pack_voltage() const {        // last loaded voltage, OCV before any load
    return loaded_voltage > 0.0 ? loaded_voltage : open_circuit_voltage();
  }
};

/// Open-circuit per-cell voltage: piecewise-linear, monotone from 3.5 V at
/// empty through 3.7 V / 4.1 V knees to 4.2 V at full.
double cell_ocv(double state_of_charge);

/// Energy dispensable before cutoff, J: capacity * usable_fraction at a
/// 3.65 V/cell mean discharge voltage.
double usable_energy_j(const BatteryState& batt);

/// Advance the vehicle one step toward `waypoint`: commanded velocity is
/// pursuit_gain * error clamped to the speed limits, actual velocity slews
/// toward the command at <= max_accel with a first-order lag, and heading
/// turns toward the velocity azimuth at <= yaw_rate_limit. Internally
/// substeps at <= 5 ms so results are insensitive to the caller's dt.
/// Requires 0 < dt <= 0.5 and finite inputs.
VehicleState step_vehicle(const VehicleState& state, const EnuVector& waypoint, double dt,
                          const VehicleParams& params);

/// Move each gimbal axis toward the desired angle (clamped into its range)
/// at no more than its rate limit. A desired pan outside the range settles
/// at the nearer range boundary; there is no wraparound through the
/// forbidden sector behind the vehicle.
GimbalState step_gimbal(const GimbalState& state, double desired_pan_rad, double desired_tilt_rad,
                        double dt);

/// Electrical power components at a given airspeed, W.
struct PowerBreakdown {
  double induced = 0.0;
  double parasitic = 0.0;
  double profile = 0.0;
  double avionics = 0.0;
  double total() const { return induced + parasitic + profile + avionics; }
};

/// Level-flight electrical power model:
///   induced  — momentum theory over rotor_count disks with Glauert
///              forward-flight inflow, divided by figure_of_merit;
///   parasitic — 0.5 * rho * drag_area * v^3;
///   profile  — profile_power_coeff * Omega_eq^3 * (1 + k_mu * mu^2), with
///              Omega_eq the disk-loading-equivalent rotor speed;
///   avionics — avionics_current * battery_voltage.
PowerBreakdown electrical_power_breakdown(double airspeed, const VehicleParams& params,
                                          double battery_voltage);

/// Total electrical power, W. Strictly positive; airspeed must be >= 0.
double electrical_power(double airspeed, const VehicleParams& params, double battery_voltage);

/// Discharge the battery by `power` watts for `dt` seconds: current is drawn
/// at the loaded voltage (open-circuit minus IR sag), charge decrements
/// against the usable capacity, and the depleted flag latches once the
/// loaded per-cell voltage reaches the cutoff. Stepping a depleted battery
/// throws.
BatteryState step_battery(const BatteryState& batt, double power, double dt);

} // namespace tracksim

#endif // TRACKSIM_AIRFRAME_HPP
