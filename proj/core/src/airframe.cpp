#include "tracksim/airframe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tracksim/errors.hpp"

namespace tracksim {

namespace {

// Forward-flight growth of blade profile power with the advance ratio taken
// against the disk-loading velocity scale (tip speed is not a model input).
constexpr double kProfileAdvanceGain = 6.0;
constexpr double kVehicleSubstep = 0.005; // s

bool finite(const EnuVector& v) {
  return std::isfinite(v.east) && std::isfinite(v.north) && std::isfinite(v.up);
}

EnuVector clamp_norm(const EnuVector& v, double max_norm) {
  const double n = v.norm();
  if (n > max_norm && n > 0.0) return v * (max_norm / n);
  return v;
}

} // namespace

double VehicleParams::rotor_disk_area_m2() const {
  const double r = 0.5 * prop_diameter_m;
  return kPi * r * r;
}

VehicleParams VehicleParams::without_payload() const {
  VehicleParams p = *this;
  p.payload_mass_kg = 0.0;
  p.avionics_current_a -= 3.0;
  return p;
}

VehicleState step_vehicle(const VehicleState& state, const EnuVector& waypoint, double dt,
                          const VehicleParams& params) {
  if (!(dt > 0.0) || dt > 0.5) {
    throw ValidationError("step_vehicle dt must be in (0, 0.5], got " + std::to_string(dt));
  }
  if (!finite(state.position) || !finite(state.velocity) || !std::isfinite(state.heading_rad) ||
      !finite(waypoint)) {
    throw ValidationError("step_vehicle: non-finite state or waypoint");
  }

  VehicleState s = state;
  const int n = std::max(1, static_cast<int>(std::ceil(dt / kVehicleSubstep)));
  const double h = dt / n;
  for (int i = 0; i < n; ++i) {
    EnuVector cmd = (waypoint - s.position) * params.pursuit_gain;
    const double ch = std::hypot(cmd.east, cmd.north);
    if (ch > params.max_speed) {
      cmd.east *= params.max_speed / ch;
      cmd.north *= params.max_speed / ch;
    }
    cmd.up = std::clamp(cmd.up, -params.max_vertical_speed, params.max_vertical_speed);

    EnuVector accel = clamp_norm((cmd - s.velocity) * (1.0 / params.velocity_tau_s), params.max_accel);
    s.velocity = s.velocity + accel * h;
    const double vh = std::hypot(s.velocity.east, s.velocity.north);
    if (vh > params.max_speed) {
      s.velocity.east *= params.max_speed / vh;
      s.velocity.north *= params.max_speed / vh;
    }
    s.position = s.position + s.velocity * h;

    if (std::hypot(s.velocity.east, s.velocity.north) > 0.1) {
      const double desired = std::atan2(s.velocity.east, s.velocity.north);
      const double d = wrap_pi(desired - s.heading_rad);
      const double turn = std::clamp(d, -params.yaw_rate_limit * h, params.yaw_rate_limit * h);
      s.heading_rad = wrap_pi(s.heading_rad + turn);
    }
  }
  return s;
}

GimbalState step_gimbal(const GimbalState& state, double desired_pan_rad, double desired_tilt_rad,
                        double dt) {
  if (!(dt > 0.0)) throw ValidationError("step_gimbal dt must be > 0");
  if (!std::isfinite(desired_pan_rad) || !std::isfinite(desired_tilt_rad)) {
    throw ValidationError("step_gimbal: non-finite desired angle");
  }
  GimbalState s = state;
  const double pan_target = std::clamp(wrap_pi(desired_pan_rad), s.pan_min, s.pan_max);
  const double tilt_target = std::clamp(desired_tilt_rad, s.tilt_min, s.tilt_max);
  // Both current and target pan live inside [pan_min, pan_max]; motion along
  // the interval is the shortest admissible path (no pass through the
  // forbidden sector).
  s.pan_rad += std::clamp(pan_target - s.pan_rad, -s.pan_rate_limit * dt, s.pan_rate_limit * dt);
  s.tilt_rad += std::clamp(tilt_target - s.tilt_rad, -s.tilt_rate_limit * dt, s.tilt_rate_limit * dt);
  s.pan_rad = std::clamp(s.pan_rad, s.pan_min, s.pan_max);
  s.tilt_rad = std::clamp(s.tilt_rad, s.tilt_min, s.tilt_max);
  return s;
}

PowerBreakdown electrical_power_breakdown(double airspeed, const VehicleParams& params,
                                          double battery_voltage) {
  if (!(airspeed >= 0.0) || !std::isfinite(airspeed)) {
    throw ValidationError("electrical_power: airspeed must be >= 0");
  }
  const double v = airspeed;
  const double weight = params.weight_n();
  const double drag = 0.5 * kAirDensity * params.drag_area_m2 * v * v;
  const double thrust = std::hypot(weight, drag);
  const double thrust_per_rotor = thrust / params.rotor_count;
  const double disk = params.rotor_disk_area_m2();

  // Glauert inflow: vi^2 = (-v^2 + sqrt(v^4 + 4 vh^4)) / 2
  const double vh2 = thrust_per_rotor / (2.0 * kAirDensity * disk);
  const double vi = std::sqrt(0.5 * (-v * v + std::sqrt(v * v * v * v + 4.0 * vh2 * vh2)));

  // Disk-loading-equivalent rotor speed: sqrt(T/(rho A)) / R = sqrt(2)*vh/R
  const double radius = 0.5 * params.prop_diameter_m;
  const double omega = std::sqrt(thrust_per_rotor / (kAirDensity * disk)) / radius;
  const double mu = v / (omega * radius);

  PowerBreakdown p;
  p.induced = thrust * vi / params.figure_of_merit;
  p.parasitic = drag * v;
  p.profile = params.profile_power_coeff * omega * omega * omega *
              (1.0 + kProfileAdvanceGain * mu * mu);
  p.avionics = params.avionics_current_a * battery_voltage;
  return p;
}

double electrical_power(double airspeed, const VehicleParams& params, double battery_voltage) {
  return electrical_power_breakdown(airspeed, params, battery_voltage).total();
}

double cell_ocv(double state_of_charge) {
  const double s = std::clamp(state_of_charge, 0.0, 1.0);
  if (s < 0.1) return 3.5 + 2.0 * s;
  if (s < 0.9) return 3.7 + 0.5 * (s - 0.1);
  return 4.1 + 1.0 * (s - 0.9);
}

double BatteryState::open_circuit_voltage() const {
  return cell_count * cell_ocv(state_of_charge);
}

double usable_energy_j(const BatteryState& batt) {
  constexpr double kMeanDischargeVoltsPerCell = 3.65;
  return batt.cell_count * (batt.capacity_mah / 1000.0) * 3600.0 * batt.usable_fraction *
         kMeanDischargeVoltsPerCell;
}

BatteryState step_battery(const BatteryState& batt, double power, double dt) {
  if (batt.depleted) throw ValidationError("step_battery: battery is depleted");
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw ValidationError("step_battery: power must be >= 0");
  }
  if (!(dt > 0.0)) throw ValidationError("step_battery: dt must be > 0");

  BatteryState b = batt;
  const double voc = b.open_circuit_voltage();
  double current = 0.0;
  if (power > 0.0) {
    const double r = b.internal_resistance_ohm;
    if (r > 0.0) {
      const double disc = voc * voc - 4.0 * r * power;
      if (disc <= 0.0) { // load beyond what the pack can source
        b.loaded_voltage = 0.5 * voc;
        b.depleted = true;
        return b;
      }
      current = (voc - std::sqrt(disc)) / (2.0 * r);
    } else {
      current = power / voc;
    }
  }
  b.loaded_voltage = voc - current * b.internal_resistance_ohm;
  if (b.loaded_voltage / b.cell_count <= b.cutoff_voltage_per_cell && power > 0.0) {
    b.depleted = true;
    return b;
  }
  const double usable_charge_c = (b.capacity_mah / 1000.0) * 3600.0 * b.usable_fraction;
  b.state_of_charge = std::max(0.0, b.state_of_charge - current * dt / usable_charge_c);
  if (b.state_of_charge <= 0.0) b.depleted = true;
  return b;
}

} // namespace tracksim
