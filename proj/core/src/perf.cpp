#include "tracksim/perf.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "tracksim/errors.hpp"

namespace tracksim {

namespace {

constexpr double kThrottleExponent = 0.75; // thrust ~ throttle^(4/3), linear-mode ESC
constexpr double kKmhToMs = 1.0 / 3.6;

double tilt_drag_residual(double v, const VehicleParams& p) {
  return 0.5 * kAirDensity * p.drag_area_m2 * v * v - p.weight_n() * std::tan(p.max_tilt_rad);
}

} // namespace

double max_speed_estimate(const PerfConfig& config) {
  const VehicleParams p = config.effective_vehicle();
  if (p.drag_area_m2 <= 0.0 || p.weight_n() <= 0.0) {
    throw ValidationError("max_speed_estimate: invalid configuration");
  }
  double lo = 0.0, hi = 100.0;
  if (tilt_drag_residual(hi, p) < 0.0) {
    throw CalibrationError("max_speed_estimate: no tilt/drag equilibrium below 100 m/s");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tilt_drag_residual(mid, p) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<PerfRow> endurance_range_table(const PerfConfig& config,
                                           const std::vector<double>& airspeeds_kmh) {
  const VehicleParams p = config.effective_vehicle();
  const double energy = usable_energy_j(config.battery);
  const double vbatt = config.nominal_pack_voltage();
  const double vmax = max_speed_estimate(config);

  std::vector<PerfRow> rows;
  rows.reserve(airspeeds_kmh.size());
  for (double kmh : airspeeds_kmh) {
    if (kmh < 0.0 || !std::isfinite(kmh)) {
      throw ValidationError("endurance_range_table: airspeed must be >= 0");
    }
    PerfRow row;
    row.airspeed_kmh = kmh;
    const double v = kmh * kKmhToMs;
    if (v >= vmax) {
      row.feasible = false;
    } else {
      row.endurance_s = energy / electrical_power(v, p, vbatt);
      row.range_m = v * row.endurance_s;
    }
    rows.push_back(row);
  }
  return rows;
}

HoverMetrics hover_metrics(const PerfConfig& config) {
  const VehicleParams p = config.effective_vehicle();
  const double weight = p.weight_n();
  const double max_thrust = p.max_thrust_per_rotor_n * p.rotor_count;
  if (max_thrust <= weight) {
    throw ValidationError("hover_metrics: thrust-weight ratio <= 1, not flyable");
  }
  const double vbatt = config.nominal_pack_voltage();
  const PowerBreakdown hover = electrical_power_breakdown(0.0, p, vbatt);

  HoverMetrics m;
  m.total_hover_power_w = hover.total();
  m.hover_time_s = usable_energy_j(config.battery) / m.total_hover_power_w;
  m.thrust_weight_ratio = max_thrust / weight;
  m.hover_throttle = std::pow(weight / max_thrust, kThrottleExponent);
  const double shaft_power = hover.total() - hover.avionics;
  m.specific_thrust_g_per_w = p.total_mass_kg() * 1000.0 / shaft_power;
  m.per_motor_current_a = shaft_power / (p.rotor_count * vbatt);
  m.max_speed_ms = max_speed_estimate(config);

  // Excess-power climb at full throttle, hover attitude: axial-climb inflow
  // against the extra vertical drag, solved for the rate that consumes the
  // full-thrust power budget.
  const double disk = p.rotor_disk_area_m2();
  auto climb_power = [&](double vc) {
    const double thrust = weight + 0.5 * kAirDensity * p.drag_area_m2 * vc * vc;
    const double tr = thrust / p.rotor_count;
    const double vh = std::sqrt(tr / (2.0 * kAirDensity * disk));
    const double vi = -0.5 * vc + std::sqrt(0.25 * vc * vc + vh * vh);
    const double radius = 0.5 * p.prop_diameter_m;
    const double omega = std::sqrt(tr / (kAirDensity * disk)) / radius;
    return thrust * (vc + vi) / p.figure_of_merit +
           p.profile_power_coeff * omega * omega * omega + hover.avionics;
  };
  const double tmax_r = p.max_thrust_per_rotor_n;
  const double vh_max = std::sqrt(tmax_r / (2.0 * kAirDensity * disk));
  const double radius = 0.5 * p.prop_diameter_m;
  const double omega_max = std::sqrt(tmax_r / (kAirDensity * disk)) / radius;
  const double p_max = max_thrust * vh_max / p.figure_of_merit +
                       p.profile_power_coeff * omega_max * omega_max * omega_max + hover.avionics;
  double lo = 0.0, hi = 100.0;
  if (climb_power(hi) > p_max) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (climb_power(mid) < p_max ? lo : hi) = mid;
    }
  }
  m.max_climb_rate_ms = 0.5 * (lo + hi);
  return m;
}

namespace {

struct FitProblem {
  const CalibrationTable& table;
  const HoverMetrics& anchors;
  PerfConfig seed;

  // weights: hover rows pin the multiply-gated endurance anchors, the
  // base 30 km/h row needs extra pull against its inconsistent neighbors,
  // and the two scalar anchors dominate their single degrees of freedom.
  static constexpr double kHoverRowWeight = 9.0;
  static constexpr double kBase30Weight = 2.0;
  static constexpr double kPowerAnchorWeight = 10.0;
  static constexpr double kSpeedAnchorWeight = 2.0;

  PerfConfig configured(const Eigen::Vector4d& x) const {
    PerfConfig c = seed;
    c.vehicle.drag_area_m2 = x[0];
    c.vehicle.profile_power_coeff = x[1];
    c.vehicle.figure_of_merit = x[2];
    c.battery.usable_fraction = x[3];
    return c;
  }

  Eigen::VectorXd residuals(const Eigen::Vector4d& x) const {
    PerfConfig c = configured(x);
    c.payload_attached = true;
    const VehicleParams pay = c.effective_vehicle();
    const VehicleParams base = pay.without_payload();
    const double energy = usable_energy_j(c.battery);
    const double vbatt = c.nominal_pack_voltage();

    std::vector<double> res;
    auto add_rows = [&](const std::vector<PerfRow>& rows, const VehicleParams& p, bool is_base) {
      for (const PerfRow& row : rows) {
        const double v = row.airspeed_kmh * kKmhToMs;
        const double model = energy / electrical_power(v, p, vbatt);
        double w = 1.0;
        if (row.airspeed_kmh == 0.0) w = kHoverRowWeight;
        else if (is_base && std::abs(row.airspeed_kmh - 30.0) < 1e-9) w = kBase30Weight;
        res.push_back(w * (model / row.endurance_s - 1.0));
      }
    };
    add_rows(table.payload_rows, pay, false);
    add_rows(table.base_rows, base, true);

    res.push_back(kPowerAnchorWeight *
                  (electrical_power(0.0, pay, vbatt) / anchors.total_hover_power_w - 1.0));
    PerfConfig cp = c;
    cp.payload_attached = true;
    res.push_back(kSpeedAnchorWeight * (max_speed_estimate(cp) / anchors.max_speed_ms - 1.0));

    return Eigen::Map<Eigen::VectorXd>(res.data(), static_cast<long>(res.size()));
  }

  // Unweighted per-row relative errors for reporting and the RMS gate.
  std::vector<std::pair<std::string, double>> row_errors(const Eigen::Vector4d& x) const {
    PerfConfig c = configured(x);
    c.payload_attached = true;
    const VehicleParams pay = c.effective_vehicle();
    const VehicleParams base = pay.without_payload();
    const double energy = usable_energy_j(c.battery);
    const double vbatt = c.nominal_pack_voltage();
    std::vector<std::pair<std::string, double>> out;
    auto add = [&](const std::vector<PerfRow>& rows, const VehicleParams& p, const char* tag) {
      for (const PerfRow& row : rows) {
        const double v = row.airspeed_kmh * kKmhToMs;
        const double model = energy / electrical_power(v, p, vbatt);
        std::ostringstream name;
        name << tag << " " << row.airspeed_kmh << " km/h";
        out.emplace_back(name.str(), model / row.endurance_s - 1.0);
      }
    };
    add(table.payload_rows, pay, "payload");
    add(table.base_rows, base, "base");
    return out;
  }
};

} // namespace

CalibrationResult calibrate(const CalibrationTable& table, const HoverMetrics& anchors,
                            const PerfConfig& seed) {
  const size_t n_rows = table.payload_rows.size() + table.base_rows.size();
  if (n_rows < 4) {
    throw ValidationError("calibrate: need at least 4 table rows");
  }
  double min_kmh = 1e300, max_kmh = 0.0;
  for (const auto* rows : {&table.payload_rows, &table.base_rows}) {
    for (const PerfRow& r : *rows) {
      if (!(r.endurance_s > 0.0)) throw ValidationError("calibrate: row endurance must be > 0");
      min_kmh = std::min(min_kmh, r.airspeed_kmh);
      max_kmh = std::max(max_kmh, r.airspeed_kmh);
    }
  }
  if (min_kmh > 0.0 || max_kmh < 18.0) {
    throw ValidationError("calibrate: rows must span hover to near-max speed");
  }
  if (!(anchors.total_hover_power_w > 0.0) || !(anchors.max_speed_ms > 0.0)) {
    throw ValidationError("calibrate: anchors need hover power and max speed");
  }

  FitProblem prob{table, anchors, seed};

  const Eigen::Vector4d lo(0.01, 1e-6, 0.3, 0.3);
  const Eigen::Vector4d hi(1.0, 1e-2, 1.0, 1.0);
  const Eigen::Vector4d scale(0.2, 1e-4, 0.7, 0.65);
  Eigen::Vector4d x = scale; // fixed initial guess

  // Levenberg-Marquardt with forward-difference Jacobian in scaled space.
  double lambda = 1e-3;
  Eigen::VectorXd r = prob.residuals(x);
  double cost = r.squaredNorm();
  for (int iter = 0; iter < 300; ++iter) {
    const long m = r.size();
    Eigen::MatrixXd jac(m, 4);
    for (int j = 0; j < 4; ++j) {
      const double h = 1e-7 * scale[j];
      Eigen::Vector4d xp = x;
      xp[j] += h;
      jac.col(j) = (prob.residuals(xp) - r) / h;
    }
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Eigen::Vector4d jtr = jac.transpose() * r;

    bool stepped = false;
    for (int attempt = 0; attempt < 30 && !stepped; ++attempt) {
      Eigen::Matrix4d a = jtj;
      for (int d = 0; d < 4; ++d) a(d, d) += lambda * std::max(jtj(d, d), 1e-12);
      const Eigen::Vector4d delta = a.ldlt().solve(-jtr);
      Eigen::Vector4d xn = x + delta;
      for (int d = 0; d < 4; ++d) xn[d] = std::clamp(xn[d], lo[d], hi[d]);
      const Eigen::VectorXd rn = prob.residuals(xn);
      const double cn = rn.squaredNorm();
      if (cn < cost) {
        const double step = ((xn - x).array() / scale.array()).matrix().norm();
        x = xn;
        r = rn;
        cost = cn;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        if (step < 1e-10) iter = 300; // converged
      } else {
        lambda *= 3.0;
      }
    }
    if (!stepped) break;
  }

  const auto errors = prob.row_errors(x);
  double sum_sq = 0.0;
  const std::pair<std::string, double>* worst = nullptr;
  for (const auto& e : errors) {
    sum_sq += e.second * e.second;
    if (!worst || std::abs(e.second) > std::abs(worst->second)) worst = &e;
  }
  const double rms = std::sqrt(sum_sq / static_cast<double>(errors.size()));
  if (rms > 0.15) {
    std::ostringstream msg;
    msg << "calibrate: fit residual " << rms * 100.0 << "% RMS exceeds 15%; worst row "
        << worst->first << " at " << worst->second * 100.0 << "%";
    throw CalibrationError(msg.str());
  }

  CalibrationResult out;
  out.vehicle = prob.configured(x).vehicle;
  out.usable_fraction = x[3];
  out.rms_relative_error = rms;
  return out;
}

} // namespace tracksim
