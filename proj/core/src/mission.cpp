#include "tracksim/mission.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tracksim/errors.hpp"

namespace tracksim {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::TraceEnd: return "trace_end";
    case Termination::BatteryCutoff: return "battery_cutoff";
    case Termination::LinkLost: return "link_lost";
  }
  return "unknown";
}

void validate_scenario(const Scenario& s) {
  validated(s.origin);
  if (!(s.standoff_altitude_m > 0.0)) {
    throw ValidationError("scenario: standoff_altitude_m must be > 0");
  }
  if (!(s.sim_dt_s > 0.0) || s.sim_dt_s > 0.5) {
    throw ValidationError("scenario: sim_dt_s must be in (0, 0.5]");
  }
  if (!(s.target_update_period_s > 0.0)) {
    throw ValidationError("scenario: target_update_period_s must be > 0");
  }
  if (s.target_latency_s < 0.0) {
    throw ValidationError("scenario: target_latency_s must be >= 0");
  }
  if (s.target_trace.size() < 2) {
    throw ValidationError("scenario: target trace needs at least 2 samples");
  }
  for (size_t i = 0; i < s.target_trace.size(); ++i) {
    validated(s.target_trace[i].point);
    if (i > 0 && !(s.target_trace[i].time_s > s.target_trace[i - 1].time_s)) {
      throw ValidationError("scenario: trace times not strictly increasing at sample " +
                            std::to_string(i));
    }
  }
  if (s.target_trace.back().time_s - s.target_trace.front().time_s < s.sim_dt_s) {
    throw ValidationError("scenario: trace shorter than one sim step");
  }
  if (s.vehicle.base_mass_kg <= 0.0 || s.vehicle.payload_mass_kg < 0.0) {
    throw ValidationError("scenario: vehicle masses invalid");
  }
  if (!(s.vehicle.max_speed > 0.0) || !(s.vehicle.max_tilt_rad > 0.0) ||
      s.vehicle.max_tilt_rad >= 0.5 * kPi || s.vehicle.rotor_count < 3) {
    throw ValidationError("scenario: vehicle limits invalid");
  }
  if (s.battery.cell_count < 1 || s.battery.capacity_mah <= 0.0 ||
      s.battery.usable_fraction <= 0.0 || s.battery.usable_fraction > 1.0) {
    throw ValidationError("scenario: battery parameters invalid");
  }
  bool has_gimbal_camera = false;
  for (const CameraModel& cam : s.cameras) {
    if (cam.mount == MountKind::GimbalDriven) has_gimbal_camera = true;
  }
  if (!has_gimbal_camera) {
    throw ValidationError("scenario: a gimbal-driven camera is required for tracking metrics");
  }
  for (const LinkModel& link : s.links) validate(link);
  validate(s.acoustic);
  if (!s.abort_policy.on_link_lost.empty()) {
    const bool known = std::any_of(s.links.begin(), s.links.end(), [&](const LinkModel& l) {
      return l.name == s.abort_policy.on_link_lost;
    });
    if (!known) {
      throw ValidationError("scenario: abort link '" + s.abort_policy.on_link_lost +
                            "' is not in the link list");
    }
  }
}

GeoPoint trace_at(const std::vector<TraceSample>& trace, double time_s) {
  if (trace.empty()) throw ValidationError("trace_at: empty trace");
  if (time_s <= trace.front().time_s) return trace.front().point;
  if (time_s >= trace.back().time_s) return trace.back().point;
  const auto it = std::upper_bound(
      trace.begin(), trace.end(), time_s,
      [](double t, const TraceSample& s) { return t < s.time_s; });
  const TraceSample& hi = *it;
  const TraceSample& lo = *(it - 1);
  const double a = (time_s - lo.time_s) / (hi.time_s - lo.time_s);
  GeoPoint p;
  p.latitude_deg = lo.point.latitude_deg + a * (hi.point.latitude_deg - lo.point.latitude_deg);
  p.longitude_deg = lo.point.longitude_deg + a * (hi.point.longitude_deg - lo.point.longitude_deg);
  p.altitude_m = lo.point.altitude_m + a * (hi.point.altitude_m - lo.point.altitude_m);
  return p;
}

MissionReport run_mission(const Scenario& scenario) {
  validate_scenario(scenario);

  const double dt = scenario.sim_dt_s;
  const double t0 = scenario.target_trace.front().time_s;
  const double trace_span = scenario.target_trace.back().time_s - t0;
  const long steps = static_cast<long>(std::floor(trace_span / dt + 1e-9));

  const CameraModel* gimbal_camera = nullptr;
  for (const CameraModel& cam : scenario.cameras) {
    if (cam.mount == MountKind::GimbalDriven) {
      gimbal_camera = &cam;
      break;
    }
  }

  VehicleState vehicle;
  const EnuVector start = geo_to_enu(scenario.origin, trace_at(scenario.target_trace, t0));
  vehicle.position = {start.east, start.north, scenario.standoff_altitude_m};
  GimbalState gimbal = scenario.gimbal;
  BatteryState battery = scenario.battery;

  MissionReport report;
  report.scenario_name = scenario.name;
  report.track.target_update_period_s = scenario.target_update_period_s;
  for (const LinkModel& link : scenario.links) {
    report.rssi_traces.emplace_back(link.name, std::vector<RssiSample>{});
  }
  report.spl_traces.resize(scenario.ground_listeners.size());

  TrackLog log;
  log.target_update_period_s = scenario.target_update_period_s;

  GeoPoint held_target = trace_at(scenario.target_trace, t0);
  long last_update = -1;

  Termination termination = Termination::TraceEnd;
  double duration = 0.0;

  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;       // mission time before the step
    const double t_next = static_cast<double>(k + 1) * dt;

    // zero-order-hold target: update u arrives at u*period + latency carrying
    // the trace position sampled at u*period
    const long update = static_cast<long>(
        std::floor((t - scenario.target_latency_s) / scenario.target_update_period_s + 1e-9));
    if (update > last_update && update >= 0) {
      held_target = trace_at(scenario.target_trace, t0 + update * scenario.target_update_period_s);
      last_update = update;
    }

    const TrackCommand cmd = track_step(held_target, vehicle, vehicle.heading_rad, scenario.origin,
                                        scenario.standoff_altitude_m);
    gimbal = step_gimbal(gimbal, cmd.gimbal_pan_rad, cmd.gimbal_tilt_rad, dt);
    vehicle = step_vehicle(vehicle, geo_to_enu(scenario.origin, cmd.waypoint), dt, scenario.vehicle);

    const double airspeed = vehicle.velocity.norm();
    const double power = electrical_power(airspeed, scenario.vehicle, battery.pack_voltage());
    bool battery_cutoff = false;
    if (!battery.depleted) {
      battery = step_battery(battery, power, dt);
      report.energy_dispensed_j += power * dt;
      if (battery.depleted && scenario.abort_policy.on_battery_cutoff) battery_cutoff = true;
    }

    duration = t_next;
    const GeoPoint target_now = trace_at(scenario.target_trace, t0 + t_next);
    const EnuVector target_enu = geo_to_enu(scenario.origin, target_now);

    const double distance = (vehicle.position - target_enu).horizontal_norm();
    report.distance_trace.push_back({t_next, distance});
    log.time_s.push_back(t_next);
    log.horizontal_distance_m.push_back(distance);

    VisibilityRecord rec = target_in_fov(*gimbal_camera, vehicle, gimbal, target_enu);
    rec.time_s = t_next;
    report.visibility_log.push_back(rec);
    log.gimbal_visibility.push_back(std::move(rec));

    report.battery_trace.push_back({t_next, battery.pack_voltage(), battery.state_of_charge});
    report.power_trace.push_back({t_next, power});

    const double station_range = vehicle.position.norm(); // ground station at the origin
    bool link_abort = false;
    for (size_t li = 0; li < scenario.links.size(); ++li) {
      const double rssi = rssi_at(scenario.links[li], station_range);
      const LinkState state = link_state(scenario.links[li], rssi);
      report.rssi_traces[li].second.push_back({t_next, rssi, state});
      if (state == LinkState::Lost &&
          scenario.links[li].name == scenario.abort_policy.on_link_lost) {
        link_abort = true;
      }
    }
    for (size_t gi = 0; gi < scenario.ground_listeners.size(); ++gi) {
      const double range = (vehicle.position - scenario.ground_listeners[gi]).norm();
      report.spl_traces[gi].push_back({t_next, spl_at(scenario.acoustic, range)});
    }

    if (battery_cutoff) {
      termination = Termination::BatteryCutoff;
      break;
    }
    if (link_abort) {
      termination = Termination::LinkLost;
      break;
    }
  }

  report.duration_s = duration;
  report.termination = termination;
  report.final_battery = battery;
  report.track = track_metrics(log);
  return report;
}

namespace {

// Deterministic path generator for the demo car trace: waypoint segments
// sampled at 1 Hz of travel time, then resampled onto an integer-second grid.
struct PathBuilder {
  std::vector<double> t;
  std::vector<double> east;
  std::vector<double> north;
  double cur_e, cur_n, cur_t = 0.0;

  PathBuilder(double e0, double n0) : cur_e(e0), cur_n(n0) {
    emit(0.0, e0, n0);
  }

  void emit(double time, double e, double n) {
    t.push_back(time);
    east.push_back(e);
    north.push_back(n);
  }

  template <typename F>
  void advance(F&& pos_at, double length, double speed) {
    double s = 0.0;
    while (s < length - 1e-9) {
      const double step = std::min(speed, length - s);
      s += step;
      cur_t += step / speed;
      const auto [e, n] = pos_at(s);
      cur_e = e;
      cur_n = n;
      emit(cur_t, e, n);
    }
  }

  void hold(double seconds) {
    for (int i = 0; i < static_cast<int>(seconds); ++i) {
      cur_t += 1.0;
      emit(cur_t, cur_e, cur_n);
    }
  }

  void line(double qe, double qn, double speed) {
    const double pe = cur_e, pn = cur_n;
    const double len = std::hypot(qe - pe, qn - pn);
    advance([=](double s) { return std::pair(pe + (qe - pe) * s / len, pn + (qn - pn) * s / len); },
            len, speed);
  }

  void arc(double ce, double cn, double radius, double sweep_rad, double speed) {
    const double a0 = std::atan2(cur_e - ce, cur_n - cn);
    const double start_e = ce + radius * std::sin(a0);
    const double start_n = cn + radius * std::cos(a0);
    if (std::hypot(start_e - cur_e, start_n - cur_n) > 1.0) {
      line(start_e, start_n, speed);
    }
    const double sgn = sweep_rad >= 0.0 ? 1.0 : -1.0;
    const double len = std::abs(sweep_rad) * radius;
    advance(
        [=](double s) {
          const double a = a0 + sgn * s / radius;
          return std::pair(ce + radius * std::sin(a), cn + radius * std::cos(a));
        },
        len, speed);
  }
};

} // namespace

std::vector<TraceSample> demo_target_trace(const GeoPoint& origin) {
  PathBuilder path(20.0, -10.0);
  path.hold(14.0);
  path.line(-45.0, 65.0, 5.0);
  path.arc(-20.0, 95.0, 42.0, 2.0 * kPi * 1.8, 4.5);  // first parking-lot loop
  path.line(300.0, 0.0, 7.5);                          // straightaway
  path.arc(330.0, 40.0, 38.0, -2.0 * kPi * 1.6, 5.0); // second loop, opposite turn
  path.line(25.0, -12.0, 6.0);                         // return leg
  path.hold(12.0);

  // resample onto an exact 1 Hz grid
  const long duration = static_cast<long>(std::floor(path.t.back()));
  std::vector<TraceSample> trace;
  trace.reserve(duration + 1);
  size_t j = 0;
  for (long k = 0; k <= duration; ++k) {
    const double tk = static_cast<double>(k);
    while (j + 1 < path.t.size() && path.t[j + 1] < tk) ++j;
    double e = path.east.back(), n = path.north.back();
    if (j + 1 < path.t.size()) {
      const double a = (tk - path.t[j]) / (path.t[j + 1] - path.t[j]);
      e = path.east[j] + a * (path.east[j + 1] - path.east[j]);
      n = path.north[j] + a * (path.north[j + 1] - path.north[j]);
    }
    trace.push_back({tk, enu_to_geo(origin, EnuVector{e, n, 0.0})});
  }
  return trace;
}

Scenario demo_scenario() {
  Scenario s;
  s.name = "demo_tracking";
  s.origin = {35.31389, -80.73175, 0.0};
  s.standoff_altitude_m = 55.0;
  s.vehicle.max_speed = 8.0;
  s.cameras = default_camera_suite();
  s.links = default_links();
  s.ground_listeners = {EnuVector{0.0, 0.0, 0.0}};
  s.target_trace = demo_target_trace(s.origin);
  return s;
}

} // namespace tracksim
