#include "tracksim/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <sstream>

#include "tracksim/errors.hpp"

namespace tracksim {

using nlohmann::json;

namespace {

double parse_double(const std::string& field, long line_no) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw IoError("trace line " + std::to_string(line_no) + ": bad number '" + field + "'");
  }
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

void fmt_g17(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

} // namespace

std::vector<TraceSample> load_target_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("trace: empty input");
  const auto header = split_csv(line);
  if (header.size() < 3 || header[0] != "time_s" || header[1] != "lat_deg" ||
      header[2] != "lon_deg" || (header.size() == 4 && header[3] != "alt_m") ||
      header.size() > 4) {
    throw IoError("trace: expected header time_s,lat_deg,lon_deg[,alt_m]");
  }
  const bool has_alt = header.size() == 4;

  std::vector<TraceSample> trace;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw IoError("trace line " + std::to_string(line_no) + ": expected " +
                    std::to_string(header.size()) + " fields, got " +
                    std::to_string(fields.size()));
    }
    TraceSample s;
    s.time_s = parse_double(fields[0], line_no);
    s.point.latitude_deg = parse_double(fields[1], line_no);
    s.point.longitude_deg = parse_double(fields[2], line_no);
    s.point.altitude_m = has_alt ? parse_double(fields[3], line_no) : 0.0;
    try {
      s.point = validated(s.point);
    } catch (const ValidationError& e) {
      throw ValidationError("trace line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!trace.empty() && !(s.time_s > trace.back().time_s)) {
      std::ostringstream msg;
      msg << "trace line " << line_no << ": time " << s.time_s
          << " does not increase past previous sample at " << trace.back().time_s;
      throw ValidationError(msg.str());
    }
    trace.push_back(s);
  }
  if (trace.empty()) throw IoError("trace: no data rows");
  return trace;
}

std::vector<TraceSample> load_target_trace(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw IoError("cannot open trace file: " + csv_path.string());
  try {
    return load_target_trace(in);
  } catch (const IoError& e) {
    throw IoError(csv_path.string() + ": " + e.what());
  }
}

void write_target_trace(const std::vector<TraceSample>& trace, std::ostream& out) {
  out << "time_s,lat_deg,lon_deg,alt_m\n";
  std::string line;
  for (const TraceSample& s : trace) {
    line.clear();
    fmt_g17(line, s.time_s);
    line += ',';
    fmt_g17(line, s.point.latitude_deg);
    line += ',';
    fmt_g17(line, s.point.longitude_deg);
    line += ',';
    fmt_g17(line, s.point.altitude_m);
    line += '\n';
    out << line;
  }
}

// ---------------------------------------------------------------------------
// JSON mappings

namespace {

json to_json(const GeoPoint& p) {
  return {{"lat_deg", p.latitude_deg}, {"lon_deg", p.longitude_deg}, {"alt_m", p.altitude_m}};
}

GeoPoint geo_from_json(const json& j, const GeoPoint& dflt) {
  GeoPoint p = dflt;
  p.latitude_deg = j.value("lat_deg", p.latitude_deg);
  p.longitude_deg = j.value("lon_deg", p.longitude_deg);
  p.altitude_m = j.value("alt_m", p.altitude_m);
  return p;
}

json to_json(const EnuVector& v) {
  return {{"east_m", v.east}, {"north_m", v.north}, {"up_m", v.up}};
}

EnuVector enu_from_json(const json& j) {
  return {j.value("east_m", 0.0), j.value("north_m", 0.0), j.value("up_m", 0.0)};
}

json to_json(const VehicleParams& p) {
  return {{"base_mass_kg", p.base_mass_kg},
          {"payload_mass_kg", p.payload_mass_kg},
          {"max_speed_ms", p.max_speed},
          {"max_tilt_deg", p.max_tilt_rad * kRad2Deg},
          {"max_accel_ms2", p.max_accel},
          {"rotor_count", p.rotor_count},
          {"prop_diameter_m", p.prop_diameter_m},
          {"avionics_current_a", p.avionics_current_a},
          {"max_thrust_per_rotor_n", p.max_thrust_per_rotor_n},
          {"drag_area_m2", p.drag_area_m2},
          {"profile_power_coeff", p.profile_power_coeff},
          {"figure_of_merit", p.figure_of_merit},
          {"pursuit_gain", p.pursuit_gain},
          {"velocity_tau_s", p.velocity_tau_s},
          {"yaw_rate_limit_deg_s", p.yaw_rate_limit * kRad2Deg},
          {"max_vertical_speed_ms", p.max_vertical_speed}};
}

VehicleParams vehicle_from_json(const json& j, VehicleParams p) {
  p.base_mass_kg = j.value("base_mass_kg", p.base_mass_kg);
  p.payload_mass_kg = j.value("payload_mass_kg", p.payload_mass_kg);
  p.max_speed = j.value("max_speed_ms", p.max_speed);
  p.max_tilt_rad = j.value("max_tilt_deg", p.max_tilt_rad * kRad2Deg) * kDeg2Rad;
  p.max_accel = j.value("max_accel_ms2", p.max_accel);
  p.rotor_count = j.value("rotor_count", p.rotor_count);
  p.prop_diameter_m = j.value("prop_diameter_m", p.prop_diameter_m);
  p.avionics_current_a = j.value("avionics_current_a", p.avionics_current_a);
  p.max_thrust_per_rotor_n = j.value("max_thrust_per_rotor_n", p.max_thrust_per_rotor_n);
  p.drag_area_m2 = j.value("drag_area_m2", p.drag_area_m2);
  p.profile_power_coeff = j.value("profile_power_coeff", p.profile_power_coeff);
  p.figure_of_merit = j.value("figure_of_merit", p.figure_of_merit);
  p.pursuit_gain = j.value("pursuit_gain", p.pursuit_gain);
  p.velocity_tau_s = j.value("velocity_tau_s", p.velocity_tau_s);
  p.yaw_rate_limit = j.value("yaw_rate_limit_deg_s", p.yaw_rate_limit * kRad2Deg) * kDeg2Rad;
  p.max_vertical_speed = j.value("max_vertical_speed_ms", p.max_vertical_speed);
  return p;
}

json to_json(const BatteryState& b) {
  return {{"cell_count", b.cell_count},
          {"capacity_mah", b.capacity_mah},
          {"usable_fraction", b.usable_fraction},
          {"state_of_charge", b.state_of_charge},
          {"internal_resistance_ohm", b.internal_resistance_ohm},
          {"cutoff_voltage_per_cell", b.cutoff_voltage_per_cell}};
}

BatteryState battery_from_json(const json& j, BatteryState b) {
  b.cell_count = j.value("cell_count", b.cell_count);
  b.capacity_mah = j.value("capacity_mah", b.capacity_mah);
  b.usable_fraction = j.value("usable_fraction", b.usable_fraction);
  b.state_of_charge = j.value("state_of_charge", b.state_of_charge);
  b.internal_resistance_ohm = j.value("internal_resistance_ohm", b.internal_resistance_ohm);
  b.cutoff_voltage_per_cell = j.value("cutoff_voltage_per_cell", b.cutoff_voltage_per_cell);
  return b;
}

json to_json(const GimbalState& g) {
  return {{"pan_deg", g.pan_rad * kRad2Deg},
          {"tilt_deg", g.tilt_rad * kRad2Deg},
          {"pan_rate_limit_deg_s", g.pan_rate_limit * kRad2Deg},
          {"tilt_rate_limit_deg_s", g.tilt_rate_limit * kRad2Deg},
          {"pan_min_deg", g.pan_min * kRad2Deg},
          {"pan_max_deg", g.pan_max * kRad2Deg},
          {"tilt_min_deg", g.tilt_min * kRad2Deg},
          {"tilt_max_deg", g.tilt_max * kRad2Deg}};
}

GimbalState gimbal_from_json(const json& j, GimbalState g) {
  auto deg = [&](const char* key, double cur) { return j.value(key, cur * kRad2Deg) * kDeg2Rad; };
  g.pan_rad = deg("pan_deg", g.pan_rad);
  g.tilt_rad = deg("tilt_deg", g.tilt_rad);
  g.pan_rate_limit = deg("pan_rate_limit_deg_s", g.pan_rate_limit);
  g.tilt_rate_limit = deg("tilt_rate_limit_deg_s", g.tilt_rate_limit);
  g.pan_min = deg("pan_min_deg", g.pan_min);
  g.pan_max = deg("pan_max_deg", g.pan_max);
  g.tilt_min = deg("tilt_min_deg", g.tilt_min);
  g.tilt_max = deg("tilt_max_deg", g.tilt_max);
  return g;
}

json to_json(const CameraModel& c) {
  return {{"name", c.name},
          {"mount", c.mount == MountKind::GimbalDriven ? "gimbal" : "fixed"},
          {"offset", {{"forward_m", c.offset.forward_m},
                      {"right_m", c.offset.right_m},
                      {"up_m", c.offset.up_m}}},
          {"mount_yaw_deg", c.mount_yaw_rad * kRad2Deg},
          {"mount_pitch_deg", c.mount_pitch_rad * kRad2Deg},
          {"hfov_deg", c.hfov_rad * kRad2Deg},
          {"vfov_deg", c.vfov_rad * kRad2Deg}};
}

CameraModel camera_from_json(const json& j) {
  CameraModel c;
  c.name = j.value("name", std::string("camera"));
  c.mount = j.value("mount", std::string("fixed")) == "gimbal" ? MountKind::GimbalDriven
                                                               : MountKind::Fixed;
  if (j.contains("offset")) {
    const json& o = j.at("offset");
    c.offset.forward_m = o.value("forward_m", 0.0);
    c.offset.right_m = o.value("right_m", 0.0);
    c.offset.up_m = o.value("up_m", 0.0);
  }
  c.mount_yaw_rad = j.value("mount_yaw_deg", 0.0) * kDeg2Rad;
  c.mount_pitch_rad = j.value("mount_pitch_deg", 0.0) * kDeg2Rad;
  c.hfov_rad = j.value("hfov_deg", 40.0) * kDeg2Rad;
  c.vfov_rad = j.value("vfov_deg", 25.0) * kDeg2Rad;
  return c;
}

json to_json(const LinkModel& l) {
  return {{"name", l.name},
          {"reference_rssi_dbm", l.reference_rssi_dbm},
          {"path_loss_exponent", l.path_loss_exponent},
          {"loss_threshold_dbm", l.loss_threshold_dbm},
          {"degraded_threshold_dbm", l.degraded_threshold_dbm}};
}

LinkModel link_from_json(const json& j) {
  LinkModel l;
  l.name = j.value("name", std::string("link"));
  l.reference_rssi_dbm = j.value("reference_rssi_dbm", l.reference_rssi_dbm);
  l.path_loss_exponent = j.value("path_loss_exponent", l.path_loss_exponent);
  l.loss_threshold_dbm = j.value("loss_threshold_dbm", l.loss_threshold_dbm);
  l.degraded_threshold_dbm = j.value("degraded_threshold_dbm", l.degraded_threshold_dbm);
  return l;
}

json to_json(const AcousticModel& a) {
  return {{"rotor_count", a.rotor_count},
          {"blades_per_rotor", a.blades_per_rotor},
          {"rpm", a.rpm},
          {"source_spl_db", a.source_spl_db},
          {"harmonics", a.harmonics},
          {"harmonic_rolloff_db", a.harmonic_rolloff_db}};
}

AcousticModel acoustic_from_json(const json& j, AcousticModel a) {
  a.rotor_count = j.value("rotor_count", a.rotor_count);
  a.blades_per_rotor = j.value("blades_per_rotor", a.blades_per_rotor);
  a.rpm = j.value("rpm", a.rpm);
  a.source_spl_db = j.value("source_spl_db", a.source_spl_db);
  a.harmonics = j.value("harmonics", a.harmonics);
  a.harmonic_rolloff_db = j.value("harmonic_rolloff_db", a.harmonic_rolloff_db);
  return a;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

} // namespace

Scenario load_scenario(const std::filesystem::path& json_path) {
  const json j = parse_file(json_path);
  Scenario s; // field defaults; demo values only where the file stays silent
  s.cameras = default_camera_suite();
  s.links = default_links();
  s.ground_listeners = {EnuVector{0.0, 0.0, 0.0}};

  s.name = j.value("name", s.name);
  if (j.contains("origin")) s.origin = geo_from_json(j.at("origin"), s.origin);
  s.standoff_altitude_m = j.value("standoff_altitude_m", s.standoff_altitude_m);
  s.sim_dt_s = j.value("sim_dt_s", s.sim_dt_s);
  s.target_update_period_s = j.value("target_update_period_s", s.target_update_period_s);
  s.target_latency_s = j.value("target_latency_s", s.target_latency_s);
  if (j.contains("vehicle")) s.vehicle = vehicle_from_json(j.at("vehicle"), s.vehicle);
  if (j.contains("battery")) s.battery = battery_from_json(j.at("battery"), s.battery);
  if (j.contains("gimbal")) s.gimbal = gimbal_from_json(j.at("gimbal"), s.gimbal);
  if (j.contains("cameras")) {
    s.cameras.clear();
    for (const json& cj : j.at("cameras")) s.cameras.push_back(camera_from_json(cj));
  }
  if (j.contains("links")) {
    s.links.clear();
    for (const json& lj : j.at("links")) s.links.push_back(link_from_json(lj));
  }
  if (j.contains("acoustic")) s.acoustic = acoustic_from_json(j.at("acoustic"), s.acoustic);
  if (j.contains("ground_listeners")) {
    s.ground_listeners.clear();
    for (const json& gj : j.at("ground_listeners")) s.ground_listeners.push_back(enu_from_json(gj));
  }
  if (j.contains("abort_policy")) {
    const json& a = j.at("abort_policy");
    s.abort_policy.on_battery_cutoff = a.value("on_battery_cutoff", true);
    s.abort_policy.on_link_lost = a.value("on_link_lost", std::string());
  }
  if (j.contains("target_trace_csv")) {
    const std::filesystem::path rel = j.at("target_trace_csv").get<std::string>();
    const std::filesystem::path csv =
        rel.is_absolute() ? rel : json_path.parent_path() / rel;
    s.target_trace = load_target_trace(csv);
  } else {
    throw ValidationError("scenario file " + json_path.string() + ": target_trace_csv missing");
  }
  return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& json_path,
                   const std::string& trace_csv_name) {
  json j;
  j["schema_version"] = kScenarioSchemaVersion;
  j["name"] = s.name;
  j["origin"] = to_json(s.origin);
  j["standoff_altitude_m"] = s.standoff_altitude_m;
  j["sim_dt_s"] = s.sim_dt_s;
  j["target_update_period_s"] = s.target_update_period_s;
  j["target_latency_s"] = s.target_latency_s;
  j["vehicle"] = to_json(s.vehicle);
  j["battery"] = to_json(s.battery);
  j["gimbal"] = to_json(s.gimbal);
  j["cameras"] = json::array();
  for (const CameraModel& c : s.cameras) j["cameras"].push_back(to_json(c));
  j["links"] = json::array();
  for (const LinkModel& l : s.links) j["links"].push_back(to_json(l));
  j["acoustic"] = to_json(s.acoustic);
  j["ground_listeners"] = json::array();
  for (const EnuVector& g : s.ground_listeners) j["ground_listeners"].push_back(to_json(g));
  j["abort_policy"] = {{"on_battery_cutoff", s.abort_policy.on_battery_cutoff},
                       {"on_link_lost", s.abort_policy.on_link_lost}};
  j["target_trace_csv"] = trace_csv_name;

  std::ofstream out(json_path);
  if (!out) throw IoError("cannot write scenario file: " + json_path.string());
  out << j.dump(2) << "\n";

  std::ofstream csv(json_path.parent_path() / trace_csv_name);
  if (!csv) {
    throw IoError("cannot write trace file: " +
                  (json_path.parent_path() / trace_csv_name).string());
  }
  write_target_trace(s.target_trace, csv);
}

PerfConfig load_perf_config(const std::filesystem::path& json_path) {
  const json j = parse_file(json_path);
  PerfConfig c;
  if (j.contains("vehicle")) c.vehicle = vehicle_from_json(j.at("vehicle"), c.vehicle);
  if (j.contains("battery")) c.battery = battery_from_json(j.at("battery"), c.battery);
  c.payload_attached = j.value("payload_attached", c.payload_attached);
  return c;
}

void save_perf_config(const PerfConfig& c, const std::filesystem::path& json_path) {
  json j;
  j["schema_version"] = kScenarioSchemaVersion;
  j["vehicle"] = to_json(c.vehicle);
  j["battery"] = to_json(c.battery);
  j["payload_attached"] = c.payload_attached;
  std::ofstream out(json_path);
  if (!out) throw IoError("cannot write config file: " + json_path.string());
  out << j.dump(2) << "\n";
}

CalibrationFixtures load_calibration_fixtures(const std::filesystem::path& json_path) {
  const json j = parse_file(json_path);
  CalibrationFixtures fx;
  auto read_rows = [](const json& arr) {
    std::vector<PerfRow> rows;
    for (const json& rj : arr) {
      PerfRow r;
      r.airspeed_kmh = rj.at("airspeed_kmh").get<double>();
      r.endurance_s = rj.at("endurance_s").get<double>();
      r.range_m = rj.value("range_m", 0.0);
      rows.push_back(r);
    }
    return rows;
  };
  if (j.contains("payload_rows")) fx.table.payload_rows = read_rows(j.at("payload_rows"));
  if (j.contains("base_rows")) fx.table.base_rows = read_rows(j.at("base_rows"));
  if (j.contains("anchors")) {
    const json& a = j.at("anchors");
    fx.anchors.total_hover_power_w = a.value("total_hover_power_w", 0.0);
    fx.anchors.max_speed_ms = a.value("max_speed_ms", 0.0);
    fx.anchors.hover_time_s = a.value("hover_time_s", 0.0);
    fx.anchors.thrust_weight_ratio = a.value("thrust_weight_ratio", 0.0);
    fx.anchors.hover_throttle = a.value("hover_throttle", 0.0);
    fx.anchors.specific_thrust_g_per_w = a.value("specific_thrust_g_per_w", 0.0);
    fx.anchors.per_motor_current_a = a.value("per_motor_current_a", 0.0);
    fx.anchors.max_climb_rate_ms = a.value("max_climb_rate_ms", 0.0);
  }
  return fx;
}

// ---------------------------------------------------------------------------
// Report output

ReportSummary summarize(const MissionReport& r) {
  ReportSummary s;
  s.scenario_name = r.scenario_name;
  s.duration_s = r.duration_s;
  s.termination = to_string(r.termination);
  s.max_horizontal_distance_m = r.track.max_horizontal_distance_m;
  s.mean_horizontal_distance_m = r.track.mean_horizontal_distance_m;
  s.in_frame_fraction = r.track.in_frame_fraction;
  s.target_update_period_s = r.track.target_update_period_s;
  s.energy_dispensed_j = r.energy_dispensed_j;
  s.final_soc = r.final_battery.state_of_charge;
  s.final_voltage_v = r.final_battery.pack_voltage();
  s.sample_count = static_cast<long>(r.distance_trace.size());
  return s;
}

void write_report(const MissionReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create report directory: " + dir.string());

  const ReportSummary s = summarize(report);
  json j;
  j["schema_version"] = s.schema_version;
  j["scenario_name"] = s.scenario_name;
  j["duration_s"] = s.duration_s;
  j["termination"] = s.termination;
  j["track"] = {{"max_horizontal_distance_m", s.max_horizontal_distance_m},
                {"mean_horizontal_distance_m", s.mean_horizontal_distance_m},
                {"in_frame_fraction", s.in_frame_fraction},
                {"target_update_period_s", s.target_update_period_s}};
  j["energy_dispensed_j"] = s.energy_dispensed_j;
  j["final_battery"] = {{"state_of_charge", s.final_soc}, {"voltage_v", s.final_voltage_v}};
  j["sample_count"] = s.sample_count;

  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw IoError("cannot write report file: " + (dir / name).string());
    return out;
  };

  {
    auto out = open("report.json");
    out << j.dump(2) << "\n";
  }
  {
    auto out = open("distance.csv");
    out << "time_s,distance_m\n";
    std::string line;
    for (const DistanceSample& d : report.distance_trace) {
      line.clear();
      fmt_g17(line, d.time_s);
      line += ',';
      fmt_g17(line, d.distance_m);
      line += '\n';
      out << line;
    }
  }
  {
    auto out = open("battery.csv");
    out << "time_s,voltage_v,soc\n";
    std::string line;
    for (const BatterySample& b : report.battery_trace) {
      line.clear();
      fmt_g17(line, b.time_s);
      line += ',';
      fmt_g17(line, b.voltage_v);
      line += ',';
      fmt_g17(line, b.soc);
      line += '\n';
      out << line;
    }
  }
  {
    auto out = open("power.csv");
    out << "time_s,power_w\n";
    std::string line;
    for (const PowerSample& p : report.power_trace) {
      line.clear();
      fmt_g17(line, p.time_s);
      line += ',';
      fmt_g17(line, p.power_w);
      line += '\n';
      out << line;
    }
  }
  {
    auto out = open("visibility.csv");
    out << "time_s,camera,visible,offset_rad\n";
    std::string line;
    for (const VisibilityRecord& v : report.visibility_log) {
      line.clear();
      fmt_g17(line, v.time_s);
      line += ',';
      line += v.camera;
      line += ',';
      line += v.target_visible ? '1' : '0';
      line += ',';
      fmt_g17(line, v.boresight_offset_rad);
      line += '\n';
      out << line;
    }
  }
  {
    auto out = open("rssi.csv");
    out << "time_s,link,rssi_dbm,state\n";
    std::string line;
    for (const auto& [link, samples] : report.rssi_traces) {
      for (const RssiSample& r : samples) {
        line.clear();
        fmt_g17(line, r.time_s);
        line += ',';
        line += link;
        line += ',';
        fmt_g17(line, r.rssi_dbm);
        line += ',';
        line += to_string(r.state);
        line += '\n';
        out << line;
      }
    }
  }
  {
    auto out = open("spl.csv");
    out << "time_s,listener,spl_db\n";
    std::string line;
    for (size_t li = 0; li < report.spl_traces.size(); ++li) {
      for (const SplSample& sp : report.spl_traces[li]) {
        line.clear();
        fmt_g17(line, sp.time_s);
        line += ',';
        line += std::to_string(li);
        line += ',';
        fmt_g17(line, sp.spl_db);
        line += '\n';
        out << line;
      }
    }
  }
}

ReportSummary read_report_summary(const std::filesystem::path& json_path) {
  const json j = parse_file(json_path);
  ReportSummary s;
  s.schema_version = j.value("schema_version", 0);
  s.scenario_name = j.value("scenario_name", std::string());
  s.duration_s = j.value("duration_s", 0.0);
  s.termination = j.value("termination", std::string());
  if (j.contains("track")) {
    const json& t = j.at("track");
    s.max_horizontal_distance_m = t.value("max_horizontal_distance_m", 0.0);
    s.mean_horizontal_distance_m = t.value("mean_horizontal_distance_m", 0.0);
    s.in_frame_fraction = t.value("in_frame_fraction", 0.0);
    s.target_update_period_s = t.value("target_update_period_s", 0.0);
  }
  s.energy_dispensed_j = j.value("energy_dispensed_j", 0.0);
  if (j.contains("final_battery")) {
    s.final_soc = j.at("final_battery").value("state_of_charge", 0.0);
    s.final_voltage_v = j.at("final_battery").value("voltage_v", 0.0);
  }
  s.sample_count = j.value("sample_count", 0L);
  return s;
}

} // namespace tracksim
