#include "tracksim/track.hpp"

#include <algorithm>
#include <cmath>

#include "tracksim/errors.hpp"

namespace tracksim {

GeoPoint follow_waypoint(const GeoPoint& target, double standoff_altitude_m) {
  if (!(standoff_altitude_m > 0.0)) {
    throw ValidationError("follow_waypoint: standoff altitude must be > 0");
  }
  GeoPoint wp = validated(target);
  wp.altitude_m = standoff_altitude_m;
  return wp;
}

void gimbal_pointing(const VehicleState& vehicle, double vehicle_heading_rad,
                     const EnuVector& target, double& pan_rad, double& tilt_rad) {
  const EnuVector rel = target - vehicle.position;
  const double horiz = rel.horizontal_norm();
  if (rel.norm() < 1e-9) {
    throw ValidationError("gimbal_pointing: target coincides with vehicle position");
  }
  if (horiz < 1e-9) {
    pan_rad = 0.0; // directly above/below: pan is arbitrary, use the nose
    tilt_rad = rel.up >= 0.0 ? 0.5 * kPi : -0.5 * kPi;
    return;
  }
  tilt_rad = std::atan2(rel.up, horiz);
  pan_rad = wrap_pi(std::atan2(rel.east, rel.north) - vehicle_heading_rad);
}

TrackCommand track_step(const GeoPoint& target, const VehicleState& vehicle,
                        double vehicle_heading_rad, const GeoPoint& origin,
                        double standoff_altitude_m) {
  TrackCommand cmd;
  cmd.waypoint = follow_waypoint(target, standoff_altitude_m);
  const EnuVector target_enu = geo_to_enu(origin, target);
  gimbal_pointing(vehicle, vehicle_heading_rad, target_enu, cmd.gimbal_pan_rad,
                  cmd.gimbal_tilt_rad);
  return cmd;
}

TrackReport track_metrics(const TrackLog& log) {
  if (log.time_s.empty() || log.time_s.size() != log.horizontal_distance_m.size()) {
    throw ValidationError("track_metrics: empty or inconsistent log");
  }
  TrackReport rep;
  rep.duration_s = log.time_s.back();
  rep.target_update_period_s = log.target_update_period_s;
  double sum = 0.0;
  for (double d : log.horizontal_distance_m) {
    sum += d;
    rep.max_horizontal_distance_m = std::max(rep.max_horizontal_distance_m, d);
  }
  rep.mean_horizontal_distance_m = sum / static_cast<double>(log.horizontal_distance_m.size());
  if (!log.gimbal_visibility.empty()) {
    long visible = 0;
    for (const VisibilityRecord& rec : log.gimbal_visibility) {
      if (rec.target_visible) ++visible;
    }
    rep.in_frame_fraction =
        static_cast<double>(visible) / static_cast<double>(log.gimbal_visibility.size());
  }
  return rep;
}

} // namespace tracksim
