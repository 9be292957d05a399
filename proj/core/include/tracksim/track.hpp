#ifndef TRACKSIM_TRACK_HPP
#define TRACKSIM_TRACK_HPP

#include <vector>

#include "tracksim/airframe.hpp"
#include "tracksim/geo.hpp"
#include "tracksim/sensors.hpp"

namespace tracksim {

/// One tracking command: where the vehicle should fly and where the gimbal
/// should point, both derived from the latest target coordinate.
struct TrackCommand {
  GeoPoint waypoint;        // target lat/lon at the standoff altitude
  double gimbal_pan_rad = 0.0;  // body-relative
  double gimbal_tilt_rad = 0.0;
};

struct TrackReport {
  double duration_s = 0.0;
  double max_horizontal_distance_m = 0.0;
  double mean_horizontal_distance_m = 0.0;
  double in_frame_fraction = 0.0;
  double target_update_period_s = 0.0;
};

/// Hold-directly-overhead policy: the waypoint is the target coordinate at
/// the standoff altitude. standoff_altitude must be > 0.
GeoPoint follow_waypoint(const GeoPoint& target, double standoff_altitude_m);

/// Pan/tilt that place the target on the camera boresight:
/// tilt = atan2(dup, horizontal range), pan = bearing-to-target minus the
/// vehicle heading, wrapped to (-pi, pi]. A target directly below maps to
/// (pan 0, tilt -pi/2); a coincident target throws.
void gimbal_pointing(const VehicleState& vehicle, double vehicle_heading_rad,
                     const EnuVector& target, double& pan_rad, double& tilt_rad);

/// Compose follow_waypoint and gimbal_pointing into one command. Pure.
TrackCommand track_step(const GeoPoint& target, const VehicleState& vehicle,
                        double vehicle_heading_rad, const GeoPoint& origin,
                        double standoff_altitude_m);

/// Samples of the mission time series that feed the report.
struct TrackLog {
  std::vector<double> time_s;
  std::vector<double> horizontal_distance_m;
  std::vector<VisibilityRecord> gimbal_visibility;
  double target_update_period_s = 0.0;
};

/// Aggregate distances and gimbal-camera visibility into a TrackReport.
/// Throws on an empty log.
TrackReport track_metrics(const TrackLog& log);

} // namespace tracksim

#endif // TRACKSIM_TRACK_HPP
