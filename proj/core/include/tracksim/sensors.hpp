#ifndef TRACKSIM_SENSORS_HPP
#define TRACKSIM_SENSORS_HPP

#include <string>
#include <vector>

#include "tracksim/airframe.hpp"
#include "tracksim/geo.hpp"

namespace tracksim {

/// Offset from the vehicle reference point, in the body frame.
struct BodyOffset {
  double forward_m = 0.0;
  double right_m = 0.0;
  double up_m = 0.0;
};

enum class MountKind { Fixed, GimbalDriven };

/// Field-of-view model for one camera: a closed azimuth/elevation window
/// around the boresight (a ray exactly on the edge counts as visible).
/// Fixed mounts point at (mount_yaw, mount_pitch) relative to the body;
/// gimbal-driven cameras follow the gimbal pan/tilt.
struct CameraModel {
  std::string name;
  MountKind mount = MountKind::Fixed;
  BodyOffset offset;
  double mount_yaw_rad = 0.0;
  double mount_pitch_rad = 0.0;
  double hfov_rad = 40.0 * kDeg2Rad;
  double vfov_rad = 25.0 * kDeg2Rad;
};

/// Two identical cameras with a shared pointing direction and a fixed
/// horizontal separation. The baseline only affects camera positions; at
/// mission ranges both eyes share one visibility outcome.
struct FisheyePair {
  CameraModel left;
  CameraModel right;
  double baseline_m = 0.12;
};

/// Build a fisheye stereo pair (200 x 150 degree windows by default)
/// mounted at the given body yaw/pitch.
FisheyePair make_fisheye_pair(const std::string& name_prefix, double mount_yaw_rad,
                              double mount_pitch_rad, double baseline_m = 0.12,
                              double hfov_rad = 200.0 * kDeg2Rad,
                              double vfov_rad = 150.0 * kDeg2Rad);

/// The five-camera suite: front and rear fisheye pairs inclined 15 degrees
/// down, plus the gimbal-driven tracking camera ("gimbal", 40 x 25 degrees).
std::vector<CameraModel> default_camera_suite();

struct VisibilityRecord {
  double time_s = 0.0;
  std::string camera;
  bool target_visible = false;
  double boresight_offset_rad = 0.0;
};

/// Visibility of a target point from one camera given the vehicle pose and
/// gimbal state. Throws when the target coincides with the camera position.
VisibilityRecord target_in_fov(const CameraModel& camera, const VehicleState& vehicle,
                               const GimbalState& gimbal, const EnuVector& target);

struct CoverageResult {
  double fraction = 0.0;
  std::vector<EnuVector> blind_directions; // unit vectors, world frame
};

/// Fraction of a Fibonacci-lattice direction sample (quasi-uniform on the
/// sphere, grid_n >= 1000) visible to at least one camera, treating
/// directions at infinity (mount offsets ignored). Gimbal-driven cameras
/// are evaluated at the supplied gimbal state (boresight on the nose by
/// default).
CoverageResult coverage_map(const VehicleState& vehicle, const std::vector<CameraModel>& cameras,
                            int grid_n, const GimbalState& gimbal = {});

struct PoseSample {
  double time_s = 0.0;
  VehicleState vehicle;
  GimbalState gimbal;
};

/// One record per (pose, camera, landmark), ordered by time, then camera,
/// then landmark index.
std::vector<VisibilityRecord> landmark_visibility(const std::vector<PoseSample>& trajectory,
                                                  const std::vector<EnuVector>& landmarks,
                                                  const std::vector<CameraModel>& cameras);

/// Visible-record share for the named camera, in [0, 1]. Throws when the
/// log holds no records for that camera.
double in_frame_fraction(const std::vector<VisibilityRecord>& records, const std::string& camera);

} // namespace tracksim

#endif // TRACKSIM_SENSORS_HPP
