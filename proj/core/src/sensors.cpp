#include "tracksim/sensors.hpp"

#include <cmath>

#include "tracksim/errors.hpp"

namespace tracksim {

namespace {

struct Triad {
  EnuVector boresight;
  EnuVector right;
  EnuVector up;
};

EnuVector azel_unit(double az, double el) {
  return {std::sin(az) * std::cos(el), std::cos(az) * std::cos(el), std::sin(el)};
}

double dot(const EnuVector& a, const EnuVector& b) {
  return a.east * b.east + a.north * b.north + a.up * b.up;
}

// World-frame camera basis from its azimuth (clockwise from north) and
// elevation. `right` stays horizontal; pan-then-tilt mount order.
Triad camera_triad(double az, double el) {
  Triad t;
  t.boresight = azel_unit(az, el);
  t.right = {std::cos(az), -std::sin(az), 0.0};
  // up = right x boresight
  t.up = {t.right.north * t.boresight.up - t.right.up * t.boresight.north,
          t.right.up * t.boresight.east - t.right.east * t.boresight.up,
          t.right.east * t.boresight.north - t.right.north * t.boresight.east};
  return t;
}

void camera_pointing(const CameraModel& cam, const VehicleState& vehicle,
                     const GimbalState& gimbal, double& az, double& el) {
  if (cam.mount == MountKind::GimbalDriven) {
    az = vehicle.heading_rad + gimbal.pan_rad;
    el = gimbal.tilt_rad;
  } else {
    az = vehicle.heading_rad + cam.mount_yaw_rad;
    el = cam.mount_pitch_rad;
  }
}

void validate_fov(const CameraModel& cam) {
  if (!(cam.hfov_rad > 0.0) || cam.hfov_rad > 2.0 * kPi) {
    throw ValidationError("camera '" + cam.name + "': hfov out of (0, 2*pi]");
  }
  if (!(cam.vfov_rad > 0.0) || cam.vfov_rad > kPi) {
    throw ValidationError("camera '" + cam.name + "': vfov out of (0, pi]");
  }
}

constexpr double kBoundaryEps = 1e-12; // closed FOV edge, robust to rounding

bool direction_in_window(const Triad& t, const EnuVector& dir, double hfov, double vfov,
                         double& offset) {
  const double x = dot(dir, t.boresight);
  const double y = dot(dir, t.right);
  const double z = dot(dir, t.up);
  const double az = std::atan2(y, x);
  const double el = std::atan2(z, std::hypot(x, y));
  offset = std::atan2(std::hypot(y, z), x); // always >= 0
  return std::abs(az) <= 0.5 * hfov + kBoundaryEps && std::abs(el) <= 0.5 * vfov + kBoundaryEps;
}

} // namespace

FisheyePair make_fisheye_pair(const std::string& name_prefix, double mount_yaw_rad,
                              double mount_pitch_rad, double baseline_m, double hfov_rad,
                              double vfov_rad) {
  if (hfov_rad > 200.0 * kDeg2Rad) {
    throw ValidationError("fisheye hfov exceeds the 200 degree lens window");
  }
  FisheyePair pair;
  pair.baseline_m = baseline_m;
  CameraModel cam;
  cam.mount = MountKind::Fixed;
  cam.mount_yaw_rad = mount_yaw_rad;
  cam.mount_pitch_rad = mount_pitch_rad;
  cam.hfov_rad = hfov_rad;
  cam.vfov_rad = vfov_rad;

  cam.name = name_prefix + "_left";
  cam.offset = {0.0, -0.5 * baseline_m, 0.0};
  pair.left = cam;
  cam.name = name_prefix + "_right";
  cam.offset = {0.0, 0.5 * baseline_m, 0.0};
  pair.right = cam;
  return pair;
}

std::vector<CameraModel> default_camera_suite() {
  std::vector<CameraModel> cams;
  const FisheyePair front = make_fisheye_pair("fisheye_front", 0.0, -15.0 * kDeg2Rad);
  const FisheyePair rear = make_fisheye_pair("fisheye_rear", kPi, -15.0 * kDeg2Rad);
  cams.push_back(front.left);
  cams.push_back(front.right);
  cams.push_back(rear.left);
  cams.push_back(rear.right);
  CameraModel gim;
  gim.name = "gimbal";
  gim.mount = MountKind::GimbalDriven;
  gim.hfov_rad = 40.0 * kDeg2Rad;
  gim.vfov_rad = 25.0 * kDeg2Rad;
  cams.push_back(gim);
  return cams;
}

VisibilityRecord target_in_fov(const CameraModel& camera, const VehicleState& vehicle,
                               const GimbalState& gimbal, const EnuVector& target) {
  validate_fov(camera);
  const double ch = std::cos(vehicle.heading_rad);
  const double sh = std::sin(vehicle.heading_rad);
  const EnuVector cam_pos = {
      vehicle.position.east + camera.offset.forward_m * sh + camera.offset.right_m * ch,
      vehicle.position.north + camera.offset.forward_m * ch - camera.offset.right_m * sh,
      vehicle.position.up + camera.offset.up_m};
  EnuVector rel = target - cam_pos;
  const double dist = rel.norm();
  if (dist < 1e-9) {
    throw ValidationError("target_in_fov: target coincides with camera position");
  }
  rel = rel * (1.0 / dist);

  double az = 0.0, el = 0.0;
  camera_pointing(camera, vehicle, gimbal, az, el);
  const Triad t = camera_triad(az, el);

  VisibilityRecord rec;
  rec.camera = camera.name;
  rec.target_visible = direction_in_window(t, rel, camera.hfov_rad, camera.vfov_rad,
                                           rec.boresight_offset_rad);
  return rec;
}

CoverageResult coverage_map(const VehicleState& vehicle, const std::vector<CameraModel>& cameras,
                            int grid_n, const GimbalState& gimbal) {
  if (grid_n < 1000) {
    throw ValidationError("coverage_map: need at least 1000 sample directions");
  }
  for (const CameraModel& cam : cameras) validate_fov(cam);

  std::vector<Triad> triads;
  triads.reserve(cameras.size());
  for (const CameraModel& cam : cameras) {
    double az = 0.0, el = 0.0;
    camera_pointing(cam, vehicle, gimbal, az, el);
    triads.push_back(camera_triad(az, el));
  }

  CoverageResult result;
  long covered = 0;
  const double golden = kPi * (1.0 + std::sqrt(5.0));
  for (int i = 0; i < grid_n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / grid_n;
    const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = golden * (i + 0.5);
    const EnuVector dir{rxy * std::cos(theta), rxy * std::sin(theta), z};
    bool seen = false;
    for (size_t c = 0; c < cameras.size() && !seen; ++c) {
      double offset = 0.0;
      seen = direction_in_window(triads[c], dir, cameras[c].hfov_rad, cameras[c].vfov_rad, offset);
    }
    if (seen) ++covered;
    else result.blind_directions.push_back(dir);
  }
  result.fraction = static_cast<double>(covered) / grid_n;
  return result;
}

std::vector<VisibilityRecord> landmark_visibility(const std::vector<PoseSample>& trajectory,
                                                  const std::vector<EnuVector>& landmarks,
                                                  const std::vector<CameraModel>& cameras) {
  if (trajectory.empty()) {
    throw ValidationError("landmark_visibility: empty trajectory");
  }
  std::vector<VisibilityRecord> records;
  records.reserve(trajectory.size() * cameras.size() * landmarks.size());
  for (const PoseSample& pose : trajectory) {
    for (const CameraModel& cam : cameras) {
      for (const EnuVector& lm : landmarks) {
        VisibilityRecord rec = target_in_fov(cam, pose.vehicle, pose.gimbal, lm);
        rec.time_s = pose.time_s;
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

double in_frame_fraction(const std::vector<VisibilityRecord>& records, const std::string& camera) {
  long total = 0, visible = 0;
  for (const VisibilityRecord& rec : records) {
    if (rec.camera != camera) continue;
    ++total;
    if (rec.target_visible) ++visible;
  }
  if (total == 0) {
    throw ValidationError("in_frame_fraction: no records for camera '" + camera + "'");
  }
  return static_cast<double>(visible) / static_cast<double>(total);
}

} // namespace tracksim
