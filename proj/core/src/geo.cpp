#include "tracksim/geo.hpp"

#include <cmath>
#include <string>

#include "tracksim/errors.hpp"

namespace tracksim {

namespace {

constexpr double kPoleGuardDeg = 0.1;

bool finite(const GeoPoint& p) {
  return std::isfinite(p.latitude_deg) && std::isfinite(p.longitude_deg) && std::isfinite(p.altitude_m);
}

// Shortest longitude difference in degrees, in [-180, 180).
double wrap_lon(double lon_deg) {
  double x = std::fmod(lon_deg + 180.0, 360.0);
  if (x < 0.0) x += 360.0;
  return x - 180.0;
}

} // namespace

GeoPoint validated(const GeoPoint& p) {
  if (!finite(p)) {
    throw ValidationError("GeoPoint has non-finite component");
  }
  if (p.latitude_deg < -90.0 || p.latitude_deg > 90.0) {
    throw ValidationError("latitude out of range [-90, 90]: " + std::to_string(p.latitude_deg));
  }
  if (p.longitude_deg < -180.0 || p.longitude_deg > 180.0) {
    throw ValidationError("longitude out of range [-180, 180]: " + std::to_string(p.longitude_deg));
  }
  GeoPoint q = p;
  if (q.longitude_deg == 180.0) q.longitude_deg = -180.0;
  return q;
}

double wrap_pi(double angle_rad) {
  double a = std::fmod(angle_rad, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  else if (a > kPi) a -= 2.0 * kPi;
  return a;
}

double wrap_two_pi(double angle_rad) {
  double a = std::fmod(angle_rad, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

EnuVector geo_to_enu(const GeoPoint& origin_in, const GeoPoint& p_in) {
  const GeoPoint origin = validated(origin_in);
  const GeoPoint p = validated(p_in);
  if (std::abs(origin.latitude_deg) > 90.0 - kPoleGuardDeg) {
    throw ValidationError("tangent-plane origin too close to a pole");
  }
  const double dlat = p.latitude_deg - origin.latitude_deg;
  const double dlon = wrap_lon(p.longitude_deg - origin.longitude_deg);
  EnuVector v;
  v.north = dlat * kDeg2Rad * kEarthRadius;
  v.east = dlon * kDeg2Rad * kEarthRadius * std::cos(origin.latitude_deg * kDeg2Rad);
  v.up = p.altitude_m - origin.altitude_m;
  return v;
}

GeoPoint enu_to_geo(const GeoPoint& origin_in, const EnuVector& v) {
  const GeoPoint origin = validated(origin_in);
  if (std::abs(origin.latitude_deg) > 90.0 - kPoleGuardDeg) {
    throw ValidationError("tangent-plane origin too close to a pole");
  }
  if (!std::isfinite(v.east) || !std::isfinite(v.north) || !std::isfinite(v.up)) {
    throw ValidationError("EnuVector has non-finite component");
  }
  GeoPoint p;
  p.latitude_deg = origin.latitude_deg + v.north / kEarthRadius * kRad2Deg;
  p.longitude_deg = wrap_lon(origin.longitude_deg +
                             v.east / (kEarthRadius * std::cos(origin.latitude_deg * kDeg2Rad)) * kRad2Deg);
  p.altitude_m = origin.altitude_m + v.up;
  return p;
}

namespace {

// East/north displacement with the cos factor taken at the mean latitude,
// making distance and bearing exactly symmetric/antipodal in (a, b).
void midlat_east_north(const GeoPoint& a, const GeoPoint& b, double& east, double& north) {
  const double dlat = b.latitude_deg - a.latitude_deg;
  const double dlon = wrap_lon(b.longitude_deg - a.longitude_deg);
  const double mid_lat = 0.5 * (a.latitude_deg + b.latitude_deg);
  north = dlat * kDeg2Rad * kEarthRadius;
  east = dlon * kDeg2Rad * kEarthRadius * std::cos(mid_lat * kDeg2Rad);
}

} // namespace

double horizontal_distance(const GeoPoint& a_in, const GeoPoint& b_in) {
  const GeoPoint a = validated(a_in);
  const GeoPoint b = validated(b_in);
  double east = 0.0, north = 0.0;
  midlat_east_north(a, b, east, north);
  return std::hypot(east, north);
}

double bearing(const GeoPoint& a_in, const GeoPoint& b_in) {
  const GeoPoint a = validated(a_in);
  const GeoPoint b = validated(b_in);
  double east = 0.0, north = 0.0;
  midlat_east_north(a, b, east, north);
  if (east == 0.0 && north == 0.0) {
    throw ValidationError("bearing undefined for horizontally coincident points");
  }
  return wrap_two_pi(std::atan2(east, north));
}

} // namespace tracksim
