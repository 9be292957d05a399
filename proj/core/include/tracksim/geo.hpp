#ifndef TRACKSIM_GEO_HPP
#define TRACKSIM_GEO_HPP

#include <cmath>

namespace tracksim {

inline constexpr double kEarthRadius = 6378137.0; // spherical radius, meters
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDeg2Rad = kPi / 180.0;
inline constexpr double kRad2Deg = 180.0 / kPi;

/// Geodetic coordinate. Altitude is meters above the mission origin's ground
/// level (no geoid model).
struct GeoPoint {
  double latitude_deg = 0.0;  // [-90, 90]
  double longitude_deg = 0.0; // normalized to [-180, 180)
  double altitude_m = 0.0;
};

/// Local east-north-up displacement in meters.
struct EnuVector {
  double east = 0.0;
  double north = 0.0;
  double up = 0.0;

  EnuVector operator+(const EnuVector& o) const { return {east + o.east, north + o.north, up + o.up}; }
  EnuVector operator-(const EnuVector& o) const { return {east - o.east, north - o.north, up - o.up}; }
  EnuVector operator*(double s) const { return {east * s, north * s, up * s}; }
  double norm() const { return std::sqrt(east * east + north * north + up * up); }
  double horizontal_norm() const { return std::hypot(east, north); }
};

/// Throws ValidationError on non-finite or out-of-range coordinates and
/// returns the point with longitude normalized to [-180, 180).
GeoPoint validated(const GeoPoint& p);

/// Wrap an angle to (-pi, pi].
double wrap_pi(double angle_rad);

/// Wrap an angle to [0, 2*pi).
double wrap_two_pi(double angle_rad);

/// Equirectangular local-tangent-plane projection anchored at `origin`.
/// north = dlat*R, east = dlon*R*cos(origin lat), up = dalt.
/// Rejects origins within 0.1 degrees of a pole.
EnuVector geo_to_enu(const GeoPoint& origin, const GeoPoint& p);

/// Exact inverse of geo_to_enu under the same projection.
GeoPoint enu_to_geo(const GeoPoint& origin, const EnuVector& v);

/// Horizontal (east/north) separation in meters. Uses the mean-latitude
/// cosine so the result is exactly symmetric in its arguments.
double horizontal_distance(const GeoPoint& a, const GeoPoint& b);

/// Azimuth of b from a, clockwise from north, in [0, 2*pi).
/// Throws ValidationError when the points coincide horizontally.
double bearing(const GeoPoint& a, const GeoPoint& b);

} // namespace tracksim

#endif // TRACKSIM_GEO_HPP
