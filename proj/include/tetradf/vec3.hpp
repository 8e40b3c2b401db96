#pragma once

#include <cmath>

namespace tetradf
{

struct Vec3
{
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 &operator+=(const Vec3 &o)
  {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3 &operator-=(const Vec3 &o)
  {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3 &operator*=(double s)
  {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3 &a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
};

constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
{
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3 &a) { return a / norm(a); }

// Planar point in a face's local frame.
struct Point2
{
  double u = 0.0;
  double v = 0.0;
};

constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

// Wraps an angle into [0, 360).
inline double wrap_360(double deg)
{
  double w = std::fmod(deg, 360.0);
  if (w < 0.0)
    w += 360.0;
  // fmod of a tiny negative value can round up to exactly 360
  return w >= 360.0 ? 0.0 : w;
}

// Wraps an angle difference into (-180, 180].
inline double wrap_180(double deg)
{
  double w = std::fmod(deg, 360.0);
  if (w <= -180.0)
    w += 360.0;
  else if (w > 180.0)
    w -= 360.0;
  return w;
}

} // namespace tetradf
