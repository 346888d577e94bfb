#include "vg3d/geometry.hpp"

#include <algorithm>

#include "vg3d/errors.hpp"

namespace vg3d {

namespace {
constexpr double kDegenerateLength = 1e-9;
constexpr double kParallelSine = 1e-6;
}  // namespace

Aabb enclose(const Aabb& a, const Aabb& b) {
  const Vec3 amn = a.min_corner(), amx = a.max_corner();
  const Vec3 bmn = b.min_corner(), bmx = b.max_corner();
  const Vec3 mn{std::min(amn.x, bmn.x), std::min(amn.y, bmn.y), std::min(amn.z, bmn.z)};
  const Vec3 mx{std::max(amx.x, bmx.x), std::max(amx.y, bmx.y), std::max(amx.z, bmx.z)};
  return Aabb{(mn + mx) * 0.5, mx - mn};
}

CameraPose lookat(const Vec3& eye, const Vec3& target, const Vec3& up) {
  const Vec3 dir = target - eye;
  if (dir.norm() <= kDegenerateLength) {
    throw Error("lookat: degenerate view direction (eye equals target)");
  }
  const Vec3 f = dir.normalized();
  const double up_norm = up.norm();
  if (up_norm <= kDegenerateLength || f.cross(up).norm() / up_norm <= kParallelSine) {
    throw Error("lookat: up vector parallel to view direction");
  }
  const Vec3 r = f.cross(up).normalized();
  const Vec3 u = r.cross(f);
  CameraPose pose;
  pose.rotation = {r, u, f};
  pose.translation = {-r.dot(eye), -u.dot(eye), -f.dot(eye)};
  return pose;
}

Projection project(const CameraPose& pose, const Intrinsics& intr, const Vec3& p) {
  const Vec3 cam = pose.apply(p);
  return Projection{intr.scale_u * cam.x, intr.scale_v * cam.y, cam.z};
}

double iou(const Aabb& a, const Aabb& b) {
  const Vec3 amn = a.min_corner(), amx = a.max_corner();
  const Vec3 bmn = b.min_corner(), bmx = b.max_corner();
  const double ox = std::min(amx.x, bmx.x) - std::max(amn.x, bmn.x);
  const double oy = std::min(amx.y, bmx.y) - std::max(amn.y, bmn.y);
  const double oz = std::min(amx.z, bmx.z) - std::max(amn.z, bmn.z);
  if (ox <= 0.0 || oy <= 0.0 || oz <= 0.0) return 0.0;
  const double inter = ox * oy * oz;
  return inter / (a.volume() + b.volume() - inter);
}

double center_distance(const Aabb& a, const Aabb& b) {
  return (a.center - b.center).norm();
}

double footprint_overlap(const Aabb& a, const Aabb& b) {
  const Vec3 amn = a.min_corner(), amx = a.max_corner();
  const Vec3 bmn = b.min_corner(), bmx = b.max_corner();
  const double ox = std::min(amx.x, bmx.x) - std::max(amn.x, bmn.x);
  const double oy = std::min(amx.y, bmx.y) - std::max(amn.y, bmn.y);
  if (ox <= 0.0 || oy <= 0.0) return 0.0;
  return ox * oy;
}

}  // namespace vg3d
