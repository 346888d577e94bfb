#pragma once

#include <array>
#include <cmath>

namespace vg3d {

// Right-handed world frame, z is the gravity/up axis. Units are meters.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const { return *this / norm(); }
  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Axis-aligned box given by center and full extents (width, length, height).
struct Aabb {
  Vec3 center;
  Vec3 size;

  Vec3 min_corner() const { return center - size * 0.5; }
  Vec3 max_corner() const { return center + size * 0.5; }
  double volume() const { return size.x * size.y * size.z; }
  double top() const { return center.z + size.z * 0.5; }
  double bottom() const { return center.z - size.z * 0.5; }

  bool operator==(const Aabb& o) const { return center == o.center && size == o.size; }
};

// Smallest box enclosing both inputs.
Aabb enclose(const Aabb& a, const Aabb& b);

// Rigid camera pose. rotation holds the three rows of R in order
// (right, image-up, forward); translation is t = -R * eye, so a world point p
// maps to camera coordinates as R*p + t.
struct CameraPose {
  std::array<Vec3, 3> rotation;
  Vec3 translation;

  Vec3 apply(const Vec3& p) const {
    return {rotation[0].dot(p) + translation.x,
            rotation[1].dot(p) + translation.y,
            rotation[2].dot(p) + translation.z};
  }
};

// Orthographic scale factors; identity by default.
struct Intrinsics {
  double scale_u = 1.0;
  double scale_v = 1.0;
};

// u grows to the viewer's right, v upward in the image, w along the view
// direction (depth).
struct Projection {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

// Builds the camera pose looking from eye toward target with the given up
// hint. Basis: f = normalize(target-eye), r = normalize(f x up), u' = r x f.
// Throws RelationError when eye == target (within 1e-9) or up is parallel to
// the view direction (within 1e-6 angular tolerance).
CameraPose lookat(const Vec3& eye, const Vec3& target, const Vec3& up);

Projection project(const CameraPose& pose, const Intrinsics& intr, const Vec3& p);

// Volume intersection-over-union; exactly 0 for disjoint boxes.
double iou(const Aabb& a, const Aabb& b);

// Euclidean distance between box centers.
double center_distance(const Aabb& a, const Aabb& b);

// Area of the xy-footprint intersection; 0 when footprints are disjoint or touch
// only at an edge.
double footprint_overlap(const Aabb& a, const Aabb& b);

}  // namespace vg3d
