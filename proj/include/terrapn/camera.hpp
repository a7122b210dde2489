#pragma once

#include <vector>

#include "terrapn/geometry.hpp"

namespace terrapn {

// Pinhole camera rigidly mounted on the robot, pitched down so the ground
// plane is visible. Robot frame: X forward, Y left, Z up. Camera frame:
// X right, Y down, Z along the optical axis.
struct CameraModel {
  double fx{300.0};
  double fy{300.0};
  double cx{320.0};
  double cy{240.0};
  int width{640};
  int height{480};
  double mount_height{0.5};   // meters above ground
  double mount_pitch{0.35};   // radians, >0 tilts the optical axis down
  double mount_forward{0.2};  // meters ahead of the robot center

  Vec3 center() const { return {mount_forward, 0.0, mount_height}; }
  // Camera basis vectors expressed in the robot frame.
  Vec3 axis_right() const { return {0.0, -1.0, 0.0}; }
  Vec3 axis_down() const {
    return {-std::sin(mount_pitch), 0.0, -std::cos(mount_pitch)};
  }
  Vec3 axis_optical() const {
    return {std::cos(mount_pitch), 0.0, -std::sin(mount_pitch)};
  }
};

struct PixelPoint {
  double u{0.0};
  double v{0.0};
  bool clamped{false};  // outside the image or behind the camera
};

struct GroundHit {
  Vec2 point;            // robot frame
  bool is_ground{false};  // false = the ray never reaches z=0 (sky)
};

// Ground point (robot frame) -> pixel. Points behind the camera or projecting
// outside [0,w)x[0,h) are clamped to the nearest border pixel and flagged.
PixelPoint project_point(const CameraModel& cam, const Vec2& p_rob);
std::vector<PixelPoint> project_to_pixels(const std::vector<Vec2>& pts,
                                          const CameraModel& cam);

// Ray through pixel center (u, v) intersected with the ground plane z=0.
GroundHit pixel_ground_point(const CameraModel& cam, double u, double v);

}  // namespace terrapn
