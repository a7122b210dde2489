#include "terrapn/camera.hpp"

#include <algorithm>

namespace terrapn {

PixelPoint project_point(const CameraModel& cam, const Vec2& p_rob) {
  const Vec3 rel = Vec3{p_rob.x, p_rob.y, 0.0} - cam.center();
  const double xc = rel.dot(cam.axis_right());
  const double yc = rel.dot(cam.axis_down());
  const double zc = rel.dot(cam.axis_optical());

  PixelPoint out;
  if (zc <= 1e-9) {
    // Behind the image plane; report the nearest bottom-border pixel.
    out.u = std::clamp(cam.cx, 0.0, cam.width - 1.0);
    out.v = cam.height - 1.0;
    out.clamped = true;
    return out;
  }
  out.u = cam.fx * (xc / zc) + cam.cx;
  out.v = cam.fy * (yc / zc) + cam.cy;
  if (out.u < 0.0 || out.u > cam.width - 1.0 || out.v < 0.0 ||
      out.v > cam.height - 1.0) {
    out.u = std::clamp(out.u, 0.0, cam.width - 1.0);
    out.v = std::clamp(out.v, 0.0, cam.height - 1.0);
    out.clamped = true;
  }
  return out;
}

std::vector<PixelPoint> project_to_pixels(const std::vector<Vec2>& pts,
                                          const CameraModel& cam) {
  std::vector<PixelPoint> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out[i] = project_point(cam, pts[i]);
  return out;
}

GroundHit pixel_ground_point(const CameraModel& cam, double u, double v) {
  const double xr = (u - cam.cx) / cam.fx;
  const double yr = (v - cam.cy) / cam.fy;
  // Ray direction in the robot frame.
  const Vec3 dir = cam.axis_right() * xr + cam.axis_down() * yr +
                   cam.axis_optical();
  GroundHit hit;
  if (dir.z >= -1e-12) return hit;  // at or above the horizon
  const Vec3 c = cam.center();
  const double t = -c.z / dir.z;
  if (t <= 0.0) return hit;
  hit.point = {c.x + t * dir.x, c.y + t * dir.y};
  hit.is_ground = true;
  return hit;
}

}  // namespace terrapn
