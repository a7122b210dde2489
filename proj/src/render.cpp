#include "terrapn/render.hpp"

#include <stdexcept>

namespace terrapn {

namespace {

inline std::array<std::uint8_t, 3> shade_pixel(const WorldModel& world,
                                               const Pose2& pose,
                                               const CameraModel& cam, int u,
                                               int v) {
  const GroundHit hit = pixel_ground_point(cam, u, v);
  if (!hit.is_ground) return kSkyColor;
  const Vec2 wp = pose.to_world(hit.point);
  for (const auto& c : world.obstacles) {
    const double dx = wp.x - c.x, dy = wp.y - c.y;
    if (dx * dx + dy * dy <= c.r * c.r) return kObstacleColor;
  }
  const SurfaceLookup s = surface_at(world, wp.x, wp.y);
  return texture_rgb(*s.spec, wp.x, wp.y, world.seed);
}

}  // namespace

RgbImage render_camera(const WorldModel& world, const Pose2& true_pose,
                       const CameraModel& cam, Exec exec) {
  RgbImage img(cam.width, cam.height);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int v = 0; v < cam.height; ++v)
      for (int u = 0; u < cam.width; ++u) {
        const auto px = shade_pixel(world, true_pose, cam, u, v);
        img.set(u, v, px[0], px[1], px[2]);
      }
  } else {
    for (int v = 0; v < cam.height; ++v)
      for (int u = 0; u < cam.width; ++u) {
        const auto px = shade_pixel(world, true_pose, cam, u, v);
        img.set(u, v, px[0], px[1], px[2]);
      }
  }
  return img;
}

RgbImage render_camera_roi(const WorldModel& world, const Pose2& true_pose,
                           const CameraModel& cam, int x0, int y0, int w,
                           int h) {
  if (x0 < 0 || y0 < 0 || x0 + w > cam.width || y0 + h > cam.height)
    throw std::invalid_argument("render ROI outside image bounds");
  RgbImage img(w, h);
  for (int v = 0; v < h; ++v)
    for (int u = 0; u < w; ++u) {
      const auto px = shade_pixel(world, true_pose, cam, x0 + u, y0 + v);
      img.set(u, v, px[0], px[1], px[2]);
    }
  return img;
}

}  // namespace terrapn
