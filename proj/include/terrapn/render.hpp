#pragma once

#include "terrapn/camera.hpp"
#include "terrapn/exec.hpp"
#include "terrapn/image.hpp"
#include "terrapn/world.hpp"

namespace terrapn {

inline constexpr std::array<std::uint8_t, 3> kSkyColor{178, 202, 235};
inline constexpr std::array<std::uint8_t, 3> kObstacleColor{24, 24, 28};

// Per-pixel ray cast against the ground plane; sky above the horizon,
// obstacle footprints in a fixed color, otherwise the procedural texture of
// the surface under the hit point. Pure in (world, pose, cam).
RgbImage render_camera(const WorldModel& world, const Pose2& true_pose,
                       const CameraModel& cam, Exec exec = Exec::parallel);

// Same pixels restricted to a rectangle (used when only a patch is needed).
RgbImage render_camera_roi(const WorldModel& world, const Pose2& true_pose,
                           const CameraModel& cam, int x0, int y0, int w,
                           int h);

}  // namespace terrapn
