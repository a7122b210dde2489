#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terrapn/camera.hpp"
#include "terrapn/dataset.hpp"
#include "terrapn/maneuver.hpp"
#include "terrapn/planner.hpp"
#include "terrapn/world.hpp"

namespace terrapn {

struct CollectParams {
  double dt{0.1};              // control tick
  double label_interval{0.5};  // seconds between emitted samples
  double imu_rate{100.0};      // Hz
  double imu_window{1.0};      // trailing window for both label halves
  int patch_n{32};             // patch side; velocity history holds n/2 ticks
  double d_safe{1.0};          // obstacle range triggering the DWA fallback
  double stuck_timeout{3.0};   // seconds of stuck before aborting a plan
  int scan_beams{72};
  double scan_range{6.0};
  double scan_fov{2.0 * M_PI};
  LabelOptions label_options;
};

struct CollectDiagnostic {
  int plan_index{-1};
  double t{0.0};
  int surface_id{-1};
  std::string what;  // "stuck" | "collision"
};

struct CollectResult {
  std::vector<Sample> samples;
  std::vector<CollectDiagnostic> diagnostics;
  double fallback_time{0.0};  // seconds spent in collision avoidance
};

// Rolls the simulator through each plan (robot reset to world.start per
// plan), emitting one Sample every label_interval: the center-bottom patch of
// the current render, the past n/2 commands, and the trailing-window label.
// Within d_safe of an obstacle, commands come from the baseline DWA until
// clear. A stuck robot aborts the current plan with a diagnostic.
CollectResult collect_dataset(const WorldModel& world,
                              const std::vector<ManeuverPlan>& plans,
                              const CameraModel& camera,
                              const CollectParams& params,
                              const PlannerParams& planner_params);

}  // namespace terrapn
