#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terrapn/sim.hpp"

namespace terrapn {

enum class ManeuverKind { rectangle, serpentine, random };
enum class SpeedBand { slow, fast };

struct TimedCommand {
  Command cmd;
  double hold{0.1};  // seconds
};

struct ManeuverPlan {
  ManeuverKind kind{ManeuverKind::rectangle};
  SpeedBand band{SpeedBand::slow};
  double duration{0.0};
  std::vector<TimedCommand> commands;

  // Command active at plan time t (last command holds past the end).
  Command command_at(double t) const;
};

struct ManeuverLimits {
  double v_max{0.6};
  double w_max{1.2};
};

struct ManeuverShape {
  double leg_s{6.0};          // rectangle straight legs
  double serp_period_s{16.0};
  double serp_duration_s{48.0};
  double random_hold_s{4.0};
  double tick_s{0.1};
};

// Maneuver command schedules. The slow band stays within
// [0, v_max/2] x [-w_max/2, w_max/2], the fast band uses the full box. The
// random plan draws one jittered command per coverage cell of the full
// velocity grid (spacing 0.1 v_max x 0.1 w_max) restricted to its band, so
// the union of all six plans covers the grid.
ManeuverPlan generate_maneuver(ManeuverKind kind, SpeedBand band,
                               std::uint64_t seed,
                               const ManeuverLimits& limits,
                               const ManeuverShape& shape = {});

std::vector<ManeuverPlan> all_maneuver_plans(std::uint64_t seed,
                                             const ManeuverLimits& limits,
                                             const ManeuverShape& shape = {});

std::string maneuver_kind_name(ManeuverKind k);
std::string speed_band_name(SpeedBand b);

}  // namespace terrapn
