#pragma once

#include <vector>

#include "terrapn/camera.hpp"
#include "terrapn/exec.hpp"
#include "terrapn/geometry.hpp"
#include "terrapn/image.hpp"
#include "terrapn/sim.hpp"

namespace terrapn {

struct PlannerParams {
  double v_max{0.6};        // m/s
  double w_max{1.2};        // rad/s
  double accel_v_max{1.0};  // m/s^2
  double accel_w_max{2.0};  // rad/s^2
  double dt{0.1};           // s
  int s_num{15};            // rollout steps
  double alpha{2.4};
  double beta{3.2};
  double gamma{0.1};
  double delta{50.0};
  int grid_v{21};
  int grid_w{41};
  double robot_radius{0.3};     // m
  double clearance_clip{3.0};   // d_clip for the dist() objective term
};

struct VelocityCandidate {
  double v{0.0};
  double w{0.0};
  std::vector<Vec2> rollout;       // s_num + 1 points, robot frame
  std::vector<PixelPoint> trace;   // projected rollout (empty without costmap)
  double head{0.0};                // normalized objective terms
  double dist{0.0};
  double vel{0.0};
  double sur{0.0};                 // raw trajectory surface cost
  bool admissible{false};          // in V_a
  bool reachable{false};           // in V'_d
};

struct SearchSpace {
  std::vector<VelocityCandidate> candidates;  // the full V_s grid
  std::vector<int> feasible;                  // indices forming V'_r
  double c_half{0.0};
  double tau{1.0};
  double accel_v_lim{0.0};
  double accel_w_lim{0.0};
  double window_v_lo{0.0}, window_v_hi{0.0};
  double window_w_lo{0.0}, window_w_hi{0.0};
  bool empty() const { return feasible.empty(); }
};

struct PlanChoice {
  double v{0.0};
  double w{0.0};
  bool stop{false};    // V'_r was empty; (0,0) is an emergency stop
  int index{-1};       // candidate index in SearchSpace::candidates
  double objective{0.0};
};

enum class LimitMode {
  modulated,  // accelerations scaled by tau = cos(C_half)
  baseline    // plain DWA window (tau forced to 1)
};

// Trajectory extrapolation x_i = v cos(w t_i) t_i, y_i = v sin(w t_i) t_i,
// t_i = i dt for i = 0..s_num.
std::vector<Vec2> rollout(double v, double w, const PlannerParams& params);

// Sum of cost map values at the projected rollout pixels.
double surface_cost(const std::vector<PixelPoint>& trace,
                    const Raster& costmap);

// Mean cost over the trailing half of the current trajectory,
// indices floor(s_num/2)+1 .. s_num. Always within [0, pi/2].
double second_half_cost(double v_curr, double w_curr, const Raster& costmap,
                        const CameraModel& cam, const PlannerParams& params);

struct AccelLimits {
  double v_dot{0.0};
  double w_dot{0.0};
};

// tau = cos(C_half); positive acceleration limits scale by tau while braking
// stays at the full limit.
AccelLimits accel_limits(double c_half, const PlannerParams& params);

// Length travelled along the (v, w) path before reaching an obstacle point
// within robot_radius of the swept line/arc; +inf when the path stays clear.
double impact_distance(double v, double w, const std::vector<Vec2>& obstacles,
                       double robot_radius);

// Discretizes V_s, marks V_a (stoppable before impact) and V'_d (dynamic
// window around (v_curr, w_curr)), computes normalized head/dist/vel over
// V'_r plus the raw sur term. costmap may be null (baseline runs without a
// camera); then sur = 0 and C_half = 0.
SearchSpace build_search_space(double v_curr, double w_curr, const Scan& scan,
                               const Raster* costmap, const CameraModel* cam,
                               const Vec2& goal_rel,
                               const PlannerParams& params,
                               LimitMode mode = LimitMode::modulated,
                               Exec exec = Exec::parallel);

// argmax over V'_r of G2 = alpha head + beta dist + gamma vel - delta sur.
// Ties break toward higher v, then smaller |w|.
PlanChoice choose_G2(const SearchSpace& space, const PlannerParams& params);

// Baseline DWA objective G1 (delta = 0) over the same search space.
PlanChoice choose_G1(const SearchSpace& space, const PlannerParams& params);

// Scan beams below max range as points in the robot frame.
std::vector<Vec2> scan_points(const Scan& scan);

}  // namespace terrapn
