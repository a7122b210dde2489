#include "terrapn/collect.hpp"

#include <cmath>
#include <deque>

#include "terrapn/render.hpp"

namespace terrapn {

namespace {

// Pose/path history ring for trailing-window odometry deltas.
struct MotionLog {
  std::deque<double> true_path, odom_path;   // cumulative path length
  std::deque<double> true_theta, odom_theta;
  std::size_t capacity{0};

  void push(double tp, double op, double tt, double ot) {
    true_path.push_back(tp);
    odom_path.push_back(op);
    true_theta.push_back(tt);
    odom_theta.push_back(ot);
    while (true_path.size() > capacity) {
      true_path.pop_front();
      odom_path.pop_front();
      true_theta.pop_front();
      odom_theta.pop_front();
    }
  }
  bool full() const { return true_path.size() == capacity; }
};

}  // namespace

CollectResult collect_dataset(const WorldModel& world,
                              const std::vector<ManeuverPlan>& plans,
                              const CameraModel& camera,
                              const CollectParams& params,
                              const PlannerParams& planner_params) {
  CollectResult result;
  const int hist_len = std::max(1, params.patch_n / 2);
  const int window_ticks =
      std::max(1, static_cast<int>(std::lround(params.imu_window / params.dt)));
  const int label_ticks = std::max(
      1, static_cast<int>(std::lround(params.label_interval / params.dt)));
  const int patch_x0 = (camera.width - params.patch_n) / 2;
  const int patch_y0 = camera.height - params.patch_n;

  std::int64_t next_id = 0;
  for (std::size_t plan_idx = 0; plan_idx < plans.size(); ++plan_idx) {
    const ManeuverPlan& plan = plans[plan_idx];
    RobotState state;
    state.true_pose = world.start;
    state.odom_pose = world.start;
    state.noise_seq = hash_u64(world.seed, 0xc011ec7, plan_idx) & 0xffffffULL;

    std::deque<Command> vel_hist(hist_len, Command{});
    MotionLog motion;
    motion.capacity = static_cast<std::size_t>(window_ticks) + 1;
    double true_path = 0.0, odom_path = 0.0;
    motion.push(0.0, 0.0, state.true_pose.theta, state.odom_pose.theta);

    const int ticks = static_cast<int>(std::ceil(plan.duration / params.dt));
    bool avoiding = false;
    for (int tick = 0; tick < ticks; ++tick) {
      const double t = tick * params.dt;

      const Scan scan = sense_obstacles(world, state.true_pose,
                                        params.scan_beams, params.scan_range,
                                        params.scan_fov);
      double min_range = params.scan_range;
      int widest_beam = 0;
      for (std::size_t k = 0; k < scan.ranges.size(); ++k) {
        if (scan.ranges[k] < min_range) min_range = scan.ranges[k];
        if (scan.ranges[k] > scan.ranges[widest_beam])
          widest_beam = static_cast<int>(k);
      }
      if (min_range < params.d_safe)
        avoiding = true;
      else if (min_range > params.d_safe + 0.2)
        avoiding = false;

      Command cmd = plan.command_at(t);
      if (avoiding) {
        // Steer toward the most open beam with the baseline DWA.
        const double a = scan.angles[widest_beam];
        const Vec2 goal_rel{2.5 * std::cos(a), 2.5 * std::sin(a)};
        const SearchSpace space = build_search_space(
            state.v_curr, state.w_curr, scan, nullptr, nullptr, goal_rel,
            planner_params, LimitMode::baseline, Exec::serial);
        const PlanChoice choice = choose_G1(space, planner_params);
        cmd = {choice.v, choice.w};
        result.fallback_time += params.dt;
      }

      state = step(state, cmd, world, params.dt);
      vel_hist.push_back(cmd);
      while (vel_hist.size() > static_cast<std::size_t>(hist_len))
        vel_hist.pop_front();

      const SurfaceLookup surf =
          surface_at(world, state.true_pose.x, state.true_pose.y);
      true_path += (1.0 - surf.spec->slip_lin) * cmd.v * params.dt;
      odom_path += cmd.v * params.dt;
      motion.push(true_path, odom_path, state.true_pose.theta,
                  state.odom_pose.theta);

      if (state.stuck_time > params.stuck_timeout) {
        result.diagnostics.push_back({static_cast<int>(plan_idx), t,
                                      surf.spec->id, "stuck"});
        break;
      }
      if (obstacle_clearance(world, state.true_pose.x, state.true_pose.y) <
          planner_params.robot_radius) {
        result.diagnostics.push_back({static_cast<int>(plan_idx), t,
                                      surf.spec->id, "collision"});
        break;
      }

      // Emit a sample once the trailing window is warm.
      if ((tick + 1) % label_ticks == 0 && motion.full()) {
        Sample s;
        s.id = next_id++;
        s.t = t + params.dt;
        s.seed = world.seed;
        s.surface_id_truth = surf.spec->id;
        s.patch = render_camera_roi(world, state.true_pose, camera, patch_x0,
                                    patch_y0, params.patch_n, params.patch_n);
        s.vel_hist.assign(vel_hist.begin(), vel_hist.end());

        const ImuWindow imu =
            read_imu(state, world, params.imu_rate, params.imu_window);
        const PcaVariances pca = pca_variances(imu);
        const double d_loam = motion.true_path.back() - motion.true_path.front();
        const double d_odom = motion.odom_path.back() - motion.odom_path.front();
        const double th_loam =
            wrap_angle(motion.true_theta.back() - motion.true_theta.front());
        const double th_odom =
            wrap_angle(motion.odom_theta.back() - motion.odom_theta.front());
        const OdomErrors err = odom_errors(d_loam, th_loam, d_odom, th_odom);
        s.label = make_label(pca, err, params.label_options);
        s.d_error_signed = err.d_error;
        s.theta_error_signed = err.theta_error;
        result.samples.push_back(std::move(s));
      }
    }
  }
  return result;
}

}  // namespace terrapn
