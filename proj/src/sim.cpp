#include "terrapn/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "terrapn/rng.hpp"

namespace terrapn {

namespace {

constexpr std::uint64_t kZNoiseTag = 0x5a5a;
constexpr std::uint64_t kImuTag = 0x1a11;

// Exact unicycle arc integration.
Pose2 integrate(const Pose2& p, double v, double w, double dt) {
  Pose2 out = p;
  if (std::abs(w) < 1e-12) {
    out.x += v * std::cos(p.theta) * dt;
    out.y += v * std::sin(p.theta) * dt;
  } else {
    const double r = v / w;
    out.x += r * (std::sin(p.theta + w * dt) - std::sin(p.theta));
    out.y -= r * (std::cos(p.theta + w * dt) - std::cos(p.theta));
  }
  out.theta = wrap_angle(p.theta + w * dt);
  return out;
}

}  // namespace

RobotState step(const RobotState& state, const Command& cmd,
                const WorldModel& world, double dt, const SimParams& params) {
  if (dt <= 0.0) throw std::invalid_argument("step: dt must be positive");
  const SurfaceLookup surf =
      surface_at(world, state.true_pose.x, state.true_pose.y);
  const double v_true = (1.0 - surf.spec->slip_lin) * cmd.v;
  const double w_true = (1.0 - surf.spec->slip_ang) * cmd.w;

  RobotState next = state;
  next.true_pose = integrate(state.true_pose, v_true, w_true, dt);
  next.odom_pose = integrate(state.odom_pose, cmd.v, cmd.w, dt);
  const double z_std = surf.spec->bumpiness * std::abs(v_true);
  next.z = z_std > 0.0
               ? z_std * hash_gauss(world.seed, kZNoiseTag, state.noise_seq)
               : 0.0;
  next.v_curr = cmd.v;
  next.w_curr = cmd.w;
  if (surf.spec->slip_lin >= params.stuck_slip_threshold && cmd.v > 0.0)
    next.stuck_time = state.stuck_time + dt;
  else
    next.stuck_time = 0.0;
  next.noise_seq = state.noise_seq + 1;
  return next;
}

ImuWindow read_imu(const RobotState& state, const WorldModel& world,
                   double f_imu, double window) {
  if (window <= 0.0 || f_imu <= 0.0)
    throw std::invalid_argument("read_imu: window and rate must be positive");
  const int n = std::max(1, static_cast<int>(std::lround(f_imu * window)));
  const SurfaceLookup surf =
      surface_at(world, state.true_pose.x, state.true_pose.y);
  const double v_true = (1.0 - surf.spec->slip_lin) * state.v_curr;
  const double w_true = (1.0 - surf.spec->slip_ang) * state.w_curr;
  const double base_std = surf.spec->bumpiness * std::abs(v_true);
  // vertical acceleration dominates the lateral channels by a fixed factor
  const double ch_std[6] = {base_std / 3.0, base_std / 3.0, base_std,
                            base_std / 3.0, base_std / 3.0, base_std / 3.0};

  ImuWindow out;
  out.samples = n;
  out.data.assign(6u * n, 0.0);
  for (int ch = 0; ch < 6; ++ch) {
    const double mean = ch >= 3 ? w_true : 0.0;
    for (int i = 0; i < n; ++i) {
      double v = mean;
      if (ch_std[ch] > 0.0)
        v += ch_std[ch] * hash_gauss(world.seed, kImuTag, state.noise_seq,
                                     static_cast<std::uint64_t>(ch),
                                     static_cast<std::uint64_t>(i));
      out.data[static_cast<std::size_t>(ch) * n + i] = v;
    }
  }
  return out;
}

Scan sense_obstacles(const WorldModel& world, const Pose2& true_pose,
                     int n_beams, double max_range, double fov) {
  if (n_beams < 1) throw std::invalid_argument("sense_obstacles: n_beams >= 1");
  Scan scan;
  scan.fov = fov;
  scan.max_range = max_range;
  scan.angles.resize(n_beams);
  scan.ranges.resize(n_beams);
  for (int k = 0; k < n_beams; ++k) {
    const double rel =
        n_beams == 1 ? 0.0 : -fov / 2.0 + fov * k / (n_beams - 1);
    scan.angles[k] = rel;
    const double a = true_pose.theta + rel;
    const Vec2 dir{std::cos(a), std::sin(a)};
    double best = max_range;
    for (const auto& c : world.obstacles) {
      const Vec2 pc{c.x - true_pose.x, c.y - true_pose.y};
      const double b = pc.dot(dir);
      const double disc = b * b - (pc.dot(pc) - c.r * c.r);
      if (disc < 0.0) continue;
      const double sq = std::sqrt(disc);
      double t = b - sq;
      if (t < 0.0) t = b + sq;  // origin inside the circle
      if (t >= 0.0 && t < best) best = t;
    }
    scan.ranges[k] = best;
  }
  return scan;
}

}  // namespace terrapn
