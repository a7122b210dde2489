#pragma once

#include <cstdint>
#include <vector>

#include "terrapn/geometry.hpp"
#include "terrapn/world.hpp"

namespace terrapn {

struct RobotState {
  Pose2 true_pose;        // ground truth (the "LOAM" role)
  Pose2 odom_pose;        // integrated from commanded wheel motion
  double z{0.0};          // vertical vibration displacement, meters
  double v_curr{0.0};     // last commanded linear velocity
  double w_curr{0.0};     // last commanded angular velocity
  double stuck_time{0.0}; // seconds spent commanding motion on a stuck surface
  std::uint64_t noise_seq{0};
};

struct Command {
  double v{0.0};
  double w{0.0};
};

struct SimParams {
  double stuck_slip_threshold{0.9};  // slip_lin at or above this counts as stuck
};

// One control interval of differential-drive kinematics. The true pose moves
// with the slip-reduced velocities of the surface under the robot, the odom
// pose with the commanded ones. Pure in (state, cmd, world, dt): the vertical
// noise comes from counter hashes of (world.seed, state.noise_seq).
RobotState step(const RobotState& state, const Command& cmd,
                const WorldModel& world, double dt,
                const SimParams& params = {});

// 6 x N window (rows: accel x/y/z, gyro x/y/z; N = f_imu * window).
// Accelerations are zero-mean noise with std proportional to
// bumpiness * |v_true| (vertical channel dominant); gyro channels carry
// omega_true plus noise of the same scaling. Pure per (state, world).
struct ImuWindow {
  int samples{0};
  std::vector<double> data;  // row-major, 6 * samples
  double at(int channel, int i) const { return data[channel * samples + i]; }
};

ImuWindow read_imu(const RobotState& state, const WorldModel& world,
                   double f_imu, double window);

struct Scan {
  double fov{2.0 * M_PI};
  double max_range{6.0};
  std::vector<double> angles;  // relative to robot heading
  std::vector<double> ranges;
};

// Ray-cast ranges to the nearest obstacle circle per beam.
Scan sense_obstacles(const WorldModel& world, const Pose2& true_pose,
                     int n_beams, double max_range, double fov = 2.0 * M_PI);

}  // namespace terrapn
