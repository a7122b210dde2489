#include "terrapn/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace terrapn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sample_costmap(const Raster& costmap, const PixelPoint& px) {
  int x = static_cast<int>(std::lround(px.u));
  int y = static_cast<int>(std::lround(px.v));
  x = std::clamp(x, 0, costmap.width - 1);
  y = std::clamp(y, 0, costmap.height - 1);
  return costmap.at(x, y);
}

double wrap_0_2pi(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a < 0.0) a += 2.0 * M_PI;
  return a;
}

}  // namespace

std::vector<Vec2> rollout(double v, double w, const PlannerParams& params) {
  std::vector<Vec2> pts(params.s_num + 1);
  for (int i = 0; i <= params.s_num; ++i) {
    const double t = i * params.dt;
    pts[i] = {v * std::cos(w * t) * t, v * std::sin(w * t) * t};
  }
  return pts;
}

double surface_cost(const std::vector<PixelPoint>& trace,
                    const Raster& costmap) {
  double sum = 0.0;
  for (const auto& px : trace) sum += sample_costmap(costmap, px);
  return sum;
}

double second_half_cost(double v_curr, double w_curr, const Raster& costmap,
                        const CameraModel& cam, const PlannerParams& params) {
  const std::vector<Vec2> pts = rollout(v_curr, w_curr, params);
  const int h = params.s_num / 2;
  double sum = 0.0;
  for (int i = h + 1; i <= params.s_num; ++i)
    sum += sample_costmap(costmap, project_point(cam, pts[i]));
  return sum / (params.s_num - h);
}

AccelLimits accel_limits(double c_half, const PlannerParams& params) {
  const double tau = std::cos(c_half);
  return {tau * params.accel_v_max, tau * params.accel_w_max};
}

double impact_distance(double v, double w, const std::vector<Vec2>& obstacles,
                       double robot_radius) {
  if (obstacles.empty()) return kInf;
  double best = kInf;
  if (v < 1e-12) {
    // No translation; only an already-touching obstacle blocks.
    for (const auto& p : obstacles)
      if (p.norm() <= robot_radius) return 0.0;
    return kInf;
  }
  if (std::abs(w) < 1e-9) {
    for (const auto& p : obstacles)
      if (p.x > 0.0 && std::abs(p.y) <= robot_radius)
        best = std::min(best, p.x);
    return best;
  }
  const double radius = v / w;  // signed arc radius, center at (0, radius)
  for (const auto& p : obstacles) {
    const double dc = std::hypot(p.x, p.y - radius);
    if (std::abs(dc - std::abs(radius)) > robot_radius) continue;
    const double a0 = radius > 0.0 ? -M_PI / 2.0 : M_PI / 2.0;
    const double a1 = std::atan2(p.y - radius, p.x);
    const double phi = w > 0.0 ? wrap_0_2pi(a1 - a0) : wrap_0_2pi(a0 - a1);
    best = std::min(best, std::abs(radius) * phi);
  }
  return best;
}

std::vector<Vec2> scan_points(const Scan& scan) {
  std::vector<Vec2> pts;
  pts.reserve(scan.ranges.size());
  for (std::size_t k = 0; k < scan.ranges.size(); ++k) {
    if (scan.ranges[k] >= scan.max_range) continue;
    const double a = scan.angles[k];
    pts.push_back({scan.ranges[k] * std::cos(a), scan.ranges[k] * std::sin(a)});
  }
  return pts;
}

SearchSpace build_search_space(double v_curr, double w_curr, const Scan& scan,
                               const Raster* costmap, const CameraModel* cam,
                               const Vec2& goal_rel,
                               const PlannerParams& params, LimitMode mode,
                               Exec exec) {
  SearchSpace space;
  if (mode == LimitMode::modulated && costmap != nullptr && cam != nullptr)
    space.c_half = second_half_cost(v_curr, w_curr, *costmap, *cam, params);
  space.tau = mode == LimitMode::baseline ? 1.0 : std::cos(space.c_half);
  space.accel_v_lim = space.tau * params.accel_v_max;
  space.accel_w_lim = space.tau * params.accel_w_max;

  // Algorithm window: full braking authority, tau-scaled acceleration.
  space.window_v_lo = v_curr - params.accel_v_max * params.dt;
  space.window_v_hi = v_curr + space.accel_v_lim * params.dt;
  space.window_w_lo = w_curr - space.accel_w_lim * params.dt;
  space.window_w_hi = w_curr + space.accel_w_lim * params.dt;

  const std::vector<Vec2> obstacles = scan_points(scan);
  const int nv = params.grid_v, nw = params.grid_w;
  space.candidates.resize(static_cast<std::size_t>(nv) * nw);

  auto eval_candidate = [&](int idx) {
    const int iv = idx / nw, iw = idx % nw;
    VelocityCandidate& c = space.candidates[idx];
    c.v = nv == 1 ? 0.0 : params.v_max * iv / (nv - 1);
    c.w = nw == 1 ? 0.0 : -params.w_max + 2.0 * params.w_max * iw / (nw - 1);
    c.rollout = rollout(c.v, c.w, params);

    const double d_impact =
        impact_distance(c.v, c.w, obstacles, params.robot_radius);
    c.admissible =
        c.v <= std::sqrt(2.0 * d_impact * params.accel_v_max) &&
        std::abs(c.w) <= std::sqrt(2.0 * d_impact * params.accel_w_max);
    c.reachable = c.v >= space.window_v_lo && c.v <= space.window_v_hi &&
                  c.w >= space.window_w_lo && c.w <= space.window_w_hi;

    // Raw objective ingredients; normalized below over V'_r.
    const Vec2 end = c.rollout.back();
    const double end_heading = c.w * params.s_num * params.dt;
    const double bearing =
        std::atan2(goal_rel.y - end.y, goal_rel.x - end.x);
    c.head = 1.0 - std::abs(wrap_angle(bearing - end_heading)) / M_PI;

    double clear = params.clearance_clip;
    for (const auto& p : c.rollout)
      for (const auto& o : obstacles)
        clear = std::min(clear, (Vec2{p.x - o.x, p.y - o.y}).norm() -
                                    params.robot_radius);
    c.dist = std::max(0.0, clear) / params.clearance_clip;
    c.vel = c.v / params.v_max;

    if (costmap != nullptr && cam != nullptr) {
      c.trace.resize(c.rollout.size());
      for (std::size_t i = 0; i < c.rollout.size(); ++i)
        c.trace[i] = project_point(*cam, c.rollout[i]);
      c.sur = surface_cost(c.trace, *costmap);
    }
  };

  const int total = nv * nw;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < total; ++idx) eval_candidate(idx);
  } else {
    for (int idx = 0; idx < total; ++idx) eval_candidate(idx);
  }

  for (int idx = 0; idx < total; ++idx) {
    const auto& c = space.candidates[idx];
    if (c.admissible && c.reachable) space.feasible.push_back(idx);
  }

  // Classic DWA smoothing: each positive term divided by its mean over V'_r.
  if (!space.feasible.empty()) {
    double mh = 0.0, md = 0.0, mv = 0.0;
    for (const int idx : space.feasible) {
      mh += space.candidates[idx].head;
      md += space.candidates[idx].dist;
      mv += space.candidates[idx].vel;
    }
    const double n = static_cast<double>(space.feasible.size());
    mh /= n;
    md /= n;
    mv /= n;
    for (const int idx : space.feasible) {
      auto& c = space.candidates[idx];
      if (mh > 0.0) c.head /= mh;
      if (md > 0.0) c.dist /= md;
      if (mv > 0.0) c.vel /= mv;
    }
  }
  return space;
}

namespace {

PlanChoice choose_impl(const SearchSpace& space, const PlannerParams& params,
                       bool with_surface_term) {
  PlanChoice out;
  if (space.empty()) {
    out.stop = true;
    return out;
  }
  bool first = true;
  for (const int idx : space.feasible) {
    const auto& c = space.candidates[idx];
    double g = params.alpha * c.head + params.beta * c.dist + params.gamma * c.vel;
    if (with_surface_term) g -= params.delta * c.sur;
    const bool better =
        first || g > out.objective ||
        (g == out.objective &&
         (c.v > out.v || (c.v == out.v && std::abs(c.w) < std::abs(out.w))));
    if (better) {
      out.objective = g;
      out.v = c.v;
      out.w = c.w;
      out.index = idx;
      first = false;
    }
  }
  return out;
}

}  // namespace

PlanChoice choose_G2(const SearchSpace& space, const PlannerParams& params) {
  return choose_impl(space, params, true);
}

PlanChoice choose_G1(const SearchSpace& space, const PlannerParams& params) {
  return choose_impl(space, params, false);
}

}  // namespace terrapn
