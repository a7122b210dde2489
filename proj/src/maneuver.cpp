#include "terrapn/maneuver.hpp"

#include <cmath>

#include "terrapn/rng.hpp"

namespace terrapn {

Command ManeuverPlan::command_at(double t) const {
  double acc = 0.0;
  for (const auto& tc : commands) {
    acc += tc.hold;
    if (t < acc) return tc.cmd;
  }
  return commands.empty() ? Command{} : commands.back().cmd;
}

namespace {

void band_limits(SpeedBand band, const ManeuverLimits& lim, double* bv,
                 double* bw) {
  *bv = band == SpeedBand::slow ? lim.v_max / 2.0 : lim.v_max;
  *bw = band == SpeedBand::slow ? lim.w_max / 2.0 : lim.w_max;
}

ManeuverPlan rectangle_plan(SpeedBand band, const ManeuverLimits& lim,
                            const ManeuverShape& shape) {
  ManeuverPlan plan;
  plan.kind = ManeuverKind::rectangle;
  plan.band = band;
  double bv, bw;
  band_limits(band, lim, &bv, &bw);
  const double v_leg = 0.8 * bv;
  const double w_turn = 0.7 * bw;
  const double turn_s = (M_PI / 2.0) / w_turn;
  for (int leg = 0; leg < 4; ++leg) {
    plan.commands.push_back({{v_leg, 0.0}, shape.leg_s});
    plan.commands.push_back({{0.0, w_turn}, turn_s});
  }
  for (const auto& tc : plan.commands) plan.duration += tc.hold;
  return plan;
}

ManeuverPlan serpentine_plan(SpeedBand band, const ManeuverLimits& lim,
                             const ManeuverShape& shape) {
  ManeuverPlan plan;
  plan.kind = ManeuverKind::serpentine;
  plan.band = band;
  double bv, bw;
  band_limits(band, lim, &bv, &bw);
  const double v = 0.7 * bv;
  const double w_amp = 0.9 * bw;
  const int ticks = static_cast<int>(shape.serp_duration_s / shape.tick_s);
  for (int i = 0; i < ticks; ++i) {
    const double t = i * shape.tick_s;
    const double w = w_amp * std::sin(2.0 * M_PI * t / shape.serp_period_s);
    plan.commands.push_back({{v, w}, shape.tick_s});
  }
  plan.duration = ticks * shape.tick_s;
  return plan;
}

ManeuverPlan random_plan(SpeedBand band, const ManeuverLimits& lim,
                         const ManeuverShape& shape, std::uint64_t seed) {
  ManeuverPlan plan;
  plan.kind = ManeuverKind::random;
  plan.band = band;
  double bv, bw;
  band_limits(band, lim, &bv, &bw);

  // One draw per coverage cell of the full velocity grid that intersects the
  // band box; shuffled order, jittered within the cell.
  const double cell_v = 0.1 * lim.v_max;
  const double cell_w = 0.1 * lim.w_max;
  const int nv = 10, nw = 20;
  std::vector<std::pair<int, int>> cells;
  for (int iv = 0; iv < nv; ++iv)
    for (int iw = 0; iw < nw; ++iw) {
      const double v_lo = iv * cell_v;
      const double w_lo = -lim.w_max + iw * cell_w;
      if (v_lo >= bv - 1e-12) continue;
      if (w_lo >= bw - 1e-12 || w_lo + cell_w <= -bw + 1e-12) continue;
      cells.emplace_back(iv, iw);
    }
  RandomStream rng(hash_u64(seed, 0x3a2d, static_cast<std::uint64_t>(band)));
  rng.shuffle(cells);
  for (const auto& [iv, iw] : cells) {
    const double v_lo = iv * cell_v;
    const double w_lo = -lim.w_max + iw * cell_w;
    const double v_hi = std::min(v_lo + cell_v, bv);
    const double w_hi = std::min(w_lo + cell_w, bw);
    const double w_lo_c = std::max(w_lo, -bw);
    plan.commands.push_back(
        {{rng.uniform(v_lo, v_hi), rng.uniform(w_lo_c, w_hi)},
         shape.random_hold_s});
  }
  plan.duration = cells.size() * shape.random_hold_s;
  return plan;
}

}  // namespace

ManeuverPlan generate_maneuver(ManeuverKind kind, SpeedBand band,
                               std::uint64_t seed,
                               const ManeuverLimits& limits,
                               const ManeuverShape& shape) {
  switch (kind) {
    case ManeuverKind::rectangle:
      return rectangle_plan(band, limits, shape);
    case ManeuverKind::serpentine:
      return serpentine_plan(band, limits, shape);
    case ManeuverKind::random:
      return random_plan(band, limits, shape, seed);
  }
  return {};
}

std::vector<ManeuverPlan> all_maneuver_plans(std::uint64_t seed,
                                             const ManeuverLimits& limits,
                                             const ManeuverShape& shape) {
  std::vector<ManeuverPlan> plans;
  for (const auto kind : {ManeuverKind::rectangle, ManeuverKind::serpentine,
                          ManeuverKind::random})
    for (const auto band : {SpeedBand::slow, SpeedBand::fast})
      plans.push_back(generate_maneuver(kind, band, seed, limits, shape));
  return plans;
}

std::string maneuver_kind_name(ManeuverKind k) {
  switch (k) {
    case ManeuverKind::rectangle: return "rectangle";
    case ManeuverKind::serpentine: return "serpentine";
    case ManeuverKind::random: return "random";
  }
  return "?";
}

std::string speed_band_name(SpeedBand b) {
  return b == SpeedBand::slow ? "slow" : "fast";
}

}  // namespace terrapn
