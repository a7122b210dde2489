#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "terrapn/rng.hpp"

namespace terrapn {

struct TextureParams {
  std::array<double, 3> base_rgb{128.0, 128.0, 128.0};  // [0, 255]
  double noise_amp{0.0};   // intensity units added around the base color
  double noise_freq{1.0};  // lattice cells per meter
};

// Ground-truth physical parameters of one surface class. The simulation's
// hidden truth: the learner only ever sees renders and sensor streams.
struct SurfaceSpec {
  int id{0};
  std::string name;
  double slip_lin{0.0};       // fraction of commanded v lost to slip, [0,1]
  double slip_ang{0.0};       // fraction of commanded omega lost, [0,1]
  double bumpiness{0.0};      // vertical vibration meters per (m/s)
  double deformability{0.0};  // stuck severity, [0,1]
  TextureParams texture;
};

// Smooth seeded value noise in [0, 1].
inline double value_noise(double u, double v, std::uint64_t seed) {
  const double fu = std::floor(u), fv = std::floor(v);
  const auto iu = static_cast<std::int64_t>(fu);
  const auto iv = static_cast<std::int64_t>(fv);
  auto corner = [&](std::int64_t cu, std::int64_t cv) {
    return hash_unit(seed, static_cast<std::uint64_t>(cu),
                     static_cast<std::uint64_t>(cv));
  };
  const double du = u - fu, dv = v - fv;
  // smoothstep fade
  const double su = du * du * (3.0 - 2.0 * du);
  const double sv = dv * dv * (3.0 - 2.0 * dv);
  const double top = corner(iu, iv) + (corner(iu + 1, iv) - corner(iu, iv)) * su;
  const double bot =
      corner(iu, iv + 1) + (corner(iu + 1, iv + 1) - corner(iu, iv + 1)) * su;
  return top + (bot - top) * sv;
}

// Procedural surface color at a world point. Pure in (spec, point, seed).
inline std::array<std::uint8_t, 3> texture_rgb(const SurfaceSpec& spec,
                                               double wx, double wy,
                                               std::uint64_t world_seed) {
  const std::uint64_t tex_seed =
      hash_u64(world_seed, 0x7e58u, static_cast<std::uint64_t>(spec.id));
  const double n =
      value_noise(wx * spec.texture.noise_freq, wy * spec.texture.noise_freq,
                  tex_seed);
  const double shade = (n - 0.5) * 2.0 * spec.texture.noise_amp;
  std::array<std::uint8_t, 3> out{};
  for (int c = 0; c < 3; ++c) {
    double v = spec.texture.base_rgb[c] + shade;
    v = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
    out[c] = static_cast<std::uint8_t>(v + 0.5);
  }
  return out;
}

}  // namespace terrapn
