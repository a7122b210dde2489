#pragma once

#include <array>
#include <vector>

#include "terrapn/image.hpp"
#include "terrapn/sim.hpp"

namespace terrapn {

// Fixed patch statistics standing in for a learned image encoder, plus
// summary statistics of the velocity history.
//
// Image stream (pixels scaled to [0,1]): per-channel mean (3), per-channel
// std (3), per-channel gradient-magnitude std (3), grayscale mean |dI/dx|,
// grayscale mean |dI/dy| -> 11 values.
// Velocity stream: mean v, std v, mean |w|, std w, last v, last w -> 6.
struct FeatureVector {
  static constexpr int kImageDim = 11;
  static constexpr int kVelocityDim = 6;
  std::array<double, kImageDim> image{};
  std::array<double, kVelocityDim> velocity{};
};

FeatureVector extract_features(const RgbImage& patch,
                               const std::vector<Command>& vel_hist);

}  // namespace terrapn
