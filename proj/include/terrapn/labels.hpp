#pragma once

#include <array>

#include "terrapn/sim.hpp"

namespace terrapn {

// Label vector [sigma_PC1, sigma_PC2, d_error, theta_error].
using LabelVector = std::array<double, 4>;

struct PcaVariances {
  double pc1{0.0};
  double pc2{0.0};
};

// Variances of the window data along its top two principal axes: the two
// largest eigenvalues of the 6x6 mean-centered sample covariance
// (divided by N-1). Throws std::invalid_argument for N < 2.
PcaVariances pca_variances(const ImuWindow& window);

struct OdomErrors {
  double d_error{0.0};      // ground-truth travel minus wheel-odometry travel
  double theta_error{0.0};
};

OdomErrors odom_errors(double d_loam, double theta_loam, double d_odom,
                       double theta_odom);

struct LabelOptions {
  bool use_std{false};  // report sqrt of the principal-axis variances
};

// Error components are stored as absolute values; signs are kept in the
// dataset log columns.
LabelVector make_label(const PcaVariances& pca, const OdomErrors& err,
                       const LabelOptions& opts = {});

}  // namespace terrapn
