#include "terrapn/labels.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace terrapn {

PcaVariances pca_variances(const ImuWindow& window) {
  const int n = window.samples;
  if (n < 2) throw std::invalid_argument("pca_variances: need at least 2 samples");

  Eigen::Matrix<double, 6, 1> mean = Eigen::Matrix<double, 6, 1>::Zero();
  for (int ch = 0; ch < 6; ++ch)
    for (int i = 0; i < n; ++i) mean(ch) += window.at(ch, i);
  mean /= n;

  Eigen::Matrix<double, 6, 6> cov = Eigen::Matrix<double, 6, 6>::Zero();
  for (int i = 0; i < n; ++i) {
    Eigen::Matrix<double, 6, 1> x;
    for (int ch = 0; ch < 6; ++ch) x(ch) = window.at(ch, i) - mean(ch);
    cov += x * x.transpose();
  }
  cov /= (n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> solver(cov);
  const auto& ev = solver.eigenvalues();  // ascending
  PcaVariances out;
  out.pc1 = std::max(0.0, ev(5));
  out.pc2 = std::max(0.0, ev(4));
  return out;
}

OdomErrors odom_errors(double d_loam, double theta_loam, double d_odom,
                       double theta_odom) {
  return {d_loam - d_odom, theta_loam - theta_odom};
}

LabelVector make_label(const PcaVariances& pca, const OdomErrors& err,
                       const LabelOptions& opts) {
  const double s1 = opts.use_std ? std::sqrt(pca.pc1) : pca.pc1;
  const double s2 = opts.use_std ? std::sqrt(pca.pc2) : pca.pc2;
  return {s1, s2, std::abs(err.d_error), std::abs(err.theta_error)};
}

}  // namespace terrapn
