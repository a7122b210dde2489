#include "terrapn/features.hpp"

#include <cmath>
#include <stdexcept>

namespace terrapn {

namespace {

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (const double x : v) s += x;
  return s / v.size();
}

double std_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (const double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / v.size());
}

}  // namespace

FeatureVector extract_features(const RgbImage& patch,
                               const std::vector<Command>& vel_hist) {
  if (patch.width < 2 || patch.height < 2)
    throw std::invalid_argument("extract_features: patch too small");
  FeatureVector f;

  const int w = patch.width, h = patch.height;
  const double npx = static_cast<double>(w) * h;
  double mean[3] = {0, 0, 0}, var[3] = {0, 0, 0};
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const auto px = patch.at(x, y);
      for (int c = 0; c < 3; ++c) mean[c] += px[c] / 255.0;
    }
  for (int c = 0; c < 3; ++c) mean[c] /= npx;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const auto px = patch.at(x, y);
      for (int c = 0; c < 3; ++c) {
        const double d = px[c] / 255.0 - mean[c];
        var[c] += d * d;
      }
    }

  // Per-channel gradient magnitude (forward differences) and grayscale
  // horizontal/vertical absolute gradients.
  double grad_sum[3] = {0, 0, 0}, grad_sq[3] = {0, 0, 0};
  double gx_abs = 0.0, gy_abs = 0.0;
  const double ng = static_cast<double>(w - 1) * (h - 1);
  auto gray = [&](int x, int y) {
    const auto px = patch.at(x, y);
    return (0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2]) / 255.0;
  };
  for (int y = 0; y < h - 1; ++y)
    for (int x = 0; x < w - 1; ++x) {
      const auto p = patch.at(x, y);
      const auto pr = patch.at(x + 1, y);
      const auto pd = patch.at(x, y + 1);
      for (int c = 0; c < 3; ++c) {
        const double dx = (pr[c] - p[c]) / 255.0;
        const double dy = (pd[c] - p[c]) / 255.0;
        const double g = std::hypot(dx, dy);
        grad_sum[c] += g;
        grad_sq[c] += g * g;
      }
      gx_abs += std::abs(gray(x + 1, y) - gray(x, y));
      gy_abs += std::abs(gray(x, y + 1) - gray(x, y));
    }

  for (int c = 0; c < 3; ++c) {
    f.image[c] = mean[c];
    f.image[3 + c] = std::sqrt(var[c] / npx);
    const double gm = grad_sum[c] / ng;
    f.image[6 + c] = std::sqrt(std::max(0.0, grad_sq[c] / ng - gm * gm));
  }
  f.image[9] = gx_abs / ng;
  f.image[10] = gy_abs / ng;

  std::vector<double> vs, ws, ws_abs;
  vs.reserve(vel_hist.size());
  for (const auto& c : vel_hist) {
    vs.push_back(c.v);
    ws.push_back(c.w);
    ws_abs.push_back(std::abs(c.w));
  }
  f.velocity[0] = mean_of(vs);
  f.velocity[1] = std_of(vs);
  f.velocity[2] = mean_of(ws_abs);
  f.velocity[3] = std_of(ws);
  f.velocity[4] = vel_hist.empty() ? 0.0 : vel_hist.back().v;
  f.velocity[5] = vel_hist.empty() ? 0.0 : vel_hist.back().w;
  return f;
}

}  // namespace terrapn
