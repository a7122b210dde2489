#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace terrapn {

// Interleaved 8-bit RGB raster.
struct RgbImage {
  int width{0};
  int height{0};
  std::vector<std::uint8_t> data;  // 3 * width * height

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), data(3u * w * h, 0) {}

  std::array<std::uint8_t, 3> at(int x, int y) const {
    const std::size_t i = 3u * (static_cast<std::size_t>(y) * width + x);
    return {data[i], data[i + 1], data[i + 2]};
  }
  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const std::size_t i = 3u * (static_cast<std::size_t>(y) * width + x);
    data[i] = r;
    data[i + 1] = g;
    data[i + 2] = b;
  }
};

// Single-channel double raster (grayscale, gradient magnitudes, cost maps).
struct Raster {
  int width{0};
  int height{0};
  std::vector<double> data;

  Raster() = default;
  Raster(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  double at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
};

// Luma conversion, output in [0, 255].
Raster to_gray(const RgbImage& img);

RgbImage resize_bilinear(const RgbImage& img, int new_w, int new_h);
Raster resize_bilinear(const Raster& img, int new_w, int new_h);

// 3x3 Sobel gradient magnitude, rescaled to [0, 255] (border replicated).
Raster sobel_magnitude(const Raster& gray);

// Binary PPM (P6) / 16-bit PGM (P5) round trips. Throw std::runtime_error on
// malformed files.
void write_ppm(const RgbImage& img, const std::string& path);
RgbImage read_ppm(const std::string& path);
void write_pgm16(const std::vector<std::uint16_t>& values, int width,
                 int height, const std::string& path);
std::vector<std::uint16_t> read_pgm16(const std::string& path, int* width,
                                      int* height);

}  // namespace terrapn
