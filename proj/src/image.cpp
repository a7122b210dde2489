#include "terrapn/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace terrapn {

Raster to_gray(const RgbImage& img) {
  Raster out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const auto px = img.at(x, y);
      out.at(x, y) = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
    }
  }
  return out;
}

namespace {

inline int clampi(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

// Pixel-center aligned source coordinate for bilinear sampling.
inline void bilinear_coords(int dst, int dst_size, int src_size, int* i0,
                            int* i1, double* frac) {
  const double scale = static_cast<double>(src_size) / dst_size;
  double s = (dst + 0.5) * scale - 0.5;
  if (s < 0.0) s = 0.0;
  const double smax = src_size - 1.0;
  if (s > smax) s = smax;
  *i0 = static_cast<int>(s);
  *i1 = std::min(*i0 + 1, src_size - 1);
  *frac = s - *i0;
}

}  // namespace

RgbImage resize_bilinear(const RgbImage& img, int new_w, int new_h) {
  if (new_w <= 0 || new_h <= 0) throw std::invalid_argument("resize: empty target");
  if (new_w == img.width && new_h == img.height) return img;
  RgbImage out(new_w, new_h);
  for (int y = 0; y < new_h; ++y) {
    int y0, y1;
    double fy;
    bilinear_coords(y, new_h, img.height, &y0, &y1, &fy);
    for (int x = 0; x < new_w; ++x) {
      int x0, x1;
      double fx;
      bilinear_coords(x, new_w, img.width, &x0, &x1, &fx);
      const auto p00 = img.at(x0, y0), p10 = img.at(x1, y0);
      const auto p01 = img.at(x0, y1), p11 = img.at(x1, y1);
      for (int c = 0; c < 3; ++c) {
        const double top = p00[c] + (p10[c] - p00[c]) * fx;
        const double bot = p01[c] + (p11[c] - p01[c]) * fx;
        const double v = top + (bot - top) * fy;
        out.data[3u * (static_cast<std::size_t>(y) * new_w + x) + c] =
            static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
      }
    }
  }
  return out;
}

Raster resize_bilinear(const Raster& img, int new_w, int new_h) {
  if (new_w <= 0 || new_h <= 0) throw std::invalid_argument("resize: empty target");
  if (new_w == img.width && new_h == img.height) return img;
  Raster out(new_w, new_h);
  for (int y = 0; y < new_h; ++y) {
    int y0, y1;
    double fy;
    bilinear_coords(y, new_h, img.height, &y0, &y1, &fy);
    for (int x = 0; x < new_w; ++x) {
      int x0, x1;
      double fx;
      bilinear_coords(x, new_w, img.width, &x0, &x1, &fx);
      const double top = img.at(x0, y0) + (img.at(x1, y0) - img.at(x0, y0)) * fx;
      const double bot = img.at(x0, y1) + (img.at(x1, y1) - img.at(x0, y1)) * fx;
      out.at(x, y) = top + (bot - top) * fy;
    }
  }
  return out;
}

Raster sobel_magnitude(const Raster& gray) {
  Raster out(gray.width, gray.height);
  const int w = gray.width, h = gray.height;
  // max |gx| = 4*255, magnitude rescaled so the output stays within [0, 255]
  const double scale = 1.0 / (4.0 * std::sqrt(2.0));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      auto v = [&](int xx, int yy) {
        return gray.at(clampi(xx, 0, w - 1), clampi(yy, 0, h - 1));
      };
      const double gx = (v(x + 1, y - 1) + 2.0 * v(x + 1, y) + v(x + 1, y + 1)) -
                        (v(x - 1, y - 1) + 2.0 * v(x - 1, y) + v(x - 1, y + 1));
      const double gy = (v(x - 1, y + 1) + 2.0 * v(x, y + 1) + v(x + 1, y + 1)) -
                        (v(x - 1, y - 1) + 2.0 * v(x, y - 1) + v(x + 1, y - 1));
      out.at(x, y) = std::hypot(gx, gy) * scale;
    }
  }
  return out;
}

void write_ppm(const RgbImage& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << "P6\n" << img.width << " " << img.height << "\n255\n";
  f.write(reinterpret_cast<const char*>(img.data.data()),
          static_cast<std::streamsize>(img.data.size()));
  if (!f) throw std::runtime_error("short write: " + path);
}

namespace {

int next_pnm_int(std::istream& f) {
  int c = f.get();
  while (c == '#' || std::isspace(c)) {
    if (c == '#') {
      while (c != '\n' && c != EOF) c = f.get();
    }
    c = f.get();
  }
  int value = 0;
  bool any = false;
  while (std::isdigit(c)) {
    value = value * 10 + (c - '0');
    any = true;
    c = f.get();
  }
  if (!any) throw std::runtime_error("malformed PNM header");
  return value;
}

}  // namespace

RgbImage read_ppm(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  char m0 = 0, m1 = 0;
  f.get(m0);
  f.get(m1);
  if (m0 != 'P' || m1 != '6') throw std::runtime_error("not a P6 PPM: " + path);
  const int w = next_pnm_int(f);
  const int h = next_pnm_int(f);
  const int maxval = next_pnm_int(f);
  if (w <= 0 || h <= 0 || maxval != 255)
    throw std::runtime_error("unsupported PPM: " + path);
  RgbImage img(w, h);
  f.read(reinterpret_cast<char*>(img.data.data()),
         static_cast<std::streamsize>(img.data.size()));
  if (f.gcount() != static_cast<std::streamsize>(img.data.size()))
    throw std::runtime_error("truncated PPM: " + path);
  return img;
}

void write_pgm16(const std::vector<std::uint16_t>& values, int width,
                 int height, const std::string& path) {
  if (static_cast<std::size_t>(width) * height != values.size())
    throw std::invalid_argument("pgm16: size mismatch");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << "P5\n" << width << " " << height << "\n65535\n";
  for (const std::uint16_t v : values) {
    // big-endian per PGM spec
    f.put(static_cast<char>(v >> 8));
    f.put(static_cast<char>(v & 0xff));
  }
  if (!f) throw std::runtime_error("short write: " + path);
}

std::vector<std::uint16_t> read_pgm16(const std::string& path, int* width,
                                      int* height) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  char m0 = 0, m1 = 0;
  f.get(m0);
  f.get(m1);
  if (m0 != 'P' || m1 != '5') throw std::runtime_error("not a P5 PGM: " + path);
  const int w = next_pnm_int(f);
  const int h = next_pnm_int(f);
  const int maxval = next_pnm_int(f);
  if (w <= 0 || h <= 0 || maxval != 65535)
    throw std::runtime_error("unsupported PGM: " + path);
  std::vector<std::uint16_t> out(static_cast<std::size_t>(w) * h);
  for (auto& v : out) {
    const int hi = f.get(), lo = f.get();
    if (lo == EOF) throw std::runtime_error("truncated PGM: " + path);
    v = static_cast<std::uint16_t>((hi << 8) | lo);
  }
  if (width) *width = w;
  if (height) *height = h;
  return out;
}

}  // namespace terrapn
