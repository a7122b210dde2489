#include "terrapn/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "terrapn/rng.hpp"

namespace terrapn {

namespace {

int surface_index_by_id(const std::vector<SurfaceSpec>& surfaces, int id) {
  for (std::size_t i = 0; i < surfaces.size(); ++i)
    if (surfaces[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("world config references unknown surface id " +
                              std::to_string(id));
}

}  // namespace

WorldModel gen_world(const WorldConfig& config, std::uint64_t seed) {
  if (config.surfaces.empty())
    throw std::invalid_argument("world config needs at least one surface");
  if (config.extent_x <= 0 || config.extent_y <= 0 || config.cell_size <= 0)
    throw std::invalid_argument("world extent/cell_size must be positive");

  WorldModel w;
  w.extent_x = config.extent_x;
  w.extent_y = config.extent_y;
  w.cell_size = config.cell_size;
  w.cells_x = std::max(1, static_cast<int>(std::ceil(config.extent_x / config.cell_size)));
  w.cells_y = std::max(1, static_cast<int>(std::ceil(config.extent_y / config.cell_size)));
  w.surfaces = config.surfaces;
  w.obstacles = config.obstacles;
  w.start = config.start;
  w.goal = config.goal;
  w.seed = seed;
  w.grid.assign(static_cast<std::size_t>(w.cells_x) * w.cells_y, 0);

  const LayoutConfig& lay = config.layout;
  if (lay.kind == "uniform") {
    const int idx = surface_index_by_id(w.surfaces, lay.base_surface);
    std::fill(w.grid.begin(), w.grid.end(), idx);
  } else if (lay.kind == "split") {
    const int left = surface_index_by_id(w.surfaces, lay.left_surface);
    const int right = surface_index_by_id(w.surfaces, lay.right_surface);
    for (int cy = 0; cy < w.cells_y; ++cy)
      for (int cx = 0; cx < w.cells_x; ++cx) {
        const double x = (cx + 0.5) * w.cell_size;
        w.grid[w.cell_index(cx, cy)] = x < lay.split_at ? left : right;
      }
  } else if (lay.kind == "strips") {
    const int base = surface_index_by_id(w.surfaces, lay.base_surface);
    std::fill(w.grid.begin(), w.grid.end(), base);
    for (const auto& s : lay.strips) {
      const int idx = surface_index_by_id(w.surfaces, s.surface);
      for (int cy = 0; cy < w.cells_y; ++cy)
        for (int cx = 0; cx < w.cells_x; ++cx) {
          const double x = (cx + 0.5) * w.cell_size;
          const double y = (cy + 0.5) * w.cell_size;
          if (x >= s.x0 && x < s.x1 && y >= s.y0 && y < s.y1)
            w.grid[w.cell_index(cx, cy)] = idx;
        }
    }
  } else if (lay.kind == "blobs") {
    // Seeded Voronoi sites give contiguous blob regions.
    const int count = std::max(1, lay.blob_count);
    RandomStream rng(hash_u64(seed, 0xb10b5u));
    std::vector<Vec2> sites(count);
    std::vector<int> site_surface(count);
    for (int i = 0; i < count; ++i) {
      sites[i] = {rng.uniform(0.0, w.extent_x), rng.uniform(0.0, w.extent_y)};
      if (!lay.blob_surfaces.empty()) {
        site_surface[i] = surface_index_by_id(
            w.surfaces, lay.blob_surfaces[i % lay.blob_surfaces.size()]);
      } else {
        site_surface[i] = i % static_cast<int>(w.surfaces.size());
      }
    }
    for (int cy = 0; cy < w.cells_y; ++cy)
      for (int cx = 0; cx < w.cells_x; ++cx) {
        const Vec2 p{(cx + 0.5) * w.cell_size, (cy + 0.5) * w.cell_size};
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int i = 0; i < count; ++i) {
          const double d = (p - sites[i]).norm();
          if (d < best_d) {
            best_d = d;
            best = i;
          }
        }
        w.grid[w.cell_index(cx, cy)] = site_surface[best];
      }
  } else {
    throw std::invalid_argument("unknown layout kind: " + lay.kind);
  }

  auto inside = [&](double x, double y) {
    return x >= 0 && x <= w.extent_x && y >= 0 && y <= w.extent_y;
  };
  if (!inside(w.start.x, w.start.y))
    throw std::invalid_argument("start pose outside world extent");
  if (!inside(w.goal.x, w.goal.y))
    throw std::invalid_argument("goal outside world extent");
  for (const auto& c : w.obstacles) {
    const double ds = std::hypot(w.start.x - c.x, w.start.y - c.y);
    const double dg = std::hypot(w.goal.x - c.x, w.goal.y - c.y);
    if (ds <= c.r) throw std::invalid_argument("start pose inside an obstacle");
    if (dg <= c.r) throw std::invalid_argument("goal inside an obstacle");
  }
  return w;
}

SurfaceLookup surface_at(const WorldModel& world, double x, double y) {
  int cx = static_cast<int>(std::floor(x / world.cell_size));
  int cy = static_cast<int>(std::floor(y / world.cell_size));
  bool clamped = false;
  if (cx < 0) { cx = 0; clamped = true; }
  if (cy < 0) { cy = 0; clamped = true; }
  if (cx >= world.cells_x) { cx = world.cells_x - 1; clamped = true; }
  if (cy >= world.cells_y) { cy = world.cells_y - 1; clamped = true; }
  const int idx = world.grid[world.cell_index(cx, cy)];
  return {&world.surfaces[idx], clamped};
}

double obstacle_clearance(const WorldModel& world, double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : world.obstacles)
    best = std::min(best, std::hypot(x - c.x, y - c.y) - c.r);
  return best;
}

const std::vector<SurfaceSpec>& surface_catalog() {
  static const std::vector<SurfaceSpec> catalog = {
      {0, "concrete", 0.02, 0.02, 0.001, 0.0, {{168, 168, 172}, 6, 1.5}},
      {1, "asphalt", 0.03, 0.03, 0.002, 0.0, {{70, 70, 75}, 8, 2.0}},
      {2, "tiles", 0.05, 0.04, 0.006, 0.0, {{158, 96, 82}, 14, 6.0}},
      {3, "grass", 0.08, 0.06, 0.020, 0.1, {{62, 128, 60}, 36, 8.0}},
      {4, "leaves", 0.15, 0.10, 0.030, 0.2, {{152, 122, 44}, 46, 10.0}},
      {5, "mud", 0.70, 0.50, 0.012, 0.6, {{92, 72, 52}, 20, 3.0}},
      {6, "deep_mud", 0.93, 0.80, 0.015, 0.9, {{82, 64, 46}, 22, 3.0}},
      {7, "rocks", 0.20, 0.15, 0.045, 0.3, {{122, 120, 124}, 58, 5.0}},
      {8, "rough", 0.35, 0.25, 0.050, 0.4, {{102, 90, 70}, 68, 12.0}},
  };
  return catalog;
}

std::vector<SurfaceSpec> builtin_surfaces(const std::vector<std::string>& names) {
  std::vector<SurfaceSpec> out;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& s : surface_catalog())
      if (s.name == name) {
        out.push_back(s);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown surface name: " + name);
  }
  return out;
}

}  // namespace terrapn
