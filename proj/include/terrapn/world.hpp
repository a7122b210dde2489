#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terrapn/geometry.hpp"
#include "terrapn/surface.hpp"

namespace terrapn {

// Region layout of the surface grid.
struct LayoutConfig {
  std::string kind{"uniform"};  // uniform | split | strips | blobs
  int base_surface{0};          // uniform surface / strips background
  // split
  double split_at{0.0};  // boundary x (meters); left/right surfaces below
  int left_surface{0};
  int right_surface{0};
  // strips: axis-aligned rectangles painted over the base surface
  struct Strip {
    int surface{0};
    double x0{0}, y0{0}, x1{0}, y1{0};
  };
  std::vector<Strip> strips;
  // blobs: seeded Voronoi regions
  int blob_count{8};
  std::vector<int> blob_surfaces;  // cycled over sites; empty = all surfaces
};

struct WorldConfig {
  double extent_x{20.0};
  double extent_y{20.0};
  double cell_size{0.1};
  std::vector<SurfaceSpec> surfaces;
  LayoutConfig layout;
  std::vector<Circle> obstacles;
  Pose2 start{1.0, 1.0, 0.0};
  Vec2 goal{10.0, 10.0};
};

struct WorldModel {
  double extent_x{0.0};
  double extent_y{0.0};
  double cell_size{0.1};
  int cells_x{0};
  int cells_y{0};
  std::vector<SurfaceSpec> surfaces;
  std::vector<int> grid;  // cells_x * cells_y surface indices, row-major
  std::vector<Circle> obstacles;
  Pose2 start;
  Vec2 goal;
  std::uint64_t seed{0};

  int cell_index(int cx, int cy) const { return cy * cells_x + cx; }
};

struct SurfaceLookup {
  const SurfaceSpec* spec{nullptr};
  bool clamped{false};  // query fell outside the extent
};

// Deterministic world synthesis. Throws std::invalid_argument when the config
// is unsatisfiable (no surfaces, start/goal outside the extent or inside an
// obstacle).
WorldModel gen_world(const WorldConfig& config, std::uint64_t seed);

// Cell picked by floor(x / cell_size); out-of-extent queries clamp to the
// border cell and set `clamped`.
SurfaceLookup surface_at(const WorldModel& world, double x, double y);

// Distance from a point to the closest obstacle edge (+inf when none).
double obstacle_clearance(const WorldModel& world, double x, double y);

// Built-in surface catalog used by the bundled scenarios; `names` picks a
// subset in order.
std::vector<SurfaceSpec> builtin_surfaces(const std::vector<std::string>& names);
const std::vector<SurfaceSpec>& surface_catalog();

}  // namespace terrapn
