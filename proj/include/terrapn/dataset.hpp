#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terrapn/image.hpp"
#include "terrapn/labels.hpp"
#include "terrapn/sim.hpp"

namespace terrapn {

// One training record. surface_id_truth is diagnostics only and is never fed
// to the predictor.
struct Sample {
  std::int64_t id{0};
  double t{0.0};
  RgbImage patch;                  // n x n RGB
  std::vector<Command> vel_hist;   // past n/2 commands, oldest first
  LabelVector label{0, 0, 0, 0};
  double d_error_signed{0.0};
  double theta_error_signed{0.0};
  int surface_id_truth{0};
  std::uint64_t seed{0};
};

// On-disk layout: <dir>/index.csv plus <dir>/patches/patch_<id>.ppm.
// The CSV carries the velocity history inline so the predictor can stream
// the dataset without extra files.
void save_dataset(const std::vector<Sample>& samples, const std::string& dir);
std::vector<Sample> load_dataset(const std::string& dir);

// Seeded Fisher-Yates shuffle (reproducible).
void shuffle_dataset(std::vector<Sample>& samples, std::uint64_t seed);

// Sample count per ground-truth surface id, as (id, count) sorted by id.
std::vector<std::pair<int, std::int64_t>> dataset_summary(
    const std::vector<Sample>& samples);

}  // namespace terrapn
