#include "terrapn/dataset.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "terrapn/rng.hpp"

namespace terrapn {

namespace {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

void save_dataset(const std::vector<Sample>& samples, const std::string& dir) {
  fs::create_directories(fs::path(dir) / "patches");
  std::ofstream idx(fs::path(dir) / "index.csv");
  if (!idx) throw std::runtime_error("cannot write dataset index in " + dir);
  idx << "id,t,surface_id,seed,sigma_pc1,sigma_pc2,d_error,theta_error,"
         "d_error_signed,theta_error_signed,patch_file,vel_hist\n";
  for (const auto& s : samples) {
    char name[64];
    std::snprintf(name, sizeof(name), "patch_%08" PRId64 ".ppm", s.id);
    write_ppm(s.patch, (fs::path(dir) / "patches" / name).string());
    idx << s.id << ',' << fmt_double(s.t) << ',' << s.surface_id_truth << ','
        << s.seed << ',' << fmt_double(s.label[0]) << ','
        << fmt_double(s.label[1]) << ',' << fmt_double(s.label[2]) << ','
        << fmt_double(s.label[3]) << ',' << fmt_double(s.d_error_signed) << ','
        << fmt_double(s.theta_error_signed) << ',' << name;
    for (const auto& c : s.vel_hist)
      idx << ',' << fmt_double(c.v) << ',' << fmt_double(c.w);
    idx << '\n';
  }
}

std::vector<Sample> load_dataset(const std::string& dir) {
  std::ifstream idx(fs::path(dir) / "index.csv");
  if (!idx) throw std::runtime_error("dataset index not found in " + dir);
  std::string line;
  if (!std::getline(idx, line))
    throw std::runtime_error("empty dataset index in " + dir);
  std::vector<Sample> out;
  while (std::getline(idx, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() < 11 || (f.size() - 11) % 2 != 0)
      throw std::runtime_error("malformed dataset row: " + line);
    Sample s;
    s.id = std::stoll(f[0]);
    s.t = std::stod(f[1]);
    s.surface_id_truth = std::stoi(f[2]);
    s.seed = std::stoull(f[3]);
    s.label = {std::stod(f[4]), std::stod(f[5]), std::stod(f[6]),
               std::stod(f[7])};
    s.d_error_signed = std::stod(f[8]);
    s.theta_error_signed = std::stod(f[9]);
    s.patch = read_ppm((fs::path(dir) / "patches" / f[10]).string());
    for (std::size_t i = 11; i + 1 < f.size(); i += 2)
      s.vel_hist.push_back({std::stod(f[i]), std::stod(f[i + 1])});
    out.push_back(std::move(s));
  }
  return out;
}

void shuffle_dataset(std::vector<Sample>& samples, std::uint64_t seed) {
  RandomStream rng(hash_u64(seed, 0xda7a));
  rng.shuffle(samples);
}

std::vector<std::pair<int, std::int64_t>> dataset_summary(
    const std::vector<Sample>& samples) {
  std::map<int, std::int64_t> counts;
  for (const auto& s : samples) counts[s.surface_id_truth]++;
  return {counts.begin(), counts.end()};
}

}  // namespace terrapn
