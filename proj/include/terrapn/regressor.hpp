#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "terrapn/dataset.hpp"
#include "terrapn/features.hpp"
#include "terrapn/labels.hpp"

namespace terrapn {

// Two-stream regressor: an affine+tanh encoder per stream, concatenated
// embeddings through one hidden layer, four softplus outputs scaled back to
// label units. All parameters live in one flat vector (row-major layout per
// layer) so training, the gradient check and serialization share one view.
struct RegressorModel {
  static constexpr int kImgIn = FeatureVector::kImageDim;   // 11
  static constexpr int kVelIn = FeatureVector::kVelocityDim;  // 6
  static constexpr int kImgEmb = 16;
  static constexpr int kVelEmb = 8;
  static constexpr int kHidden = 16;
  static constexpr int kOut = 4;

  std::vector<double> params;  // see layout offsets in regressor.cpp
  std::array<double, kImgIn + kVelIn> in_mean{};
  std::array<double, kImgIn + kVelIn> in_std{};
  std::array<double, kOut> label_mean{};
  std::array<double, kOut> label_scale{};
  std::int64_t train_steps{0};
  bool trained{false};

  static std::size_t parameter_count();
};

RegressorModel make_regressor(std::uint64_t seed);

struct TrainConfig {
  double learning_rate{1e-2};
  double momentum{0.9};
  int batch_size{32};
  int warmup{256};          // minimum buffered samples before SGD starts
  int chunk{64};            // samples streamed in per online round
  int steps_per_round{40};  // SGD steps after each appended chunk
  int final_passes{30};     // full-buffer epochs once the stream is drained
  double holdout_fraction{0.1};
  int eval_every{50};
  double divergence_factor{10.0};
  std::uint64_t seed{1};
};

struct FeatureSample {
  FeatureVector features;
  LabelVector label{0, 0, 0, 0};
  int surface_id{0};
};

struct TrainResult {
  RegressorModel model;
  std::vector<std::pair<std::int64_t, double>> loss_curve;  // (step, holdout)
  double initial_loss{0.0};
  double final_loss{0.0};
  bool diverged{false};
  std::vector<FeatureSample> holdout;
  std::vector<FeatureSample> training;
};

// Online training: shuffles, holds out a split, standardizes on the warm-up
// buffer, then interleaves chunk appends with mini-batch SGD (momentum).
// Deterministic per config.seed. Throws if fewer than warmup+1 samples.
TrainResult train_on_features(const std::vector<FeatureSample>& data,
                              const TrainConfig& config);
TrainResult train_online(const std::vector<Sample>& samples,
                         const TrainConfig& config);

// Elementwise nonnegative prediction in label units. Throws on an untrained
// model.
LabelVector predict_features(const RegressorModel& model,
                             const FeatureVector& f);
LabelVector predict(const RegressorModel& model, const RgbImage& patch,
                    const std::vector<Command>& vel_hist);

// Mean standardized squared error over a set.
double evaluate_loss(const RegressorModel& model,
                     const std::vector<FeatureSample>& data);

// Analytic gradient of the single-sample loss for the gradient check.
std::vector<double> loss_gradient(const RegressorModel& model,
                                  const FeatureSample& sample);
double sample_loss(const RegressorModel& model, const FeatureSample& sample);

}  // namespace terrapn
