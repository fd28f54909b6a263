// Copyright 2026 The genleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENLEAK_METRICS_GENERALIZATION_HPP_
#define GENLEAK_METRICS_GENERALIZATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "genleak/attacks/attacks.hpp"
#include "genleak/genmodels/trainers.hpp"

namespace genleak {

struct GapReport {
  double mean_train_loss = 0.0;
  double mean_test_loss = 0.0;
  double gap = 0.0;  // mean_test_loss - mean_train_loss
  std::vector<double> train_losses;
  std::vector<double> test_losses;
  // Sample standard deviations; zero for a single instance.
  double train_std = 0.0;
  double test_std = 0.0;
};

// Single attack on every column of both samples. Column i of either sample is
// attacked with seed derive_seed(config.seed, i), so equal samples give a
// gap of exactly zero and swapping the samples negates it.
GapReport generalization_gap(const GeneratorModel& generator,
                             const Matrix& train_sample,
                             const Matrix& test_sample,
                             const AttackConfig& config, int threads = 1);

struct CurvePoint {
  int step = 0;
  double train_loss = 0.0;
  double test_loss = 0.0;
  double train_std = 0.0;
  double test_std = 0.0;
};

struct LearningCurveOptions {
  std::vector<int> probe_steps;  // increasing, within the training budget
  int probe_size = 32;           // per side, capped by the sample sizes
  std::uint64_t probe_seed = 0;
  int threads = 1;
};

// Trains a WGAN on `train` and, at every probe step, attacks fixed probe
// subsets of `train` and `test`. The probe subsets are drawn once and keep
// their column order, so a probe covering identical samples gives identical
// series.
std::vector<CurvePoint> learning_curve(const Matrix& train, const Matrix& test,
                                       const GanTrainConfig& train_config,
                                       const AttackConfig& attack_config,
                                       const LearningCurveOptions& options);

// step,train_loss,test_loss,train_std,test_std
std::string learning_curve_to_csv(const std::vector<CurvePoint>& curve);

// Mean of `values` over consecutive windows of `window` entries; a trailing
// partial window is averaged over what it holds.
std::vector<double> windowed_means(const std::vector<double>& values, int window);

// Spearman rank correlation with average ranks for ties. Returns 0 when
// either series is constant.
double spearman_correlation(const std::vector<double>& a,
                            const std::vector<double>& b);

}  // namespace genleak

#endif  // GENLEAK_METRICS_GENERALIZATION_HPP_
