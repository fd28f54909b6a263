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

#ifndef GENLEAK_GENMODELS_TRAINERS_HPP_
#define GENLEAK_GENMODELS_TRAINERS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "genleak/genmodels/models.hpp"
#include "genleak/genmodels/train_log.hpp"
#include "genleak/numcore/optim.hpp"

namespace genleak {

inline constexpr double kLogFloor = 1e-7;

struct GanTrainConfig {
  CriticMode mode = CriticMode::kWasserstein;
  int steps = 2000;  // generator updates
  int batch_size = 64;
  int critic_steps = 5;  // critic updates per generator update
  double clip = 0.01;    // Wasserstein mode only
  double generator_lr = 1e-3;
  double critic_lr = 1e-4;
  int latent_dim = 16;
  std::vector<int> generator_hidden{128, 128};
  std::vector<int> critic_hidden{128, 128};
  Activation output_activation = Activation::kSigmoid;
  LatentPrior latent_prior = LatentPrior::kStandardNormal;
  // Off by default: behind a critic clipped to 0.01 the generator gradient
  // is small enough that a 1e-4 penalty dominates it and training stalls.
  double l2_reg = 0.0;
  std::uint64_t seed = 0;
  int checkpoint_every = 100;
  std::optional<std::filesystem::path> checkpoint_dir;

  void validate() const;
};

// Alternating GAN optimization that can be resumed on new data, which is
// what adversarial sampling needs.
class GanTrainer {
 public:
  GanTrainer(const GanTrainConfig& config, int data_dim);

  // Runs `steps` generator updates on the columns of `data`. Throws
  // DivergenceError when a loss or gradient becomes non-finite.
  void train(const Matrix& data, int steps);

  const GeneratorModel& generator() const { return generator_; }
  const CriticModel& critic() const { return critic_; }
  const TrainLog& log() const { return log_; }
  int step() const { return step_; }

 private:
  void critic_update(const Matrix& data);
  double generator_update(const Matrix& data);
  Matrix sample_batch(const Matrix& data);
  void maybe_checkpoint();

  GanTrainConfig config_;
  GeneratorModel generator_;
  CriticModel critic_;
  AdamState generator_adam_;
  AdamState critic_adam_;
  Rng rng_;
  TrainLog log_;
  int step_ = 0;
  double last_critic_loss_ = 0.0;
};

struct GanResult {
  GeneratorModel generator;
  CriticModel critic;
  TrainLog log;
};

// Wasserstein objective with weight clipping after every critic update.
GanResult train_wgan(const Matrix& data, GanTrainConfig config);
// Log-loss objective with a sigmoid critic and no clipping; the generator
// minimizes -log D(G(z)).
GanResult train_gan_vanilla(const Matrix& data, GanTrainConfig config);

// Vanilla objective E[log D(real)] + E[log(1 - D(fake))] with arguments
// floored at kLogFloor.
double vanilla_gan_objective(const Vector& d_real, const Vector& d_fake);

// Fraction of real columns scored above 1/2 and fake columns at or below it.
double critic_accuracy(const CriticModel& critic, const Matrix& real,
                       const Matrix& fake);

struct VaeTrainConfig {
  int steps = 2000;
  int batch_size = 64;
  double learning_rate = 1e-3;
  int latent_dim = 16;
  std::vector<int> encoder_hidden{128, 128};
  std::vector<int> decoder_hidden{128, 128};
  Activation output_activation = Activation::kSigmoid;
  // Standard deviation of the isotropic Gaussian likelihood p(x|z); the
  // reconstruction term is ||x - g(z)||^2 / (2 sigma^2).
  double observation_stddev = 0.1;
  double l2_reg = 1e-4;
  std::uint64_t seed = 0;
  int checkpoint_every = 100;
  std::optional<std::filesystem::path> checkpoint_dir;

  void validate() const;
};

class VaeTrainer {
 public:
  VaeTrainer(const VaeTrainConfig& config, int data_dim);

  // Minimizes squared-error reconstruction plus the Gaussian KL term.
  void train(const Matrix& data, int steps);

  const VaeModel& model() const { return model_; }
  const TrainLog& log() const { return log_; }
  int step() const { return step_; }

 private:
  VaeTrainConfig config_;
  VaeModel model_;
  AdamState encoder_adam_;
  AdamState decoder_adam_;
  Rng rng_;
  TrainLog log_;
  int step_ = 0;
};

struct VaeResult {
  VaeModel model;
  TrainLog log;
};

VaeResult train_vae(const Matrix& data, const VaeTrainConfig& config);

}  // namespace genleak

#endif  // GENLEAK_GENMODELS_TRAINERS_HPP_
