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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "genleak/genmodels/trainers.hpp"
#include "genleak/numcore/errors.hpp"

namespace genleak {
namespace {

NetworkSpec chain(int in, const std::vector<int>& hidden, int out,
                  Activation output_activation, double l2) {
  NetworkSpec spec;
  spec.layer_sizes.push_back(in);
  spec.layer_sizes.insert(spec.layer_sizes.end(), hidden.begin(), hidden.end());
  spec.layer_sizes.push_back(out);
  spec.hidden_activation = Activation::kRelu;
  spec.output_activation = output_activation;
  spec.l2_reg_coeff = l2;
  spec.validate();
  return spec;
}

void require_finite(double value, const char* what, int step) {
  if (!std::isfinite(value)) {
    throw DivergenceError(std::string(what) + " became non-finite at step " +
                          std::to_string(step));
  }
}

std::string step_name(const char* role, int step) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_step_%06d.glnk", role, step);
  return buf;
}

}  // namespace

void GanTrainConfig::validate() const {
  if (steps < 0) throw ValidationError("steps must be nonnegative");
  if (batch_size < 1) throw ValidationError("batch_size must be positive");
  if (critic_steps < 1) throw ValidationError("critic_steps must be positive");
  if (mode == CriticMode::kWasserstein && !(clip > 0.0)) {
    throw ValidationError("clip constant must be positive");
  }
  if (!(generator_lr > 0.0) || !(critic_lr > 0.0)) {
    throw ValidationError("learning rates must be positive");
  }
  if (latent_dim < 1) throw ValidationError("latent_dim must be positive");
  if (!(l2_reg >= 0.0)) throw ValidationError("l2_reg must be nonnegative");
  if (checkpoint_every < 0) {
    throw ValidationError("checkpoint_every must be nonnegative");
  }
}

GanTrainer::GanTrainer(const GanTrainConfig& config, int data_dim)
    : config_(config), rng_(derive_seed(config.seed, 3)) {
  config_.validate();
  if (data_dim < 1) throw ValidationError("data dimension must be positive");

  generator_.spec = chain(config_.latent_dim, config_.generator_hidden, data_dim,
                          config_.output_activation, config_.l2_reg);
  generator_.params = init_params(generator_.spec, derive_seed(config_.seed, 1));
  generator_.latent_dim = config_.latent_dim;
  generator_.latent_prior = config_.latent_prior;

  critic_.mode = config_.mode;
  critic_.spec = chain(data_dim, config_.critic_hidden, 1,
                       config_.mode == CriticMode::kVanilla
                           ? Activation::kSigmoid
                           : Activation::kIdentity,
                       config_.l2_reg);
  critic_.params = init_params(critic_.spec, derive_seed(config_.seed, 2));
  if (config_.mode == CriticMode::kWasserstein) {
    clip_weights(critic_.params.span(), config_.clip);
  }

  generator_adam_ = AdamState(generator_.params.size(), config_.generator_lr);
  critic_adam_ = AdamState(critic_.params.size(), config_.critic_lr);
}

Matrix GanTrainer::sample_batch(const Matrix& data) {
  std::uniform_int_distribution<Eigen::Index> pick(0, data.cols() - 1);
  Matrix batch(data.rows(), config_.batch_size);
  for (Eigen::Index j = 0; j < batch.cols(); ++j) batch.col(j) = data.col(pick(rng_));
  return batch;
}

void GanTrainer::critic_update(const Matrix& data) {
  const int b = config_.batch_size;
  const Matrix real = sample_batch(data);
  const Matrix z = sample_latent(config_.latent_prior, config_.latent_dim, b, rng_);
  const Matrix fake = predict(generator_.spec, generator_.params, z);

  Matrix both(real.rows(), 2 * b);
  both << real, fake;
  const Tape tape = forward(critic_.spec, critic_.params, both);
  const Matrix& out = tape.output();

  Matrix grad_out(1, 2 * b);
  double loss = 0.0;
  if (config_.mode == CriticMode::kWasserstein) {
    // The critic ascends E[D(real)] - E[D(fake)]; we descend its negation.
    const double real_mean = out.leftCols(b).mean();
    const double fake_mean = out.rightCols(b).mean();
    loss = -(real_mean - fake_mean);
    grad_out.leftCols(b).setConstant(-1.0 / b);
    grad_out.rightCols(b).setConstant(1.0 / b);
  } else {
    loss = -vanilla_gan_objective(out.leftCols(b).transpose(),
                                  out.rightCols(b).transpose());
    for (int j = 0; j < b; ++j) {
      const double dr = out(0, j);
      const double df = out(0, b + j);
      grad_out(0, j) = dr > kLogFloor ? -1.0 / (b * dr) : 0.0;
      grad_out(0, b + j) = 1.0 - df > kLogFloor ? 1.0 / (b * (1.0 - df)) : 0.0;
    }
  }
  Gradients g = backward(critic_.spec, critic_.params, tape, grad_out);
  loss += add_l2_penalty(critic_.spec, critic_.params, g.params);
  require_finite(loss, "critic loss", step_);
  adam_step(critic_.params, g.params, critic_adam_);
  if (config_.mode == CriticMode::kWasserstein) {
    clip_weights(critic_.params.span(), config_.clip);
  }
  last_critic_loss_ = loss;
}

double GanTrainer::generator_update(const Matrix& data) {
  const int b = config_.batch_size;
  const Matrix z = sample_latent(config_.latent_prior, config_.latent_dim, b, rng_);
  const Tape gen_tape = forward(generator_.spec, generator_.params, z);
  const Tape critic_tape = forward(critic_.spec, critic_.params, gen_tape.output());
  const Matrix& out = critic_tape.output();

  Matrix grad_out(1, b);
  double loss = 0.0;
  if (config_.mode == CriticMode::kWasserstein) {
    // Logged as the full objective E[D(real)] - E[D(fake)]; the real term
    // has no generator gradient but makes the series a distance estimate.
    const Matrix real = sample_batch(data);
    loss = predict(critic_.spec, critic_.params, real).mean() - out.mean();
    grad_out.setConstant(-1.0 / b);
  } else {
    for (int j = 0; j < b; ++j) {
      const double d = out(0, j);
      loss -= std::log(std::max(d, kLogFloor)) / b;
      grad_out(0, j) = d > kLogFloor ? -1.0 / (b * d) : 0.0;
    }
  }
  const Gradients through_critic =
      backward(critic_.spec, critic_.params, critic_tape, grad_out, false);
  Gradients g = backward(generator_.spec, generator_.params, gen_tape,
                         through_critic.input);
  const double total =
      loss + add_l2_penalty(generator_.spec, generator_.params, g.params);
  require_finite(total, "generator loss", step_);
  adam_step(generator_.params, g.params, generator_adam_);
  return loss;
}

void GanTrainer::maybe_checkpoint() {
  if (config_.checkpoint_every == 0 || step_ % config_.checkpoint_every != 0) {
    return;
  }
  log_.checkpoint_steps.push_back(step_);
  if (config_.checkpoint_dir) {
    save_generator(*config_.checkpoint_dir / step_name("generator", step_),
                   generator_);
    save_critic(*config_.checkpoint_dir / step_name("critic", step_), critic_);
  }
}

void GanTrainer::train(const Matrix& data, int steps) {
  if (data.cols() == 0) throw ValidationError("training data is empty");
  if (data.rows() != generator_.data_dim()) {
    throw DimensionError("training data dimension does not match the generator");
  }
  for (int s = 0; s < steps; ++s) {
    for (int c = 0; c < config_.critic_steps; ++c) critic_update(data);
    const double gen_loss = generator_update(data);
    ++step_;
    log_.append({step_, gen_loss, last_critic_loss_, 0.0});
    maybe_checkpoint();
  }
}

GanResult train_wgan(const Matrix& data, GanTrainConfig config) {
  config.mode = CriticMode::kWasserstein;
  GanTrainer trainer(config, static_cast<int>(data.rows()));
  trainer.train(data, config.steps);
  return {trainer.generator(), trainer.critic(), trainer.log()};
}

GanResult train_gan_vanilla(const Matrix& data, GanTrainConfig config) {
  config.mode = CriticMode::kVanilla;
  GanTrainer trainer(config, static_cast<int>(data.rows()));
  trainer.train(data, config.steps);
  return {trainer.generator(), trainer.critic(), trainer.log()};
}

double vanilla_gan_objective(const Vector& d_real, const Vector& d_fake) {
  double real_term = 0.0;
  for (double d : d_real) real_term += std::log(std::max(d, kLogFloor));
  double fake_term = 0.0;
  for (double d : d_fake) fake_term += std::log(std::max(1.0 - d, kLogFloor));
  return real_term / static_cast<double>(d_real.size()) +
         fake_term / static_cast<double>(d_fake.size());
}

double critic_accuracy(const CriticModel& critic, const Matrix& real,
                       const Matrix& fake) {
  const Matrix r = predict(critic.spec, critic.params, real);
  const Matrix f = predict(critic.spec, critic.params, fake);
  const double cut = critic.mode == CriticMode::kVanilla ? 0.5 : 0.0;
  const auto correct = (r.array() > cut).count() + (f.array() <= cut).count();
  return static_cast<double>(correct) / static_cast<double>(r.cols() + f.cols());
}

}  // namespace genleak
