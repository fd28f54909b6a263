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

}  // namespace

void VaeTrainConfig::validate() const {
  if (steps < 0) throw ValidationError("steps must be nonnegative");
  if (batch_size < 1) throw ValidationError("batch_size must be positive");
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be positive");
  if (!(observation_stddev > 0.0)) {
    throw ValidationError("observation_stddev must be positive");
  }
  if (latent_dim < 1) throw ValidationError("latent_dim must be positive");
  if (!(l2_reg >= 0.0)) throw ValidationError("l2_reg must be nonnegative");
  if (checkpoint_every < 0) {
    throw ValidationError("checkpoint_every must be nonnegative");
  }
}

VaeTrainer::VaeTrainer(const VaeTrainConfig& config, int data_dim)
    : config_(config), rng_(derive_seed(config.seed, 3)) {
  config_.validate();
  if (data_dim < 1) throw ValidationError("data dimension must be positive");
  const int k = config_.latent_dim;
  model_.latent_dim = k;
  model_.encoder_spec = chain(data_dim, config_.encoder_hidden, 2 * k,
                              Activation::kIdentity, config_.l2_reg);
  model_.decoder_spec = chain(k, config_.decoder_hidden, data_dim,
                              config_.output_activation, config_.l2_reg);
  model_.encoder_params = init_params(model_.encoder_spec, derive_seed(config_.seed, 1));
  model_.decoder_params = init_params(model_.decoder_spec, derive_seed(config_.seed, 2));
  encoder_adam_ = AdamState(model_.encoder_params.size(), config_.learning_rate);
  decoder_adam_ = AdamState(model_.decoder_params.size(), config_.learning_rate);
}

void VaeTrainer::train(const Matrix& data, int steps) {
  if (data.cols() == 0) throw ValidationError("training data is empty");
  if (data.rows() != model_.data_dim()) {
    throw DimensionError("training data dimension does not match the decoder");
  }
  const int b = config_.batch_size;
  const int k = model_.latent_dim;
  std::uniform_int_distribution<Eigen::Index> pick(0, data.cols() - 1);
  std::normal_distribution<double> normal(0.0, 1.0);

  for (int s = 0; s < steps; ++s) {
    Matrix x(data.rows(), b);
    for (int j = 0; j < b; ++j) x.col(j) = data.col(pick(rng_));
    Matrix eps(k, b);
    for (int j = 0; j < b; ++j) {
      for (int i = 0; i < k; ++i) eps(i, j) = normal(rng_);
    }

    const Tape enc = forward(model_.encoder_spec, model_.encoder_params, x);
    const Matrix mean = enc.output().topRows(k);
    const Matrix logvar = enc.output().bottomRows(k);
    const Matrix z = reparameterize(mean, logvar, eps);
    const Tape dec = forward(model_.decoder_spec, model_.decoder_params, z);

    const Matrix residual = dec.output() - x;
    const double weight = 0.5 / (config_.observation_stddev * config_.observation_stddev);
    const double recon = weight * residual.squaredNorm() / b;
    const double kl = gaussian_kl(mean, logvar).sum() / b;

    Gradients dg = backward(model_.decoder_spec, model_.decoder_params, dec,
                            (2.0 * weight / b) * residual);
    const Matrix& dz = dg.input;
    const Matrix sigma = (0.5 * logvar.array()).exp().matrix();
    Matrix grad_enc(2 * k, b);
    grad_enc.topRows(k) = dz + mean / b;
    grad_enc.bottomRows(k) =
        (0.5 * dz.array() * eps.array() * sigma.array() +
         0.5 * (logvar.array().exp() - 1.0) / b)
            .matrix();
    Gradients eg = backward(model_.encoder_spec, model_.encoder_params, enc, grad_enc);

    const double penalty =
        add_l2_penalty(model_.decoder_spec, model_.decoder_params, dg.params) +
        add_l2_penalty(model_.encoder_spec, model_.encoder_params, eg.params);
    if (!std::isfinite(recon + kl + penalty)) {
      throw DivergenceError("VAE loss became non-finite at step " +
                            std::to_string(step_));
    }
    adam_step(model_.decoder_params, dg.params, decoder_adam_);
    adam_step(model_.encoder_params, eg.params, encoder_adam_);

    ++step_;
    log_.append({step_, recon + kl, kl, recon});
    if (config_.checkpoint_every > 0 && step_ % config_.checkpoint_every == 0) {
      log_.checkpoint_steps.push_back(step_);
      if (config_.checkpoint_dir) {
        char name[64];
        std::snprintf(name, sizeof name, "vae_step_%06d", step_);
        save_vae(*config_.checkpoint_dir / name, model_);
      }
    }
  }
}

VaeResult train_vae(const Matrix& data, const VaeTrainConfig& config) {
  VaeTrainer trainer(config, static_cast<int>(data.rows()));
  trainer.train(data, config.steps);
  return {trainer.model(), trainer.log()};
}

}  // namespace genleak
