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

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "genleak/attacks/attacks.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/optim.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_targets(const GeneratorModel& generator, const Matrix& xs) {
  if (xs.cols() < 1) throw ValidationError("attack needs at least one target");
  if (xs.rows() != generator.data_dim()) {
    throw DimensionError("target dimension " + std::to_string(xs.rows()) +
                         " does not match generator output " +
                         std::to_string(generator.data_dim()));
  }
}

// d(mean_i ||y_i - x_i||)/dY, zero for columns that already match.
Matrix distance_gradient(const Matrix& targets, const Matrix& generated,
                         double* loss) {
  const Matrix diff = generated - targets;
  const double n = static_cast<double>(targets.cols());
  Matrix grad(diff.rows(), diff.cols());
  double sum = 0.0;
  for (Eigen::Index j = 0; j < diff.cols(); ++j) {
    const double dist = diff.col(j).norm();
    sum += dist;
    if (dist > 0.0) {
      grad.col(j) = diff.col(j) / (n * dist);
    } else {
      grad.col(j).setZero();
    }
  }
  *loss = sum / n;
  return grad;
}

class Stepper {
 public:
  Stepper(const AttackConfig& config, std::size_t n, double lr)
      : optimizer_(config.optimizer), lr_(lr), adam_(n, lr) {}

  void step(std::span<double> params, std::span<const double> grads) {
    if (optimizer_ == AttackOptimizer::kAdam) {
      adam_step(params, grads, adam_);
    } else {
      gd_step(params, grads, lr_);
    }
  }

 private:
  AttackOptimizer optimizer_;
  double lr_;
  AdamState adam_;
};

struct RestartOutcome {
  double loss = kInf;
  Matrix reconstruction;
};

AttackResult collect(std::vector<RestartOutcome> outcomes,
                     std::chrono::steady_clock::time_point start) {
  AttackResult result;
  std::size_t best = outcomes.size();
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.per_restart_losses.push_back(outcomes[r].loss);
    if (std::isfinite(outcomes[r].loss) &&
        (best == outcomes.size() || outcomes[r].loss < outcomes[best].loss)) {
      best = r;
    }
  }
  if (best == outcomes.size()) {
    throw DivergenceError("every attack restart diverged");
  }
  result.loss = outcomes[best].loss;
  result.reconstruction = std::move(outcomes[best].reconstruction);
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

Matrix generate_from(const GeneratorModel& generator,
                     const NetworkSpec& attacker_spec,
                     const ParamVector& attacker_params, const Matrix& xs) {
  return predict(generator.spec, generator.params,
                 predict(attacker_spec, attacker_params, xs));
}

}  // namespace

std::string_view to_string(AttackOptimizer optimizer) {
  return optimizer == AttackOptimizer::kAdam ? "adam" : "plain_gd";
}

std::string_view to_string(GradientMode mode) {
  return mode == GradientMode::kWhiteBox ? "white_box" : "black_box";
}

AttackOptimizer attack_optimizer_from_string(std::string_view name) {
  if (name == "adam") return AttackOptimizer::kAdam;
  if (name == "plain_gd") return AttackOptimizer::kPlainGd;
  throw ValidationError("unknown attack optimizer '" + std::string(name) + "'");
}

GradientMode gradient_mode_from_string(std::string_view name) {
  if (name == "white_box") return GradientMode::kWhiteBox;
  if (name == "black_box") return GradientMode::kBlackBox;
  throw ValidationError("unknown gradient mode '" + std::string(name) + "'");
}

void AttackConfig::validate() const {
  if (iterations < 1) throw ValidationError("attack iterations must be >= 1");
  if (restarts < 1) throw ValidationError("attack restarts must be >= 1");
  if (!(learning_rate > 0.0) || !(projection_learning_rate > 0.0)) {
    throw ValidationError("attack learning rates must be positive");
  }
  if (!(fd_step > 0.0)) throw ValidationError("fd_step must be positive");
  for (int h : attacker_hidden) {
    if (h < 1) throw ValidationError("attacker hidden sizes must be positive");
  }
}

NetworkSpec AttackConfig::attacker_spec(int data_dim, int latent_dim) const {
  NetworkSpec spec;
  spec.layer_sizes.push_back(data_dim);
  spec.layer_sizes.insert(spec.layer_sizes.end(), attacker_hidden.begin(),
                          attacker_hidden.end());
  spec.layer_sizes.push_back(latent_dim);
  spec.hidden_activation = attacker_activation;
  spec.output_activation = Activation::kIdentity;
  spec.validate();
  return spec;
}

double mean_reconstruction_loss(const Matrix& targets, const Matrix& generated) {
  if (targets.rows() != generated.rows() || targets.cols() != generated.cols()) {
    throw DimensionError("targets and generated instances differ in shape");
  }
  return (generated - targets).colwise().norm().mean();
}

LossAndGradient whitebox_loss_and_grad(const GeneratorModel& generator,
                                       const NetworkSpec& attacker_spec,
                                       const ParamVector& attacker_params,
                                       const Matrix& xs) {
  const Tape attacker_tape = forward(attacker_spec, attacker_params, xs);
  const Tape gen_tape =
      forward(generator.spec, generator.params, attacker_tape.output());
  LossAndGradient out;
  const Matrix grad_y = distance_gradient(xs, gen_tape.output(), &out.loss);
  const Gradients through_gen =
      backward(generator.spec, generator.params, gen_tape, grad_y, false);
  Gradients g =
      backward(attacker_spec, attacker_params, attacker_tape, through_gen.input);
  out.gradient = std::move(g.params);
  return out;
}

AttackResult attack_co(const GeneratorModel& generator, const Matrix& xs,
                       const AttackConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  config.validate();
  generator.validate();
  check_targets(generator, xs);
  const NetworkSpec spec =
      config.attacker_spec(generator.data_dim(), generator.latent_dim);
  const GeneratorOracle oracle = white_box_oracle(generator);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  for (int r = 0; r < config.restarts; ++r) {
    ParamVector gamma = init_params(spec, derive_seed(config.seed, r));
    Stepper stepper(config, gamma.size(), config.learning_rate);
    try {
      for (int it = 0; it < config.iterations; ++it) {
        LossAndGradient lg =
            config.gradient_mode == GradientMode::kWhiteBox
                ? whitebox_loss_and_grad(generator, spec, gamma, xs)
                : blackbox_loss_and_grad(oracle, spec, gamma, xs, config.fd_step);
        add_l2_penalty(spec, gamma, lg.gradient);
        if (!std::isfinite(lg.loss)) throw DivergenceError("attack loss");
        stepper.step(gamma.span(), lg.gradient);
      }
      Matrix generated = generate_from(generator, spec, gamma, xs);
      const double loss = mean_reconstruction_loss(xs, generated);
      if (std::isfinite(loss)) {
        outcomes[r].loss = loss;
        outcomes[r].reconstruction = std::move(generated);
      }
    } catch (const DivergenceError&) {
      outcomes[r].loss = kInf;
    }
  }
  return collect(std::move(outcomes), start);
}

AttackResult attack_single(const GeneratorModel& generator, const Vector& x,
                           const AttackConfig& config) {
  return attack_co(generator, Matrix(x), config);
}

AttackResult attack_direct_projection(const GeneratorModel& generator,
                                      const Matrix& xs,
                                      const AttackConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  config.validate();
  generator.validate();
  if (xs.cols() != 1) {
    throw ValidationError(
        "direct projection attacks one instance at a time; groups are not "
        "supported");
  }
  check_targets(generator, xs);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  for (int r = 0; r < config.restarts; ++r) {
    Rng rng(derive_seed(config.seed, r));
    Matrix z = sample_latent(generator.latent_prior, generator.latent_dim, 1, rng);
    Stepper stepper(config, static_cast<std::size_t>(z.size()),
                    config.projection_learning_rate);
    try {
      for (int it = 0; it < config.iterations; ++it) {
        const Tape tape = forward(generator.spec, generator.params, z);
        double loss = 0.0;
        const Matrix grad_y = distance_gradient(xs, tape.output(), &loss);
        if (!std::isfinite(loss)) throw DivergenceError("projection loss");
        const Gradients g =
            backward(generator.spec, generator.params, tape, grad_y, false);
        stepper.step(std::span<double>(z.data(), z.size()),
                     std::span<const double>(g.input.data(), g.input.size()));
      }
      Matrix generated = predict(generator.spec, generator.params, z);
      const double loss = mean_reconstruction_loss(xs, generated);
      if (std::isfinite(loss)) {
        outcomes[r].loss = loss;
        outcomes[r].reconstruction = std::move(generated);
      }
    } catch (const DivergenceError&) {
      outcomes[r].loss = kInf;
    }
  }
  return collect(std::move(outcomes), start);
}

AttackResult attack_direct_projection(const GeneratorModel& generator,
                                      const Vector& x,
                                      const AttackConfig& config) {
  return attack_direct_projection(generator, Matrix(x), config);
}

}  // namespace genleak
