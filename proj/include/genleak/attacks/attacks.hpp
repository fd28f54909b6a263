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

#ifndef GENLEAK_ATTACKS_ATTACKS_HPP_
#define GENLEAK_ATTACKS_ATTACKS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "genleak/genmodels/models.hpp"
#include "genleak/numcore/finite_diff.hpp"
#include "genleak/numcore/network.hpp"

namespace genleak {

enum class AttackOptimizer { kAdam, kPlainGd };
enum class GradientMode { kWhiteBox, kBlackBox };

std::string_view to_string(AttackOptimizer optimizer);
std::string_view to_string(GradientMode mode);
AttackOptimizer attack_optimizer_from_string(std::string_view name);
GradientMode gradient_mode_from_string(std::string_view name);

struct AttackConfig {
  // The attacker maps R^d to R^k through these hidden layers.
  std::vector<int> attacker_hidden{100, 100};
  Activation attacker_activation = Activation::kRelu;
  int iterations = 1000;
  int restarts = 4;
  AttackOptimizer optimizer = AttackOptimizer::kAdam;
  double learning_rate = 1e-3;
  // Step size used when the latent code itself is optimized (direct
  // projection baseline).
  double projection_learning_rate = 1e-2;
  GradientMode gradient_mode = GradientMode::kWhiteBox;
  double fd_step = kBlackBoxStep;
  std::uint64_t seed = 0;

  void validate() const;
  NetworkSpec attacker_spec(int data_dim, int latent_dim) const;
};

struct AttackResult {
  // Minimum over the finite per-restart losses.
  double loss = 0.0;
  // +infinity marks a restart that diverged.
  std::vector<double> per_restart_losses;
  // Filled in by the harness; attack routines only ever see features.
  std::vector<std::string> target_ids;
  // Generated counterpart of each target under the best restart.
  Matrix reconstruction;
  double wall_time_seconds = 0.0;
};

// Mean L2 distance between the columns of `targets` and `generated`.
double mean_reconstruction_loss(const Matrix& targets, const Matrix& generated);

// Optimizes a freshly initialized attacker network per restart on
// Delta(x, G(A(x))) and reports the smallest final L2 distance. The
// generator is only read. Throws DimensionError when x does not match the
// generator output and DivergenceError when every restart diverged.
AttackResult attack_single(const GeneratorModel& generator, const Vector& x,
                           const AttackConfig& config);

// One shared attacker per restart, optimized on the mean loss over the
// columns of `xs`. With a single column this is exactly attack_single.
AttackResult attack_co(const GeneratorModel& generator, const Matrix& xs,
                       const AttackConfig& config);

// Optimizes the latent code directly, restarting from prior draws. Groups
// are rejected with ValidationError since a code cannot be shared.
AttackResult attack_direct_projection(const GeneratorModel& generator,
                                      const Matrix& xs,
                                      const AttackConfig& config);
AttackResult attack_direct_projection(const GeneratorModel& generator,
                                      const Vector& x,
                                      const AttackConfig& config);

// Smallest L2 distance from x to any column of the generated pool.
double attack_nearest_neighbor(const Matrix& generated_pool, const Vector& x);

// The generator seen as an opaque function of latent codes (k x m -> d x m).
using GeneratorOracle = std::function<Matrix(const Matrix&)>;

GeneratorOracle white_box_oracle(const GeneratorModel& generator);

struct LossAndGradient {
  double loss = 0.0;
  DoubleBuffer gradient;
};

// Forward-difference gradient of l(gamma) = mean_i Delta(x_i, G(A_gamma(x_i)))
// over the attacker parameters. Calls the oracle exactly |gamma| + 1 times.
LossAndGradient blackbox_loss_and_grad(const GeneratorOracle& generator,
                                       const NetworkSpec& attacker_spec,
                                       const ParamVector& attacker_params,
                                       const Matrix& xs, double fd_step);

// Analytic counterpart, back-propagating through the generator.
LossAndGradient whitebox_loss_and_grad(const GeneratorModel& generator,
                                       const NetworkSpec& attacker_spec,
                                       const ParamVector& attacker_params,
                                       const Matrix& xs);

// A target is declared a training member when its loss is strictly below
// the threshold.
inline bool decide_membership(double loss, double threshold) {
  return loss < threshold;
}

}  // namespace genleak

#endif  // GENLEAK_ATTACKS_ATTACKS_HPP_
