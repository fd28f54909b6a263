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

#include "genleak/numcore/optim.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "genleak/numcore/errors.hpp"

namespace genleak {

void AdamState::validate() const {
  if (first_moment.size() != second_moment.size()) {
    throw ValidationError("Adam moment arrays differ in length");
  }
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
    throw ValidationError("Adam betas must lie in [0, 1)");
  }
  if (!(epsilon > 0.0)) throw ValidationError("Adam epsilon must be positive");
  if (!(learning_rate > 0.0)) {
    throw ValidationError("learning rate must be positive");
  }
}

void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state) {
  const std::size_t n = params.size();
  if (grads.size() != n || state.first_moment.size() != n ||
      state.second_moment.size() != n) {
    throw DimensionError("adam_step: parameter, gradient and moment lengths differ");
  }
  using ArrayMap = Eigen::Map<Eigen::ArrayXd>;
  using ConstArrayMap = Eigen::Map<const Eigen::ArrayXd>;
  const auto size = static_cast<Eigen::Index>(n);
  const ConstArrayMap g(grads.data(), size);
  if (!g.isFinite().all()) {
    throw DivergenceError("adam_step: non-finite gradient component");
  }
  const double b1 = state.beta1;
  const double b2 = state.beta2;
  ++state.step_count;
  const auto t = static_cast<double>(state.step_count);
  const double correction1 = 1.0 - std::pow(b1, t);
  const double correction2 = 1.0 - std::pow(b2, t);
  ArrayMap m(state.first_moment.data(), size);
  ArrayMap v(state.second_moment.data(), size);
  ArrayMap p(params.data(), size);
  m = b1 * m + (1.0 - b1) * g;
  v = b2 * v + (1.0 - b2) * g.square();
  p -= (state.learning_rate / correction1) * m /
       ((v * (1.0 / correction2)).sqrt() + state.epsilon);
}

void gd_step(std::span<double> params, std::span<const double> grads,
             double learning_rate) {
  if (grads.size() != params.size()) {
    throw DimensionError("gd_step: parameter and gradient lengths differ");
  }
  for (double g : grads) {
    if (!std::isfinite(g)) {
      throw DivergenceError("gd_step: non-finite gradient component");
    }
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] -= learning_rate * grads[i];
  }
}

void clip_weights(std::span<double> params, double c) {
  if (!(c > 0.0)) throw ValidationError("clip constant must be positive");
  for (double& p : params) p = std::clamp(p, -c, c);
}

ParamVector clipped(ParamVector params, double c) {
  clip_weights(params.span(), c);
  return params;
}

}  // namespace genleak
