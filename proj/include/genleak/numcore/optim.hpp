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

#ifndef GENLEAK_NUMCORE_OPTIM_HPP_
#define GENLEAK_NUMCORE_OPTIM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "genleak/numcore/network.hpp"

namespace genleak {

struct AdamState {
  DoubleBuffer first_moment;
  DoubleBuffer second_moment;
  std::int64_t step_count = 0;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  AdamState() = default;
  AdamState(std::size_t param_count, double lr)
      : first_moment(param_count, 0.0),
        second_moment(param_count, 0.0),
        learning_rate(lr) {}

  void validate() const;
};

// One bias-corrected Adam update in place. Throws DivergenceError when any
// gradient component is non-finite; params and state are untouched then.
void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state);
inline void adam_step(ParamVector& params, std::span<const double> grads,
                      AdamState& state) {
  adam_step(params.span(), grads, state);
}

// Plain gradient descent: params -= learning_rate * grads.
void gd_step(std::span<double> params, std::span<const double> grads,
             double learning_rate);

// Clamps every component into [-c, c]. Requires c > 0.
void clip_weights(std::span<double> params, double c);
ParamVector clipped(ParamVector params, double c);

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_OPTIM_HPP_
