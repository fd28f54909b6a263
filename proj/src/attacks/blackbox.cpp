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

#include "genleak/attacks/attacks.hpp"

namespace genleak {

GeneratorOracle white_box_oracle(const GeneratorModel& generator) {
  return [&generator](const Matrix& z) {
    return predict(generator.spec, generator.params, z);
  };
}

LossAndGradient blackbox_loss_and_grad(const GeneratorOracle& generator,
                                       const NetworkSpec& attacker_spec,
                                       const ParamVector& attacker_params,
                                       const Matrix& xs, double fd_step) {
  ParamVector probe = attacker_params;
  const ScalarFn loss = [&](std::span<const double> gamma) {
    std::copy(gamma.begin(), gamma.end(), probe.values.begin());
    return mean_reconstruction_loss(xs, generator(predict(attacker_spec, probe, xs)));
  };
  LossAndGradient out;
  out.loss = loss(attacker_params.span());
  out.gradient.resize(attacker_params.size());
  // Forward differences reuse out.loss, so the oracle runs |gamma| + 1 times.
  DoubleBuffer gamma = attacker_params.values;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    gamma[i] = attacker_params.values[i] + fd_step;
    out.gradient[i] = (loss(gamma) - out.loss) / fd_step;
    gamma[i] = attacker_params.values[i];
  }
  return out;
}

}  // namespace genleak
