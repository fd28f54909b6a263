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

#include "genleak/numcore/finite_diff.hpp"

#include "genleak/numcore/errors.hpp"

namespace genleak {

DoubleBuffer finite_diff_grad(const ScalarFn& loss,
                              std::span<const double> params, double h,
                              DiffScheme scheme) {
  if (!(h > 0.0)) throw ValidationError("finite-difference step must be positive");
  std::vector<double> probe(params.begin(), params.end());
  DoubleBuffer grad(params.size(), 0.0);
  if (scheme == DiffScheme::kForward) {
    const double base = loss(probe);
    for (std::size_t i = 0; i < probe.size(); ++i) {
      probe[i] = params[i] + h;
      grad[i] = (loss(probe) - base) / h;
      probe[i] = params[i];
    }
    return grad;
  }
  for (std::size_t i = 0; i < probe.size(); ++i) {
    probe[i] = params[i] + h;
    const double up = loss(probe);
    probe[i] = params[i] - h;
    const double down = loss(probe);
    probe[i] = params[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

}  // namespace genleak
