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
#include <limits>

#include "genleak/attacks/attacks.hpp"
#include "genleak/numcore/errors.hpp"

namespace genleak {

double attack_nearest_neighbor(const Matrix& generated_pool, const Vector& x) {
  if (generated_pool.cols() == 0) {
    throw ValidationError("nearest-neighbor pool is empty");
  }
  if (generated_pool.rows() != x.size()) {
    throw DimensionError("pool and target dimensions differ");
  }
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < generated_pool.cols(); ++j) {
    best = std::min(best, (generated_pool.col(j) - x).squaredNorm());
  }
  return std::sqrt(best);
}

}  // namespace genleak
