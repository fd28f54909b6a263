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
#include <random>

#include "genleak/datalab/synthetic.hpp"
#include "genleak/numcore/errors.hpp"

namespace genleak {

MixtureSample synth_gaussian_mixture(int num_components,
                                     int points_per_component, int dimension,
                                     double spread, std::uint64_t seed,
                                     bool component_as_contributor) {
  if (num_components < 1 || points_per_component < 1 || dimension < 1) {
    throw ValidationError("mixture counts and dimension must be positive");
  }
  if (!(spread >= 0.0)) throw ValidationError("spread must be nonnegative");

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);

  Matrix centers(dimension, num_components);
  for (int c = 0; c < num_components; ++c) {
    for (int i = 0; i < dimension; ++i) centers(i, c) = unit(rng);
  }

  const int n = num_components * points_per_component;
  MixtureSample out;
  Dataset& data = out.data;
  data.features.resize(dimension, n);
  for (int c = 0; c < num_components; ++c) {
    for (int p = 0; p < points_per_component; ++p) {
      const int j = c * points_per_component + p;
      for (int i = 0; i < dimension; ++i) {
        data.features(i, j) = centers(i, c) + spread * noise(rng);
      }
      data.ids.push_back(j);
      if (component_as_contributor) data.contributor_ids.push_back(c);
    }
  }

  const double lo = data.features.minCoeff();
  const double hi = data.features.maxCoeff();
  if (hi > lo) {
    out.offset = lo;
    out.scale = 1.0 / (hi - lo);
    data.features = ((data.features.array() - lo) * out.scale).matrix();
    out.centers = ((centers.array() - lo) * out.scale).matrix();
  } else {
    out.centers = centers;
  }
  // Guard against rounding just outside the unit box.
  data.features = data.features.cwiseMax(0.0).cwiseMin(1.0);
  return out;
}

}  // namespace genleak
