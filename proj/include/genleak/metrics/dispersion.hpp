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

#ifndef GENLEAK_METRICS_DISPERSION_HPP_
#define GENLEAK_METRICS_DISPERSION_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genleak/numcore/network.hpp"

namespace genleak {

enum class DispersionMethod { kGreedy, kExact };

std::string_view to_string(DispersionMethod method);

// k-dispersion of a point set: the largest achievable minimum pairwise L2
// distance over k-subsets. Points are the columns of the input matrix.
struct DispersionResult {
  int k = 0;
  double value = 0.0;
  std::vector<std::size_t> witness;  // column indices of the chosen subset
  DispersionMethod method = DispersionMethod::kGreedy;
};

inline constexpr double kExactDispersionSubsetLimit = 1e6;

// Farthest-point heuristic seeded with the farthest pair; ties go to the
// lowest index. Throws ValidationError unless 2 <= k <= number of points.
DispersionResult dispersion_greedy(const Matrix& points, int k);

// Exhaustive search over all k-subsets. Throws ValidationError when
// C(n, k) exceeds kExactDispersionSubsetLimit.
DispersionResult dispersion_exact(const Matrix& points, int k);

// Greedy dispersion for every k in ks.
std::vector<DispersionResult> dispersion_profile(const Matrix& points,
                                                 std::span<const int> ks);

// k,value,method
std::string dispersion_to_csv(const std::vector<DispersionResult>& profile);

// Minimum pairwise distance among the given columns.
double min_pairwise_distance(const Matrix& points,
                             std::span<const std::size_t> subset);

}  // namespace genleak

#endif  // GENLEAK_METRICS_DISPERSION_HPP_
