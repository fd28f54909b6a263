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

#ifndef GENLEAK_NUMCORE_FINITE_DIFF_HPP_
#define GENLEAK_NUMCORE_FINITE_DIFF_HPP_

#include <functional>
#include <span>
#include <vector>

#include "genleak/numcore/network.hpp"

namespace genleak {

enum class DiffScheme {
  kForward,  // (l(p + h e_i) - l(p)) / h, n + 1 evaluations
  kCentral,  // (l(p + h e_i) - l(p - h e_i)) / 2h, 2n evaluations
};

using ScalarFn = std::function<double(std::span<const double>)>;

inline constexpr double kBlackBoxStep = 1e-3;
inline constexpr double kOracleStep = 1e-5;

DoubleBuffer finite_diff_grad(const ScalarFn& loss,
                              std::span<const double> params, double h,
                              DiffScheme scheme = DiffScheme::kForward);

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_FINITE_DIFF_HPP_
