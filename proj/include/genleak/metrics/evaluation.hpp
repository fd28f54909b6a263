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

#ifndef GENLEAK_METRICS_EVALUATION_HPP_
#define GENLEAK_METRICS_EVALUATION_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "genleak/attacks/attack_csv.hpp"
#include "genleak/attacks/attacks.hpp"
#include "genleak/datalab/dataset.hpp"
#include "genleak/datalab/split.hpp"
#include "genleak/metrics/roc.hpp"

namespace genleak {

// An attacker counts as effective above this AUC.
inline constexpr double kDefaultEffectiveAuc = 0.75;

enum class AttackMethod { kAttackerNet, kNearestNeighbor, kDirectProjection };

std::string_view to_string(AttackMethod method);
AttackMethod attack_method_from_string(std::string_view name);

struct EvalOptions {
  AttackMethod method = AttackMethod::kAttackerNet;
  int threads = 1;
  // Generated samples searched by the nearest-neighbor baseline.
  int nn_pool_size = 3000;
  std::uint64_t nn_pool_seed = 0;
};

// Reconstruction loss of every group, in group order. Group g is attacked
// with seed derive_seed(config.seed, g) so results do not depend on the
// thread count. The attacker network attacks a group jointly; the
// nearest-neighbor baseline reports the mean of its per-instance distances;
// direct projection rejects groups of more than one instance.
std::vector<double> attack_group_losses(const GeneratorModel& generator,
                                        const Dataset& data,
                                        const std::vector<CoAttackGroup>& groups,
                                        const AttackConfig& config,
                                        const EvalOptions& options);

struct MembershipEvaluation {
  std::vector<AttackRow> rows;
  RocReport roc;
};

// Attacks every group, then reveals the shared labels to score the losses.
MembershipEvaluation evaluate_membership(const GeneratorModel& generator,
                                         const Dataset& data,
                                         const std::vector<CoAttackGroup>& groups,
                                         const AttackConfig& config,
                                         const EvalOptions& options);

// One single-instance group per evaluation id of the split, labels revealed
// from the sealed store.
std::vector<CoAttackGroup> single_groups(const MembershipSplit& split);

}  // namespace genleak

#endif  // GENLEAK_METRICS_EVALUATION_HPP_
