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

#ifndef GENLEAK_METRICS_ADVERSARIAL_SAMPLING_HPP_
#define GENLEAK_METRICS_ADVERSARIAL_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "genleak/attacks/attacks.hpp"
#include "genleak/genmodels/trainers.hpp"

namespace genleak {

struct AdversarialSamplingConfig {
  int batch_size = 8;   // b
  int target_size = 32;  // m
  // Generator updates on each batch after its hardest point is picked.
  int fine_tune_steps = 200;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct AdversarialSample {
  // Column indices into the pool, in selection order.
  std::vector<std::size_t> selected;
  // Control subset of equal size drawn uniformly from the whole pool,
  // independently of `selected`.
  std::vector<std::size_t> control;
  std::size_t overlap = 0;  // |selected ∩ control|
  // Pool indices and attack losses of every batch, in processing order.
  std::vector<std::vector<std::size_t>> batches;
  std::vector<std::vector<double>> batch_losses;
};

// Walks fresh batches of unseen pool columns. In each batch every point is
// attacked against the current generator, the point with the largest loss
// (lowest index on ties) joins the selection, and the generator is then
// trained on the whole batch. Throws ValidationError when the pool runs out
// before target_size points are selected.
AdversarialSample adversarial_sampling(const Matrix& pool,
                                       const GanTrainConfig& train_config,
                                       const AttackConfig& attack_config,
                                       const AdversarialSamplingConfig& config);

}  // namespace genleak

#endif  // GENLEAK_METRICS_ADVERSARIAL_SAMPLING_HPP_
