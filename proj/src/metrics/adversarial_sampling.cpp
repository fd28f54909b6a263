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

#include "genleak/metrics/adversarial_sampling.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/parallel.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {

AdversarialSample adversarial_sampling(const Matrix& pool,
                                       const GanTrainConfig& train_config,
                                       const AttackConfig& attack_config,
                                       const AdversarialSamplingConfig& config) {
  if (config.batch_size < 1) throw ValidationError("batch_size must be >= 1");
  if (config.target_size < 1) throw ValidationError("target_size must be >= 1");
  if (config.fine_tune_steps < 0) {
    throw ValidationError("fine_tune_steps must be nonnegative");
  }
  const auto n = static_cast<std::size_t>(pool.cols());
  const auto b = static_cast<std::size_t>(config.batch_size);
  const auto m = static_cast<std::size_t>(config.target_size);
  if (m * b > n) {
    throw ValidationError("pool exhausted: " + std::to_string(m) + " batches of " +
                          std::to_string(b) + " need more than " +
                          std::to_string(n) + " points");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng order_rng(derive_seed(config.seed, 0));
  std::shuffle(order.begin(), order.end(), order_rng);

  AdversarialSample result;
  GanTrainer trainer(train_config, static_cast<int>(pool.rows()));
  for (std::size_t round = 0; round < m; ++round) {
    std::vector<std::size_t> batch(order.begin() + round * b,
                                   order.begin() + (round + 1) * b);
    Matrix xs(pool.rows(), static_cast<Eigen::Index>(b));
    for (std::size_t i = 0; i < b; ++i) {
      xs.col(static_cast<Eigen::Index>(i)) = pool.col(static_cast<Eigen::Index>(batch[i]));
    }
    std::vector<double> losses(b, 0.0);
    parallel_for(b, config.threads, [&](std::size_t i) {
      AttackConfig cfg = attack_config;
      cfg.seed = derive_seed(attack_config.seed, batch[i]);
      losses[i] =
          attack_single(trainer.generator(), xs.col(static_cast<Eigen::Index>(i)), cfg)
              .loss;
    });
    const auto hardest = static_cast<std::size_t>(
        std::max_element(losses.begin(), losses.end()) - losses.begin());
    result.selected.push_back(batch[hardest]);
    result.batches.push_back(std::move(batch));
    result.batch_losses.push_back(std::move(losses));
    trainer.train(xs, config.fine_tune_steps);
  }

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  Rng control_rng(derive_seed(config.seed, 1));
  std::shuffle(all.begin(), all.end(), control_rng);
  result.control.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));

  const std::set<std::size_t> chosen(result.selected.begin(), result.selected.end());
  for (std::size_t i : result.control) result.overlap += chosen.count(i);
  return result;
}

}  // namespace genleak
