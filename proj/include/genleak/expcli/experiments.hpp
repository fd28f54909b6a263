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

#ifndef GENLEAK_EXPCLI_EXPERIMENTS_HPP_
#define GENLEAK_EXPCLI_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "genleak/datalab/contributors.hpp"
#include "genleak/datalab/dataset.hpp"
#include "genleak/expcli/config.hpp"
#include "genleak/expcli/pipeline.hpp"

namespace genleak {

// Builds the instance pool of a digits, mixture or IDX dataset spec.
// Contributor specs go through build_contributors instead.
Dataset build_dataset(const DatasetSpec& spec, std::uint64_t seed);
ContributorSimulation build_contributors(const DatasetSpec& spec,
                                         std::uint64_t seed);

struct TrainedModel {
  ModelKind kind = ModelKind::kWgan;
  // The part an attacker sees: the generator, or the VAE decoder.
  GeneratorModel generator;
  std::optional<CriticModel> critic;
  std::optional<VaeModel> vae;
  TrainLog log;
};

// Trains one model on the columns of `data` with the config's
// hyperparameters and the given seed.
TrainedModel train_model(ModelKind kind, const Matrix& data,
                         const ExperimentConfig& config, std::uint64_t seed);

// Runs every stage of the configured experiment kind.
void run_stages(Pipeline& pipeline);

}  // namespace genleak

#endif  // GENLEAK_EXPCLI_EXPERIMENTS_HPP_
