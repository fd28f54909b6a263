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

#ifndef GENLEAK_EXPCLI_CONFIG_HPP_
#define GENLEAK_EXPCLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "genleak/attacks/attacks.hpp"
#include "genleak/genmodels/trainers.hpp"
#include "genleak/metrics/evaluation.hpp"

namespace genleak {

enum class ExperimentKind {
  kTableAttackComparison,
  kRocVsDatasize,
  kRocVsCoattackStrength,
  kStrengthVsDatasizeFrontier,
  kGeneralizationGapSweep,
  kLearningCurve,
  kDispersionProfile,
  kAdversarialVsRandom,
};

std::string_view to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(std::string_view name);

enum class ModelKind { kWgan, kGanVanilla, kVae };

std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

enum class DataSource { kDigits, kGaussianMixture, kIdx, kContributors };

std::string_view to_string(DataSource source);
DataSource data_source_from_string(std::string_view name);

struct DatasetSpec {
  DataSource source = DataSource::kDigits;
  // Instances synthesized per repeat (digits). Training and holdout sets
  // are both drawn from this pool.
  int pool_size = 2000;
  int glyph_size = 8;
  // Gaussian mixture.
  int num_components = 4;
  int points_per_component = 500;
  int dimension = 2;
  double spread = 0.05;
  // IDX files.
  std::string idx_images;
  std::string idx_labels;
  // Contributor simulation.
  int num_users = 40;
  int images_per_user = 10;
  double contributing_fraction = 0.5;
  double image_noise = 0.25;
  int train_images_per_user = -1;
};

struct EvaluationSpec {
  std::vector<int> train_sizes{8, 64, 512};
  std::vector<int> strengths{1};
  std::vector<AttackMethod> methods{AttackMethod::kAttackerNet};
  std::vector<ModelKind> models{ModelKind::kWgan};
  int eval_members = 32;  // capped by the training size
  int eval_nonmembers = 32;
  int nn_pool_size = 3000;
  double effective_auc = kDefaultEffectiveAuc;
  int repeats = 1;
};

struct DispersionSpec {
  std::vector<int> ks{2, 4, 8, 16, 32};
  int num_samples = 1000;
};

struct CurveSpec {
  std::vector<int> probe_steps{0, 100, 200, 400, 800, 1200, 1600, 2000};
  int probe_size = 32;
};

struct AdversarialSpec {
  int batch_size = 8;
  int target_size = 32;
  int fine_tune_steps = 200;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kRocVsDatasize;
  std::string name;
  std::uint64_t master_seed = 0;
  std::filesystem::path output_dir;
  DatasetSpec dataset;
  // Latent size shared by every generative model; required in config files.
  int latent_dim = 16;
  GanTrainConfig gan;
  VaeTrainConfig vae;
  AttackConfig attack;
  EvaluationSpec evaluation;
  DispersionSpec dispersion;
  CurveSpec curve;
  AdversarialSpec adversarial;

  // Throws ValidationError when a sub-config violates its preconditions.
  void validate() const;
};

// Parses the JSON config format. Unknown keys and a missing "kind" or
// "model.latent_dim" are ValidationErrors.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Canonical JSON with every field spelled out; parse_config inverts it.
std::string config_to_json(const ExperimentConfig& config);
// FNV-1a of the canonical JSON, as 16 hex digits. The output directory is
// not part of the hash.
std::string config_hash(const ExperimentConfig& config);

}  // namespace genleak

#endif  // GENLEAK_EXPCLI_CONFIG_HPP_
