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

#ifndef GENLEAK_EXPCLI_PIPELINE_HPP_
#define GENLEAK_EXPCLI_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "genleak/expcli/config.hpp"
#include "genleak/expcli/manifest.hpp"

namespace genleak {

// What a stage body sees: its seed and a way to publish output files.
class StageContext {
 public:
  StageContext(const std::filesystem::path& run_dir, StageRecord& record)
      : run_dir_(run_dir), record_(record) {}

  std::uint64_t seed() const { return record_.seed; }
  // Writes run_dir/relative_path and records its hash.
  void write(const std::string& relative_path, std::string_view bytes);
  void meta(const std::string& key, const std::string& value) {
    record_.meta[key] = value;
  }

 private:
  const std::filesystem::path& run_dir_;
  StageRecord& record_;
};

// Runs named stages in order, skipping stages a previous manifest already
// completed when all of their outputs are still on disk with the recorded
// hashes. A missing output forces the stage to run again; an output whose
// bytes no longer match the recorded hash raises IntegrityError. The
// manifest is rewritten after every stage so an interrupted run can resume.
class Pipeline {
 public:
  Pipeline(const ExperimentConfig& config, std::filesystem::path run_dir,
           int threads, std::optional<RunManifest> previous = std::nullopt);

  const ExperimentConfig& config() const { return config_; }
  const std::filesystem::path& run_dir() const { return run_dir_; }
  int threads() const { return threads_; }

  // Seed of a stage: derive_seed(master_seed, stream_of(name)).
  std::uint64_t seed_for(std::string_view name) const;

  // Returns a copy of the stage record, running `body` only when needed.
  StageRecord stage(const std::string& name,
                           const std::function<void(StageContext&)>& body);

  std::filesystem::path path(const std::string& relative_path) const {
    return run_dir_ / relative_path;
  }
  std::filesystem::path manifest_path() const { return run_dir_ / "manifest.json"; }

  int stages_run() const { return stages_run_; }
  int stages_reused() const { return stages_reused_; }

  // Marks the run complete and writes the final manifest.
  RunManifest finish();

 private:
  bool reusable(const StageRecord& previous) const;
  void save() const;

  ExperimentConfig config_;
  std::filesystem::path run_dir_;
  int threads_;
  std::optional<RunManifest> previous_;
  RunManifest manifest_;
  int stages_run_ = 0;
  int stages_reused_ = 0;
};

// Runs the experiment described by the config file into `output_dir`
// (falling back to the config's output_dir). A seed override replaces the
// config's master_seed.
RunManifest run_experiment(const std::filesystem::path& config_path,
                           const std::optional<std::filesystem::path>& output_dir,
                           int threads,
                           std::optional<std::uint64_t> seed_override = std::nullopt);
RunManifest run_experiment(const ExperimentConfig& config,
                           const std::filesystem::path& output_dir, int threads);

// Re-enters a run from its manifest. The run directory is the manifest's
// parent directory.
RunManifest resume(const std::filesystem::path& manifest_path, int threads);

}  // namespace genleak

#endif  // GENLEAK_EXPCLI_PIPELINE_HPP_
