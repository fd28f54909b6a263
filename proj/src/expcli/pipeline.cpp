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

#include "genleak/expcli/pipeline.hpp"

#include <chrono>

#include "genleak/expcli/experiments.hpp"
#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {

void StageContext::write(const std::string& relative_path, std::string_view bytes) {
  write_file(run_dir_ / relative_path, bytes);
  for (OutputRecord& o : record_.outputs) {
    if (o.path == relative_path) {
      o.hash = hash_bytes(bytes);
      return;
    }
  }
  record_.outputs.push_back({relative_path, hash_bytes(bytes)});
}

Pipeline::Pipeline(const ExperimentConfig& config, std::filesystem::path run_dir,
                   int threads, std::optional<RunManifest> previous)
    : config_(config),
      run_dir_(std::move(run_dir)),
      threads_(threads < 1 ? 1 : threads),
      previous_(std::move(previous)) {
  config_.validate();
  manifest_.config_hash = config_hash(config_);
  ExperimentConfig stored = config_;
  stored.output_dir.clear();
  manifest_.config_json = config_to_json(stored);
  manifest_.master_seed = config_.master_seed;
  if (previous_ && previous_->config_hash != manifest_.config_hash) {
    throw ValidationError("manifest was produced by a different config (hash " +
                          previous_->config_hash + ", now " +
                          manifest_.config_hash + ")");
  }
}

std::uint64_t Pipeline::seed_for(std::string_view name) const {
  return derive_seed(config_.master_seed, stream_of(name));
}

bool Pipeline::reusable(const StageRecord& previous) const {
  for (const OutputRecord& o : previous.outputs) {
    const auto file = run_dir_ / o.path;
    if (!std::filesystem::exists(file)) return false;
  }
  for (const OutputRecord& o : previous.outputs) {
    if (hash_bytes(read_file(run_dir_ / o.path)) != o.hash) {
      throw IntegrityError("hash mismatch for " + o.path + " of stage " +
                           previous.name);
    }
  }
  return true;
}

StageRecord Pipeline::stage(const std::string& name,
                                   const std::function<void(StageContext&)>& body) {
  if (manifest_.find(name) != nullptr) {
    throw ValidationError("stage '" + name + "' declared twice");
  }
  const std::uint64_t seed = seed_for(name);
  if (previous_) {
    const StageRecord* old = previous_->find(name);
    if (old != nullptr && old->seed == seed && reusable(*old)) {
      manifest_.stages.push_back(*old);
      ++stages_reused_;
      return manifest_.stages.back();
    }
  }
  StageRecord record;
  record.name = name;
  record.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  StageContext context(run_dir_, record);
  body(context);
  record.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest_.stages.push_back(std::move(record));
  ++stages_run_;
  save();
  return manifest_.stages.back();
}

void Pipeline::save() const { save_manifest(manifest_path(), manifest_); }

RunManifest Pipeline::finish() {
  manifest_.complete = true;
  // A resumed run that reused every stage keeps the manifest byte-identical.
  if (stages_run_ == 0 && previous_ && previous_->complete) {
    manifest_ = *previous_;
    return manifest_;
  }
  save();
  return manifest_;
}

RunManifest run_experiment(const ExperimentConfig& config,
                           const std::filesystem::path& output_dir, int threads) {
  // An invalid config leaves nothing behind on disk.
  config.validate();
  std::filesystem::create_directories(output_dir);
  Pipeline pipeline(config, output_dir, threads);
  run_stages(pipeline);
  return pipeline.finish();
}

RunManifest run_experiment(const std::filesystem::path& config_path,
                           const std::optional<std::filesystem::path>& output_dir,
                           int threads, std::optional<std::uint64_t> seed_override) {
  ExperimentConfig config = load_config(config_path);
  if (seed_override) config.master_seed = *seed_override;
  std::filesystem::path out = output_dir ? *output_dir : config.output_dir;
  if (out.empty()) throw ValidationError("no output directory given");
  return run_experiment(config, out, threads);
}

RunManifest resume(const std::filesystem::path& manifest_path, int threads) {
  RunManifest previous = load_manifest(manifest_path);
  ExperimentConfig config = parse_config(previous.config_json);
  config.master_seed = previous.master_seed;
  const std::filesystem::path run_dir = manifest_path.parent_path().empty()
                                            ? std::filesystem::path(".")
                                            : manifest_path.parent_path();
  Pipeline pipeline(config, run_dir, threads, std::move(previous));
  run_stages(pipeline);
  return pipeline.finish();
}

}  // namespace genleak
