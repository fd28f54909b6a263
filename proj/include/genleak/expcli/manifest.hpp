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

#ifndef GENLEAK_EXPCLI_MANIFEST_HPP_
#define GENLEAK_EXPCLI_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace genleak {

inline constexpr std::string_view kCodeVersion = "genleak 1.0.0";

struct OutputRecord {
  std::string path;  // relative to the run directory
  std::string hash;  // FNV-1a of the file bytes, 16 hex digits
};

struct StageRecord {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<OutputRecord> outputs;
  // Small typed facts about the stage, e.g. model, method and auc of an
  // evaluation, stored as strings.
  std::map<std::string, std::string> meta;
  double wall_time_seconds = 0.0;
};

struct RunManifest {
  std::string code_version{kCodeVersion};
  std::string config_hash;
  std::string config_json;  // canonical config the run was started with
  std::uint64_t master_seed = 0;
  std::vector<StageRecord> stages;
  bool complete = false;

  const StageRecord* find(std::string_view stage) const;
};

std::string manifest_to_json(const RunManifest& manifest);
// Throws FormatError on malformed input.
RunManifest parse_manifest(std::string_view text);
RunManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);

std::string hash_bytes(std::string_view bytes);

}  // namespace genleak

#endif  // GENLEAK_EXPCLI_MANIFEST_HPP_
