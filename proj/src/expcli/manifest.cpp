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

#include "genleak/expcli/manifest.hpp"

#include <cstdio>

#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"
#include "json.hpp"

namespace genleak {

using Json = nlohmann::ordered_json;

const StageRecord* RunManifest::find(std::string_view stage) const {
  for (const StageRecord& s : stages) {
    if (s.name == stage) return &s;
  }
  return nullptr;
}

std::string hash_bytes(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string manifest_to_json(const RunManifest& m) {
  Json j;
  j["code_version"] = m.code_version;
  j["config_hash"] = m.config_hash;
  j["master_seed"] = m.master_seed;
  j["complete"] = m.complete;
  j["config"] = Json::parse(m.config_json.empty() ? "{}" : m.config_json);
  Json seeds = Json::object();
  Json stages = Json::array();
  for (const StageRecord& s : m.stages) {
    seeds[s.name] = s.seed;
    Json stage;
    stage["name"] = s.name;
    stage["seed"] = s.seed;
    Json outputs = Json::array();
    for (const OutputRecord& o : s.outputs) {
      outputs.push_back({{"path", o.path}, {"hash", o.hash}});
    }
    stage["outputs"] = outputs;
    stage["meta"] = s.meta;
    stage["wall_time_seconds"] = s.wall_time_seconds;
    stages.push_back(stage);
  }
  j["seeds"] = seeds;
  j["stages"] = stages;
  return j.dump(2) + "\n";
}

RunManifest parse_manifest(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    RunManifest m;
    m.code_version = j.at("code_version").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::string>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.complete = j.at("complete").get<bool>();
    m.config_json = j.at("config").dump(2) + "\n";
    for (const Json& s : j.at("stages")) {
      StageRecord r;
      r.name = s.at("name").get<std::string>();
      r.seed = s.at("seed").get<std::uint64_t>();
      for (const Json& o : s.at("outputs")) {
        r.outputs.push_back(
            {o.at("path").get<std::string>(), o.at("hash").get<std::string>()});
      }
      r.meta = s.at("meta").get<std::map<std::string, std::string>>();
      r.wall_time_seconds = s.at("wall_time_seconds").get<double>();
      m.stages.push_back(std::move(r));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed manifest: ") + e.what());
  }
}

RunManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path));
}

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  write_file(path, manifest_to_json(manifest));
}

}  // namespace genleak
