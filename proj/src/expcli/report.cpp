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

#include "genleak/expcli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

#include "genleak/expcli/config.hpp"
#include "genleak/expcli/manifest.hpp"
#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"
#include "json.hpp"

namespace genleak {
namespace {

using Json = nlohmann::ordered_json;
using CellKey = std::tuple<std::string, std::string, int, std::string>;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_grid_kind(ExperimentKind kind) {
  return kind == ExperimentKind::kTableAttackComparison ||
         kind == ExperimentKind::kRocVsDatasize ||
         kind == ExperimentKind::kRocVsCoattackStrength ||
         kind == ExperimentKind::kStrengthVsDatasizeFrontier;
}

}  // namespace

Report report(const std::filesystem::path& manifest_path) {
  const RunManifest manifest = load_manifest(manifest_path);
  if (!manifest.complete) {
    throw ValidationError("run in " + manifest_path.string() + " is incomplete");
  }
  const ExperimentConfig config = parse_config(manifest.config_json);

  // Cells keep first-seen order; the map only indexes into the vector.
  std::vector<ReportCell> cells;
  std::map<CellKey, std::size_t> index;
  const auto cell = [&](const std::string& model, const std::string& method,
                        int strength, const std::string& size) -> ReportCell& {
    const CellKey key{model, method, strength, size};
    const auto it = index.find(key);
    if (it != index.end()) return cells[it->second];
    index.emplace(key, cells.size());
    cells.push_back({model, method, strength, size, {}, std::nullopt});
    return cells.back();
  };

  if (is_grid_kind(config.kind)) {
    // Every configured cell appears, including ones no method could fill.
    const bool contributors = config.dataset.source == DataSource::kContributors;
    for (ModelKind m : config.evaluation.models) {
      for (int size : config.evaluation.train_sizes) {
        if (contributors) break;
        for (int n : config.evaluation.strengths) {
          for (AttackMethod a : config.evaluation.methods) {
            cell(std::string(to_string(m)), std::string(to_string(a)), n,
                 std::to_string(size));
          }
        }
      }
    }
  }
  for (const StageRecord& s : manifest.stages) {
    const auto auc = s.meta.find("auc");
    if (auc == s.meta.end() || !s.meta.count("model")) continue;
    ReportCell& c = cell(s.meta.at("model"), s.meta.at("method"),
                         std::stoi(s.meta.at("strength")), s.meta.at("train_size"));
    c.aucs.push_back(std::stod(auc->second));
  }

  Report r;
  r.kind = std::string(to_string(config.kind));
  r.config_hash = manifest.config_hash;
  r.csv = "model,method,n,train_size,repeats,mean_auc,min_auc,max_auc\n";
  Json grid = Json::array();
  for (ReportCell& c : cells) {
    Json row = {{"model", c.model},
                {"method", c.method},
                {"n", c.strength},
                {"train_size", c.train_size},
                {"aucs", c.aucs}};
    if (c.aucs.empty()) {
      row["mean_auc"] = nullptr;
      r.csv += c.model + ',' + c.method + ',' + std::to_string(c.strength) + ',' +
               c.train_size + ",0,n/a,n/a,n/a\n";
    } else {
      double sum = 0.0;
      double lo = c.aucs.front();
      double hi = c.aucs.front();
      for (double a : c.aucs) {
        sum += a;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      c.mean_auc = sum / static_cast<double>(c.aucs.size());
      row["mean_auc"] = *c.mean_auc;
      r.csv += c.model + ',' + c.method + ',' + std::to_string(c.strength) + ',' +
               c.train_size + ',' + std::to_string(c.aucs.size()) + ',' +
               fmt(*c.mean_auc) + ',' + fmt(lo) + ',' + fmt(hi) + '\n';
    }
    grid.push_back(row);
  }
  Json j;
  j["kind"] = r.kind;
  j["config_hash"] = r.config_hash;
  j["cells"] = grid;
  r.json = j.dump(2) + "\n";
  r.cells = std::move(cells);

  // The report files are registered in the manifest like any stage output.
  const std::filesystem::path dir = manifest_path.parent_path();
  write_file(dir / "report.json", r.json);
  write_file(dir / "report.csv", r.csv);
  RunManifest updated = manifest;
  std::erase_if(updated.stages, [](const StageRecord& s) { return s.name == "report"; });
  StageRecord stage;
  stage.name = "report";
  stage.outputs = {{"report.json", hash_bytes(r.json)}, {"report.csv", hash_bytes(r.csv)}};
  updated.stages.push_back(std::move(stage));
  save_manifest(manifest_path, updated);
  return r;
}

}  // namespace genleak
