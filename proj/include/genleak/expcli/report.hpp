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

#ifndef GENLEAK_EXPCLI_REPORT_HPP_
#define GENLEAK_EXPCLI_REPORT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace genleak {

// One cell of the AUC grid, aggregated over repeats.
struct ReportCell {
  std::string model;
  std::string method;
  int strength = 1;
  std::string train_size;  // a size, or a subset name for adversarial runs
  std::vector<double> aucs;  // one per repeat; empty when not applicable
  std::optional<double> mean_auc;
};

struct Report {
  std::string kind;
  std::string config_hash;
  std::vector<ReportCell> cells;
  std::string json;
  std::string csv;
};

// Builds the AUC grid of a completed run, writes report.json and report.csv
// next to the manifest and records them there as a "report" stage. Throws
// ValidationError when the run is incomplete.
Report report(const std::filesystem::path& manifest_path);

}  // namespace genleak

#endif  // GENLEAK_EXPCLI_REPORT_HPP_
