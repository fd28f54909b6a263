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

#include "genleak/datalab/dataset.hpp"

#include <cmath>
#include <cstdio>

#include "genleak/numcore/errors.hpp"

namespace genleak {

void Dataset::validate() const {
  if (static_cast<std::size_t>(features.cols()) != ids.size()) {
    throw ValidationError("dataset has " + std::to_string(features.cols()) +
                          " columns but " + std::to_string(ids.size()) + " ids");
  }
  if (!contributor_ids.empty() && contributor_ids.size() != ids.size()) {
    throw ValidationError("contributor ids do not cover every instance");
  }
  if (!class_labels.empty() && class_labels.size() != ids.size()) {
    throw ValidationError("class labels do not cover every instance");
  }
  for (Eigen::Index j = 0; j < features.cols(); ++j) {
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      const double v = features(i, j);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw ValidationError("feature outside [0,1] in instance " +
                              std::to_string(ids[static_cast<std::size_t>(j)]));
      }
    }
  }
  if (index().size() != ids.size()) throw ValidationError("duplicate instance ids");
}

std::unordered_map<InstanceId, std::size_t> Dataset::index() const {
  std::unordered_map<InstanceId, std::size_t> map;
  map.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) map.emplace(ids[i], i);
  return map;
}

Matrix Dataset::gather(std::span<const InstanceId> wanted) const {
  const auto map = index();
  Matrix out(features.rows(), static_cast<Eigen::Index>(wanted.size()));
  for (std::size_t j = 0; j < wanted.size(); ++j) {
    const auto it = map.find(wanted[j]);
    if (it == map.end()) {
      throw ValidationError("unknown instance id " + std::to_string(wanted[j]));
    }
    out.col(static_cast<Eigen::Index>(j)) =
        features.col(static_cast<Eigen::Index>(it->second));
  }
  return out;
}

Dataset Dataset::subset(std::span<const InstanceId> wanted) const {
  const auto map = index();
  Dataset out;
  out.features.resize(features.rows(), static_cast<Eigen::Index>(wanted.size()));
  for (std::size_t j = 0; j < wanted.size(); ++j) {
    const auto it = map.find(wanted[j]);
    if (it == map.end()) {
      throw ValidationError("unknown instance id " + std::to_string(wanted[j]));
    }
    const std::size_t src = it->second;
    out.features.col(static_cast<Eigen::Index>(j)) =
        features.col(static_cast<Eigen::Index>(src));
    out.ids.push_back(ids[src]);
    if (!contributor_ids.empty()) out.contributor_ids.push_back(contributor_ids[src]);
    if (!class_labels.empty()) out.class_labels.push_back(class_labels[src]);
  }
  return out;
}

std::string Dataset::to_csv() const {
  std::string out = "id";
  if (!contributor_ids.empty()) out += ",contributor";
  if (!class_labels.empty()) out += ",label";
  for (int i = 0; i < dim(); ++i) out += ",f" + std::to_string(i);
  out += '\n';
  char buf[32];
  for (std::size_t j = 0; j < ids.size(); ++j) {
    out += std::to_string(ids[j]);
    if (!contributor_ids.empty()) out += "," + std::to_string(contributor_ids[j]);
    if (!class_labels.empty()) out += "," + std::to_string(class_labels[j]);
    for (int i = 0; i < dim(); ++i) {
      std::snprintf(buf, sizeof buf, ",%.17g",
                    features(i, static_cast<Eigen::Index>(j)));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace genleak
