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

#ifndef GENLEAK_DATALAB_DATASET_HPP_
#define GENLEAK_DATALAB_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "genleak/numcore/network.hpp"

namespace genleak {

using InstanceId = std::int64_t;

// Immutable collection of instances in [0,1]^d, one per column.
struct Dataset {
  Matrix features;
  std::vector<InstanceId> ids;
  std::vector<int> contributor_ids;  // empty when instances have no owner
  std::vector<int> class_labels;     // empty when unlabeled

  int dim() const { return static_cast<int>(features.rows()); }
  std::size_t size() const { return ids.size(); }

  // Throws ValidationError on non-finite or out-of-range features,
  // duplicate ids, or inconsistent column counts.
  void validate() const;

  std::unordered_map<InstanceId, std::size_t> index() const;

  // Columns for the given ids, in the given order.
  Matrix gather(std::span<const InstanceId> wanted) const;
  Dataset subset(std::span<const InstanceId> wanted) const;

  // id[,contributor][,label],f0,...,f{d-1}
  std::string to_csv() const;
};

}  // namespace genleak

#endif  // GENLEAK_DATALAB_DATASET_HPP_
