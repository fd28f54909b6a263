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

#ifndef GENLEAK_DATALAB_SPLIT_HPP_
#define GENLEAK_DATALAB_SPLIT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "genleak/datalab/dataset.hpp"

namespace genleak {

enum class Membership { kMember, kNonmember };

std::string_view to_string(Membership membership);

// Ground-truth membership of evaluation instances. Only the evaluation
// harness reads it; attack routines receive feature vectors alone.
class SealedLabels {
 public:
  SealedLabels() = default;
  explicit SealedLabels(std::map<InstanceId, Membership> labels)
      : labels_(std::move(labels)) {}

  // Throws ValidationError for an id outside the evaluation set.
  Membership reveal(InstanceId id) const;
  std::size_t size() const { return labels_.size(); }

 private:
  std::map<InstanceId, Membership> labels_;
};

struct MembershipSplit {
  std::vector<InstanceId> train_ids;
  std::vector<InstanceId> holdout_ids;
  // Members and nonmembers shuffled together.
  std::vector<InstanceId> eval_ids;
  SealedLabels labels;
};

// Draws train_count instances without replacement for training and leaves
// the rest as holdout, then samples the requested numbers of evaluation
// members and nonmembers. Throws ValidationError when the counts are
// infeasible, including a training set that leaves no holdout.
MembershipSplit make_split(const Dataset& data, int train_count,
                           int eval_members, int eval_nonmembers,
                           std::uint64_t seed);

struct CoAttackGroup {
  std::string id;
  std::vector<InstanceId> member_ids;
  Membership shared_label = Membership::kMember;
};

struct GroupedEval {
  std::vector<CoAttackGroup> groups;
  // Evaluation instances left over when n does not divide a class size.
  std::size_t dropped = 0;
};

// Partitions the evaluation members and nonmembers separately into groups of
// exactly n. Throws ValidationError when n < 1.
GroupedEval group_eval(const MembershipSplit& split, int n, std::uint64_t seed);

}  // namespace genleak

#endif  // GENLEAK_DATALAB_SPLIT_HPP_
