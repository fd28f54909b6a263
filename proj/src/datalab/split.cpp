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

#include "genleak/datalab/split.hpp"

#include <algorithm>
#include <numeric>

#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {

std::string_view to_string(Membership membership) {
  return membership == Membership::kMember ? "member" : "nonmember";
}

Membership SealedLabels::reveal(InstanceId id) const {
  const auto it = labels_.find(id);
  if (it == labels_.end()) {
    throw ValidationError("instance " + std::to_string(id) +
                          " is not in the evaluation set");
  }
  return it->second;
}

MembershipSplit make_split(const Dataset& data, int train_count,
                           int eval_members, int eval_nonmembers,
                           std::uint64_t seed) {
  const auto n = static_cast<int>(data.size());
  if (train_count < 1) throw ValidationError("train_count must be positive");
  if (train_count >= n) {
    throw ValidationError("train_count " + std::to_string(train_count) +
                          " leaves no nonmembers in a dataset of " +
                          std::to_string(n));
  }
  if (eval_members < 0 || eval_members > train_count) {
    throw ValidationError("cannot draw " + std::to_string(eval_members) +
                          " evaluation members from " +
                          std::to_string(train_count) + " training instances");
  }
  if (eval_nonmembers < 0 || eval_nonmembers > n - train_count) {
    throw ValidationError("cannot draw " + std::to_string(eval_nonmembers) +
                          " evaluation nonmembers from " +
                          std::to_string(n - train_count) + " holdout instances");
  }

  Rng rng(seed);
  std::vector<InstanceId> order = data.ids;
  std::shuffle(order.begin(), order.end(), rng);

  MembershipSplit split;
  split.train_ids.assign(order.begin(), order.begin() + train_count);
  split.holdout_ids.assign(order.begin() + train_count, order.end());

  std::vector<InstanceId> members = split.train_ids;
  std::vector<InstanceId> nonmembers = split.holdout_ids;
  std::shuffle(members.begin(), members.end(), rng);
  std::shuffle(nonmembers.begin(), nonmembers.end(), rng);
  members.resize(static_cast<std::size_t>(eval_members));
  nonmembers.resize(static_cast<std::size_t>(eval_nonmembers));

  std::map<InstanceId, Membership> labels;
  for (InstanceId id : members) labels.emplace(id, Membership::kMember);
  for (InstanceId id : nonmembers) labels.emplace(id, Membership::kNonmember);
  split.eval_ids = members;
  split.eval_ids.insert(split.eval_ids.end(), nonmembers.begin(), nonmembers.end());
  std::shuffle(split.eval_ids.begin(), split.eval_ids.end(), rng);
  split.labels = SealedLabels(std::move(labels));
  return split;
}

GroupedEval group_eval(const MembershipSplit& split, int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("co-attack strength must be at least 1");
  std::vector<InstanceId> members;
  std::vector<InstanceId> nonmembers;
  for (InstanceId id : split.eval_ids) {
    (split.labels.reveal(id) == Membership::kMember ? members : nonmembers)
        .push_back(id);
  }
  Rng rng(seed);
  std::shuffle(members.begin(), members.end(), rng);
  std::shuffle(nonmembers.begin(), nonmembers.end(), rng);

  GroupedEval out;
  const auto partition = [&](const std::vector<InstanceId>& ids, Membership label) {
    const std::size_t size = static_cast<std::size_t>(n);
    const std::size_t full = ids.size() / size;
    for (std::size_t g = 0; g < full; ++g) {
      CoAttackGroup group;
      group.id = "g" + std::to_string(out.groups.size());
      group.member_ids.assign(ids.begin() + static_cast<std::ptrdiff_t>(g * size),
                              ids.begin() + static_cast<std::ptrdiff_t>((g + 1) * size));
      group.shared_label = label;
      out.groups.push_back(std::move(group));
    }
    out.dropped += ids.size() - full * size;
  };
  partition(members, Membership::kMember);
  partition(nonmembers, Membership::kNonmember);
  return out;
}

}  // namespace genleak
