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

#include "genleak/metrics/evaluation.hpp"

#include <string>

#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/parallel.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {

std::string_view to_string(AttackMethod method) {
  switch (method) {
    case AttackMethod::kAttackerNet:
      return "attacker_net";
    case AttackMethod::kNearestNeighbor:
      return "nearest_neighbor";
    case AttackMethod::kDirectProjection:
      return "direct_projection";
  }
  return "unknown";
}

AttackMethod attack_method_from_string(std::string_view name) {
  if (name == "attacker_net") return AttackMethod::kAttackerNet;
  if (name == "nearest_neighbor") return AttackMethod::kNearestNeighbor;
  if (name == "direct_projection") return AttackMethod::kDirectProjection;
  throw ValidationError("unknown attack method '" + std::string(name) + "'");
}

std::vector<double> attack_group_losses(const GeneratorModel& generator,
                                        const Dataset& data,
                                        const std::vector<CoAttackGroup>& groups,
                                        const AttackConfig& config,
                                        const EvalOptions& options) {
  config.validate();
  const auto index = data.index();
  std::vector<Matrix> targets;
  targets.reserve(groups.size());
  for (const CoAttackGroup& g : groups) {
    if (g.member_ids.empty()) throw ValidationError("group " + g.id + " is empty");
    Matrix xs(data.dim(), static_cast<Eigen::Index>(g.member_ids.size()));
    for (std::size_t i = 0; i < g.member_ids.size(); ++i) {
      const auto it = index.find(g.member_ids[i]);
      if (it == index.end()) {
        throw ValidationError("unknown instance id " + std::to_string(g.member_ids[i]));
      }
      xs.col(static_cast<Eigen::Index>(i)) =
          data.features.col(static_cast<Eigen::Index>(it->second));
    }
    targets.push_back(std::move(xs));
  }

  Matrix pool;
  if (options.method == AttackMethod::kNearestNeighbor) {
    pool = sample_generator(generator, options.nn_pool_size, options.nn_pool_seed);
  }
  std::vector<double> losses(groups.size());
  parallel_for(groups.size(), options.threads, [&](std::size_t g) {
    AttackConfig cfg = config;
    cfg.seed = derive_seed(config.seed, g);
    const Matrix& xs = targets[g];
    switch (options.method) {
      case AttackMethod::kAttackerNet:
        losses[g] = attack_co(generator, xs, cfg).loss;
        break;
      case AttackMethod::kDirectProjection:
        losses[g] = attack_direct_projection(generator, xs, cfg).loss;
        break;
      case AttackMethod::kNearestNeighbor: {
        double sum = 0.0;
        for (Eigen::Index j = 0; j < xs.cols(); ++j) {
          sum += attack_nearest_neighbor(pool, xs.col(j));
        }
        losses[g] = sum / static_cast<double>(xs.cols());
        break;
      }
    }
  });
  return losses;
}

MembershipEvaluation evaluate_membership(const GeneratorModel& generator,
                                         const Dataset& data,
                                         const std::vector<CoAttackGroup>& groups,
                                         const AttackConfig& config,
                                         const EvalOptions& options) {
  const std::vector<double> losses =
      attack_group_losses(generator, data, groups, config, options);
  MembershipEvaluation eval;
  std::vector<Membership> labels;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    AttackRow row;
    row.target_id = groups[g].id;
    row.n = static_cast<int>(groups[g].member_ids.size());
    row.true_membership = groups[g].shared_label == Membership::kMember;
    row.loss = losses[g];
    const bool nn = options.method == AttackMethod::kNearestNeighbor;
    row.restarts = nn ? 0 : config.restarts;
    row.iterations = nn ? 0 : config.iterations;
    row.mode = std::string(to_string(options.method));
    eval.rows.push_back(std::move(row));
    labels.push_back(groups[g].shared_label);
  }
  eval.roc = roc_and_auc(losses, labels);
  return eval;
}

std::vector<CoAttackGroup> single_groups(const MembershipSplit& split) {
  std::vector<CoAttackGroup> groups;
  groups.reserve(split.eval_ids.size());
  for (InstanceId id : split.eval_ids) {
    CoAttackGroup g;
    g.id = std::to_string(id);
    g.member_ids = {id};
    g.shared_label = split.labels.reveal(id);
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace genleak
