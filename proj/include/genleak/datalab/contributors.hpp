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

#ifndef GENLEAK_DATALAB_CONTRIBUTORS_HPP_
#define GENLEAK_DATALAB_CONTRIBUTORS_HPP_

#include <cstdint>
#include <vector>

#include "genleak/datalab/dataset.hpp"
#include "genleak/datalab/split.hpp"

namespace genleak {

struct ContributorSpec {
  int glyph_size = 8;
  // Per-image perturbation of the owner's style, as a fraction of the
  // population-level style variation.
  double image_noise = 0.25;
  // How many of a contributing user's images enter training; -1 means all.
  int train_images_per_user = -1;
};

// Users own clusters of correlated glyphs: each user has a digit class and a
// style drawn once, and every image perturbs that style slightly.
struct ContributorSimulation {
  Dataset data;  // contributor_ids hold the owning user
  std::vector<int> member_users;
  std::vector<int> nonmember_users;
  std::vector<InstanceId> train_ids;
  int images_per_user = 0;
};

ContributorSimulation simulate_contributors(const ContributorSpec& spec,
                                            int num_users, int images_per_user,
                                            double contributing_fraction,
                                            std::uint64_t seed);

// One group per user holding that user's first `strength` images. Throws
// ValidationError when either class of users is empty or strength exceeds
// images_per_user.
std::vector<CoAttackGroup> contributor_groups(const ContributorSimulation& sim,
                                              int strength);

}  // namespace genleak

#endif  // GENLEAK_DATALAB_CONTRIBUTORS_HPP_
