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

#include "genleak/datalab/contributors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "genleak/datalab/synthetic.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {
namespace {

// Moves `base` a fraction `t` of the way towards `other`, field by field.
GlyphStyle blend(const GlyphStyle& base, const GlyphStyle& other, double t) {
  const auto mix = [t](double a, double b) { return a + t * (b - a); };
  GlyphStyle s;
  s.shift_x = mix(base.shift_x, other.shift_x);
  s.shift_y = mix(base.shift_y, other.shift_y);
  s.scale_x = mix(base.scale_x, other.scale_x);
  s.scale_y = mix(base.scale_y, other.scale_y);
  s.shear = mix(base.shear, other.shear);
  s.half_width = mix(base.half_width, other.half_width);
  s.intensity = mix(base.intensity, other.intensity);
  for (int i = 0; i < 6; ++i) {
    s.anchor_dx[i] = mix(base.anchor_dx[i], other.anchor_dx[i]);
    s.anchor_dy[i] = mix(base.anchor_dy[i], other.anchor_dy[i]);
  }
  return s;
}

}  // namespace

ContributorSimulation simulate_contributors(const ContributorSpec& spec,
                                            int num_users, int images_per_user,
                                            double contributing_fraction,
                                            std::uint64_t seed) {
  if (num_users < 1) throw ValidationError("num_users must be positive");
  if (images_per_user < 1) throw ValidationError("images_per_user must be >= 1");
  if (!(contributing_fraction >= 0.0 && contributing_fraction <= 1.0)) {
    throw ValidationError("contributing_fraction must lie in [0, 1]");
  }
  if (spec.image_noise < 0.0 || spec.image_noise > 1.0) {
    throw ValidationError("image_noise must lie in [0, 1]");
  }
  if (spec.train_images_per_user == 0 ||
      spec.train_images_per_user > images_per_user) {
    throw ValidationError("train_images_per_user must be -1 or in [1, images_per_user]");
  }

  Rng rng(seed);
  std::uniform_int_distribution<int> digit(0, kNumDigitClasses - 1);
  ContributorSimulation sim;
  sim.images_per_user = images_per_user;
  Dataset& data = sim.data;
  data.features.resize(spec.glyph_size * spec.glyph_size,
                       static_cast<Eigen::Index>(num_users) * images_per_user);
  InstanceId next = 0;
  for (int u = 0; u < num_users; ++u) {
    const int cls = digit(rng);
    const GlyphStyle user_style = random_glyph_style(rng);
    for (int i = 0; i < images_per_user; ++i) {
      const GlyphStyle image_style =
          blend(user_style, random_glyph_style(rng), spec.image_noise);
      data.features.col(next) = render_digit(cls, spec.glyph_size, image_style);
      data.ids.push_back(next);
      data.contributor_ids.push_back(u);
      data.class_labels.push_back(cls);
      ++next;
    }
  }

  std::vector<int> users(static_cast<std::size_t>(num_users));
  std::iota(users.begin(), users.end(), 0);
  std::shuffle(users.begin(), users.end(), rng);
  const auto contributing =
      static_cast<std::size_t>(std::lround(contributing_fraction * num_users));
  sim.member_users.assign(users.begin(), users.begin() + contributing);
  sim.nonmember_users.assign(users.begin() + contributing, users.end());
  std::sort(sim.member_users.begin(), sim.member_users.end());
  std::sort(sim.nonmember_users.begin(), sim.nonmember_users.end());

  const int per_user = spec.train_images_per_user < 0 ? images_per_user
                                                      : spec.train_images_per_user;
  for (int u : sim.member_users) {
    for (int i = 0; i < per_user; ++i) {
      sim.train_ids.push_back(static_cast<InstanceId>(u) * images_per_user + i);
    }
  }
  return sim;
}

std::vector<CoAttackGroup> contributor_groups(const ContributorSimulation& sim,
                                              int strength) {
  if (strength < 1 || strength > sim.images_per_user) {
    throw ValidationError("co-attack strength must lie in [1, images_per_user]");
  }
  if (sim.member_users.empty() || sim.nonmember_users.empty()) {
    throw ValidationError(
        "contributor evaluation needs both contributing and non-contributing users");
  }
  std::vector<CoAttackGroup> groups;
  const auto add = [&](int user, Membership label) {
    CoAttackGroup g;
    g.id = "u" + std::to_string(user);
    for (int i = 0; i < strength; ++i) {
      g.member_ids.push_back(static_cast<InstanceId>(user) * sim.images_per_user + i);
    }
    g.shared_label = label;
    groups.push_back(std::move(g));
  };
  for (int u : sim.member_users) add(u, Membership::kMember);
  for (int u : sim.nonmember_users) add(u, Membership::kNonmember);
  return groups;
}

}  // namespace genleak
