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

#ifndef GENLEAK_ATTACKS_ATTACK_CSV_HPP_
#define GENLEAK_ATTACKS_ATTACK_CSV_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genleak {

// One attack outcome as streamed to disk.
struct AttackRow {
  std::string target_id;  // instance id or group id
  int n = 1;              // co-attack strength
  // Absent when the harness did not reveal the label.
  std::optional<bool> true_membership;
  double loss = 0.0;
  int restarts = 0;
  int iterations = 0;
  std::string mode;  // method name, e.g. attacker_net or nearest_neighbor

  bool operator==(const AttackRow&) const = default;
};

inline constexpr std::string_view kAttackCsvHeader =
    "instance_or_group_id,n,true_membership,loss,restarts,iterations,mode";

// Header line plus one line per row. Losses use %.17g so parsing round-trips
// exactly; an unknown membership is an empty field.
std::string attack_rows_to_csv(const std::vector<AttackRow>& rows);
std::string attack_row_to_csv_line(const AttackRow& row);

// Throws FormatError on a bad header, wrong field count or unparsable value.
std::vector<AttackRow> parse_attack_csv(std::string_view text);

}  // namespace genleak

#endif  // GENLEAK_ATTACKS_ATTACK_CSV_HPP_
