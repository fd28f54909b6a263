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

#ifndef GENLEAK_METRICS_ROC_HPP_
#define GENLEAK_METRICS_ROC_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "genleak/datalab/split.hpp"

namespace genleak {

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

// Threshold classifier "member iff loss < threshold" swept over -inf, every
// distinct loss in increasing order, and +inf.
struct RocReport {
  std::vector<RocPoint> points;
  double auc = 0.0;
  std::size_t num_positive = 0;  // members
  std::size_t num_negative = 0;  // nonmembers
};

// Throws ValidationError when lengths differ, a loss is not finite, or only
// one membership class is present.
RocReport roc_and_auc(std::span<const double> losses,
                      std::span<const Membership> labels);

// threshold,fpr,tpr with %.17g values; infinite thresholds print as inf/-inf.
std::string roc_to_csv(const RocReport& report);
// {"auc":..,"num_positive":..,"num_negative":..}
std::string roc_summary_json(const RocReport& report);

}  // namespace genleak

#endif  // GENLEAK_METRICS_ROC_HPP_
