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

#include "genleak/metrics/roc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "json.hpp"

#include "genleak/numcore/errors.hpp"

namespace genleak {
namespace {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RocReport roc_and_auc(std::span<const double> losses,
                      std::span<const Membership> labels) {
  if (losses.size() != labels.size()) {
    throw DimensionError("roc: losses and labels differ in length");
  }
  RocReport report;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    if (!std::isfinite(losses[i])) throw ValidationError("roc: non-finite loss");
    if (labels[i] == Membership::kMember) {
      ++report.num_positive;
    } else {
      ++report.num_negative;
    }
  }
  if (report.num_positive == 0 || report.num_negative == 0) {
    throw ValidationError("roc: need at least one member and one nonmember");
  }

  std::vector<std::size_t> order(losses.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return losses[a] < losses[b]; });

  const double pos = static_cast<double>(report.num_positive);
  const double neg = static_cast<double>(report.num_negative);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  report.points.push_back({-kInf, 0.0, 0.0});
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    // At threshold equal to this distinct value, only strictly smaller
    // losses are predicted members.
    const double value = losses[order[i]];
    report.points.push_back({value, fp / neg, tp / pos});
    for (; i < order.size() && losses[order[i]] == value; ++i) {
      if (labels[order[i]] == Membership::kMember) {
        ++tp;
      } else {
        ++fp;
      }
    }
  }
  report.points.push_back({kInf, 1.0, 1.0});

  double area = 0.0;
  for (std::size_t k = 1; k < report.points.size(); ++k) {
    const RocPoint& a = report.points[k - 1];
    const RocPoint& b = report.points[k];
    area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
  }
  report.auc = area;
  return report;
}

std::string roc_to_csv(const RocReport& report) {
  std::string out = "threshold,fpr,tpr\n";
  for (const RocPoint& p : report.points) {
    out += format_double(p.threshold) + ',' + format_double(p.fpr) + ',' +
           format_double(p.tpr) + '\n';
  }
  return out;
}

std::string roc_summary_json(const RocReport& report) {
  nlohmann::ordered_json j;
  j["auc"] = report.auc;
  j["num_positive"] = report.num_positive;
  j["num_negative"] = report.num_negative;
  return j.dump();
}

}  // namespace genleak
