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

#include "genleak/genmodels/train_log.hpp"

#include <cstdio>

#include "genleak/numcore/errors.hpp"

namespace genleak {

void TrainLog::append(const TrainRecord& record) {
  if (!records.empty() && record.step <= records.back().step) {
    throw ValidationError("train log steps must be strictly increasing");
  }
  records.push_back(record);
}

std::string TrainLog::to_csv() const {
  std::string out = "step,gen_loss,critic_or_kl_loss,recon_loss\n";
  char line[128];
  for (const TrainRecord& r : records) {
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n", r.step,
                  r.gen_loss, r.critic_or_kl_loss, r.recon_loss);
    out += line;
  }
  return out;
}

std::vector<double> TrainLog::windowed_gen_loss(int window) const {
  if (window < 1) throw ValidationError("window must be positive");
  std::vector<double> means;
  const auto w = static_cast<std::size_t>(window);
  for (std::size_t start = 0; start + w <= records.size(); start += w) {
    double sum = 0.0;
    for (std::size_t i = start; i < start + w; ++i) sum += records[i].gen_loss;
    means.push_back(sum / window);
  }
  return means;
}

}  // namespace genleak
