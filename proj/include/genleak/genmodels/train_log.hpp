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

#ifndef GENLEAK_GENMODELS_TRAIN_LOG_HPP_
#define GENLEAK_GENMODELS_TRAIN_LOG_HPP_

#include <string>
#include <vector>

namespace genleak {

struct TrainRecord {
  int step = 0;
  double gen_loss = 0.0;
  // Critic loss for GANs, KL term for VAEs.
  double critic_or_kl_loss = 0.0;
  // Reconstruction term for VAEs, zero for GANs.
  double recon_loss = 0.0;
};

struct TrainLog {
  std::vector<TrainRecord> records;
  std::vector<int> checkpoint_steps;

  void append(const TrainRecord& record);
  // CSV with header step,gen_loss,critic_or_kl_loss,recon_loss.
  std::string to_csv() const;
  // Mean generator loss over consecutive windows of `window` records.
  std::vector<double> windowed_gen_loss(int window) const;
};

}  // namespace genleak

#endif  // GENLEAK_GENMODELS_TRAIN_LOG_HPP_
