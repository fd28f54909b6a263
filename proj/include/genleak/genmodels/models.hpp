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

#ifndef GENLEAK_GENMODELS_MODELS_HPP_
#define GENLEAK_GENMODELS_MODELS_HPP_

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "genleak/numcore/network.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {

enum class LatentPrior {
  kStandardNormal,
  kUniformUnit,  // uniform on the box [-1, 1]^k
};

enum class CriticMode { kWasserstein, kVanilla };

std::string_view to_string(LatentPrior prior);
std::string_view to_string(CriticMode mode);
LatentPrior latent_prior_from_string(std::string_view name);

// Maps a latent code z in R^k to a data point in R^d.
struct GeneratorModel {
  NetworkSpec spec;
  ParamVector params;
  int latent_dim = 0;
  LatentPrior latent_prior = LatentPrior::kStandardNormal;

  int data_dim() const { return spec.output_size(); }
  void validate() const;
};

// Scores a data point; a probability in vanilla mode, an unbounded
// Wasserstein potential otherwise.
struct CriticModel {
  NetworkSpec spec;
  ParamVector params;
  CriticMode mode = CriticMode::kWasserstein;

  void validate() const;
};

// The encoder emits 2k values per instance: the posterior means followed by
// the log-variances.
struct VaeModel {
  NetworkSpec encoder_spec;
  ParamVector encoder_params;
  NetworkSpec decoder_spec;
  ParamVector decoder_params;
  int latent_dim = 0;

  int data_dim() const { return decoder_spec.output_size(); }
  void validate() const;
};

// k x count matrix of draws from the prior.
Matrix sample_latent(LatentPrior prior, int latent_dim, int count, Rng& rng);

// d x count matrix of generated instances, deterministic in `seed`.
// Throws ValidationError when count < 1.
Matrix sample_generator(const GeneratorModel& model, int count,
                        std::uint64_t seed);

Vector vae_decode(const VaeModel& model, const Vector& z);
Matrix vae_decode(const VaeModel& model, const Matrix& z);

// Posterior means for every column of x.
Matrix encode_mean(const VaeModel& model, const Matrix& x);

// The decoder viewed as a generator, which is all an attacker gets to see of
// a VAE.
GeneratorModel decoder_as_generator(const VaeModel& model);

// z = mean + exp(logvar / 2) * eps, columnwise.
Matrix reparameterize(const Matrix& mean, const Matrix& logvar,
                      const Matrix& eps);

// KL(N(mean, diag exp(logvar)) || N(0, I)) for each column:
// 1/2 * sum_j (mean_j^2 + exp(logvar_j) - 1 - logvar_j).
Vector gaussian_kl(const Matrix& mean, const Matrix& logvar);

// Checkpoint files carry the role tag of the stored network.
void save_generator(const std::filesystem::path& path,
                    const GeneratorModel& model);
GeneratorModel load_generator(const std::filesystem::path& path,
                              LatentPrior prior = LatentPrior::kStandardNormal);
void save_critic(const std::filesystem::path& path, const CriticModel& model);
CriticModel load_critic(const std::filesystem::path& path);
// Writes <stem>.encoder.glnk and <stem>.decoder.glnk next to each other.
void save_vae(const std::filesystem::path& stem, const VaeModel& model);
VaeModel load_vae(const std::filesystem::path& stem);

}  // namespace genleak

#endif  // GENLEAK_GENMODELS_MODELS_HPP_
