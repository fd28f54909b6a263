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

#include "genleak/genmodels/models.hpp"

#include <cmath>
#include <random>
#include <string>

#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"

namespace genleak {

std::string_view to_string(LatentPrior prior) {
  return prior == LatentPrior::kStandardNormal ? "standard_normal"
                                               : "uniform_unit";
}

std::string_view to_string(CriticMode mode) {
  return mode == CriticMode::kWasserstein ? "wasserstein" : "vanilla";
}

LatentPrior latent_prior_from_string(std::string_view name) {
  if (name == "standard_normal") return LatentPrior::kStandardNormal;
  if (name == "uniform_unit") return LatentPrior::kUniformUnit;
  throw ValidationError("unknown latent prior '" + std::string(name) + "'");
}

void GeneratorModel::validate() const {
  spec.validate();
  if (latent_dim != spec.input_size()) {
    throw ValidationError("generator input size must equal latent_dim");
  }
  if (params.size() != spec.param_count()) {
    throw DimensionError("generator parameter count does not match its spec");
  }
}

void CriticModel::validate() const {
  spec.validate();
  if (spec.output_size() != 1) {
    throw ValidationError("critic must have a single output");
  }
  const Activation expected = mode == CriticMode::kVanilla
                                  ? Activation::kSigmoid
                                  : Activation::kIdentity;
  if (spec.output_activation != expected) {
    throw ValidationError(std::string("critic in ") +
                          std::string(to_string(mode)) +
                          " mode has the wrong output activation");
  }
  if (params.size() != spec.param_count()) {
    throw DimensionError("critic parameter count does not match its spec");
  }
}

void VaeModel::validate() const {
  encoder_spec.validate();
  decoder_spec.validate();
  if (encoder_spec.output_size() != 2 * latent_dim) {
    throw ValidationError("encoder output size must be 2 * latent_dim");
  }
  if (decoder_spec.input_size() != latent_dim) {
    throw ValidationError("decoder input size must equal latent_dim");
  }
  if (decoder_spec.output_size() != encoder_spec.input_size()) {
    throw ValidationError("decoder output and encoder input sizes differ");
  }
  if (encoder_params.size() != encoder_spec.param_count() ||
      decoder_params.size() != decoder_spec.param_count()) {
    throw DimensionError("VAE parameter counts do not match their specs");
  }
}

Matrix sample_latent(LatentPrior prior, int latent_dim, int count, Rng& rng) {
  Matrix z(latent_dim, count);
  if (prior == LatentPrior::kStandardNormal) {
    std::normal_distribution<double> dist(0.0, 1.0);
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = dist(rng);
    }
  } else {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = dist(rng);
    }
  }
  return z;
}

Matrix sample_generator(const GeneratorModel& model, int count,
                        std::uint64_t seed) {
  if (count < 1) throw ValidationError("sample count must be at least 1");
  Rng rng(seed);
  const Matrix z = sample_latent(model.latent_prior, model.latent_dim, count, rng);
  return predict(model.spec, model.params, z);
}

Vector vae_decode(const VaeModel& model, const Vector& z) {
  return predict(model.decoder_spec, model.decoder_params, z);
}

Matrix vae_decode(const VaeModel& model, const Matrix& z) {
  return predict(model.decoder_spec, model.decoder_params, z);
}

Matrix encode_mean(const VaeModel& model, const Matrix& x) {
  const Matrix out = predict(model.encoder_spec, model.encoder_params, x);
  return out.topRows(model.latent_dim);
}

GeneratorModel decoder_as_generator(const VaeModel& model) {
  GeneratorModel g;
  g.spec = model.decoder_spec;
  g.params = model.decoder_params;
  g.latent_dim = model.latent_dim;
  g.latent_prior = LatentPrior::kStandardNormal;
  return g;
}

Matrix reparameterize(const Matrix& mean, const Matrix& logvar,
                      const Matrix& eps) {
  if (mean.rows() != logvar.rows() || mean.cols() != logvar.cols() ||
      mean.rows() != eps.rows() || mean.cols() != eps.cols()) {
    throw DimensionError("reparameterize: mean, logvar and eps shapes differ");
  }
  return (mean.array() + (0.5 * logvar.array()).exp() * eps.array()).matrix();
}

Vector gaussian_kl(const Matrix& mean, const Matrix& logvar) {
  if (mean.rows() != logvar.rows() || mean.cols() != logvar.cols()) {
    throw DimensionError("gaussian_kl: mean and logvar shapes differ");
  }
  return 0.5 * (mean.array().square() + logvar.array().exp() - 1.0 -
                logvar.array())
                   .colwise()
                   .sum()
                   .transpose()
                   .matrix();
}

void save_generator(const std::filesystem::path& path,
                    const GeneratorModel& model) {
  save_checkpoint(path, {ModelRole::kGenerator, model.spec, model.params});
}

namespace {

Checkpoint load_role(const std::filesystem::path& path, ModelRole role) {
  Checkpoint cp = load_checkpoint(path);
  if (cp.role != role) {
    throw FormatError(path.string() + ": expected a " +
                      std::string(to_string(role)) + " checkpoint, found " +
                      std::string(to_string(cp.role)));
  }
  return cp;
}

std::filesystem::path with_suffix(std::filesystem::path stem,
                                  std::string_view suffix) {
  stem += suffix;
  return stem;
}

}  // namespace

GeneratorModel load_generator(const std::filesystem::path& path,
                              LatentPrior prior) {
  Checkpoint cp = load_role(path, ModelRole::kGenerator);
  GeneratorModel g;
  g.latent_dim = cp.spec.input_size();
  g.spec = std::move(cp.spec);
  g.params = std::move(cp.params);
  g.latent_prior = prior;
  return g;
}

void save_critic(const std::filesystem::path& path, const CriticModel& model) {
  save_checkpoint(path, {ModelRole::kCritic, model.spec, model.params});
}

CriticModel load_critic(const std::filesystem::path& path) {
  Checkpoint cp = load_role(path, ModelRole::kCritic);
  CriticModel c;
  c.mode = cp.spec.output_activation == Activation::kSigmoid
               ? CriticMode::kVanilla
               : CriticMode::kWasserstein;
  c.spec = std::move(cp.spec);
  c.params = std::move(cp.params);
  return c;
}

void save_vae(const std::filesystem::path& stem, const VaeModel& model) {
  save_checkpoint(with_suffix(stem, ".encoder.glnk"),
                  {ModelRole::kEncoder, model.encoder_spec, model.encoder_params});
  save_checkpoint(with_suffix(stem, ".decoder.glnk"),
                  {ModelRole::kDecoder, model.decoder_spec, model.decoder_params});
}

VaeModel load_vae(const std::filesystem::path& stem) {
  Checkpoint enc = load_role(with_suffix(stem, ".encoder.glnk"), ModelRole::kEncoder);
  Checkpoint dec = load_role(with_suffix(stem, ".decoder.glnk"), ModelRole::kDecoder);
  VaeModel m;
  m.latent_dim = dec.spec.input_size();
  m.encoder_spec = std::move(enc.spec);
  m.encoder_params = std::move(enc.params);
  m.decoder_spec = std::move(dec.spec);
  m.decoder_params = std::move(dec.params);
  m.validate();
  return m;
}

}  // namespace genleak
