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

#include "genleak/expcli/config.hpp"

#include <cstdio>
#include <set>
#include <string>

#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"
#include "json.hpp"

namespace genleak {
namespace {

using Json = nlohmann::ordered_json;

// Reads the fields of one JSON object and rejects keys nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const Json& object, std::string path)
      : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw ValidationError(path_ + " must be an object");
  }

  bool has(const char* key) const { return object_.contains(key); }

  template <typename T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    if (!object_.contains(key)) return;
    try {
      out = object_.at(key).template get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ValidationError(path_ + "." + key + " has the wrong type");
    }
  }

  template <typename T, typename Parse>
  void get_enum(const char* key, T& out, Parse parse) {
    std::string name;
    if (!object_.contains(key)) {
      seen_.insert(key);
      return;
    }
    get(key, name);
    out = parse(name);
  }

  template <typename T, typename Parse>
  void get_enum_list(const char* key, std::vector<T>& out, Parse parse) {
    if (!object_.contains(key)) {
      seen_.insert(key);
      return;
    }
    std::vector<std::string> names;
    get(key, names);
    out.clear();
    for (const std::string& n : names) out.push_back(parse(n));
  }

  const Json* child(const char* key) {
    seen_.insert(key);
    return object_.contains(key) ? &object_.at(key) : nullptr;
  }

  std::string path(const char* key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& [key, value] : object_.items()) {
      if (!seen_.count(key)) throw ValidationError("unknown key " + path_ + "." + key);
    }
  }

 private:
  const Json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename T>
std::vector<std::string> names_of(const std::vector<T>& values) {
  std::vector<std::string> out;
  for (const T& v : values) out.emplace_back(to_string(v));
  return out;
}

void read_gan(const Json& j, GanTrainConfig& gan) {
  ObjectReader r(j, "model.gan");
  r.get("steps", gan.steps);
  r.get("batch_size", gan.batch_size);
  r.get("critic_steps", gan.critic_steps);
  r.get("clip", gan.clip);
  r.get("generator_lr", gan.generator_lr);
  r.get("critic_lr", gan.critic_lr);
  r.get("generator_hidden", gan.generator_hidden);
  r.get("critic_hidden", gan.critic_hidden);
  r.get_enum("output_activation", gan.output_activation, activation_from_string);
  r.get_enum("latent_prior", gan.latent_prior, latent_prior_from_string);
  r.get("l2_reg", gan.l2_reg);
  r.get("checkpoint_every", gan.checkpoint_every);
  r.finish();
}

void read_vae(const Json& j, VaeTrainConfig& vae) {
  ObjectReader r(j, "model.vae");
  r.get("steps", vae.steps);
  r.get("batch_size", vae.batch_size);
  r.get("learning_rate", vae.learning_rate);
  r.get("encoder_hidden", vae.encoder_hidden);
  r.get("decoder_hidden", vae.decoder_hidden);
  r.get_enum("output_activation", vae.output_activation, activation_from_string);
  r.get("observation_stddev", vae.observation_stddev);
  r.get("l2_reg", vae.l2_reg);
  r.get("checkpoint_every", vae.checkpoint_every);
  r.finish();
}

void read_attack(const Json& j, AttackConfig& attack) {
  ObjectReader r(j, "attack");
  r.get("attacker_hidden", attack.attacker_hidden);
  r.get_enum("attacker_activation", attack.attacker_activation,
             activation_from_string);
  r.get("iterations", attack.iterations);
  r.get("restarts", attack.restarts);
  r.get_enum("optimizer", attack.optimizer, attack_optimizer_from_string);
  r.get("learning_rate", attack.learning_rate);
  r.get("projection_learning_rate", attack.projection_learning_rate);
  r.get_enum("gradient_mode", attack.gradient_mode, gradient_mode_from_string);
  r.get("fd_step", attack.fd_step);
  r.finish();
}

void read_dataset(const Json& j, DatasetSpec& d) {
  ObjectReader r(j, "dataset");
  r.get_enum("source", d.source, data_source_from_string);
  r.get("pool_size", d.pool_size);
  r.get("glyph_size", d.glyph_size);
  r.get("num_components", d.num_components);
  r.get("points_per_component", d.points_per_component);
  r.get("dimension", d.dimension);
  r.get("spread", d.spread);
  r.get("idx_images", d.idx_images);
  r.get("idx_labels", d.idx_labels);
  r.get("num_users", d.num_users);
  r.get("images_per_user", d.images_per_user);
  r.get("contributing_fraction", d.contributing_fraction);
  r.get("image_noise", d.image_noise);
  r.get("train_images_per_user", d.train_images_per_user);
  r.finish();
}

void read_evaluation(const Json& j, EvaluationSpec& e) {
  ObjectReader r(j, "evaluation");
  r.get("train_sizes", e.train_sizes);
  r.get("strengths", e.strengths);
  r.get_enum_list("methods", e.methods, attack_method_from_string);
  r.get_enum_list("models", e.models, model_kind_from_string);
  r.get("eval_members", e.eval_members);
  r.get("eval_nonmembers", e.eval_nonmembers);
  r.get("nn_pool_size", e.nn_pool_size);
  r.get("effective_auc", e.effective_auc);
  r.get("repeats", e.repeats);
  r.finish();
}

Json to_json(const ExperimentConfig& c, bool with_output_dir) {
  Json j;
  j["kind"] = std::string(to_string(c.kind));
  j["name"] = c.name;
  j["master_seed"] = c.master_seed;
  if (with_output_dir) j["output_dir"] = c.output_dir.string();

  const DatasetSpec& d = c.dataset;
  j["dataset"] = {
      {"source", std::string(to_string(d.source))},
      {"pool_size", d.pool_size},
      {"glyph_size", d.glyph_size},
      {"num_components", d.num_components},
      {"points_per_component", d.points_per_component},
      {"dimension", d.dimension},
      {"spread", d.spread},
      {"idx_images", d.idx_images},
      {"idx_labels", d.idx_labels},
      {"num_users", d.num_users},
      {"images_per_user", d.images_per_user},
      {"contributing_fraction", d.contributing_fraction},
      {"image_noise", d.image_noise},
      {"train_images_per_user", d.train_images_per_user},
  };

  const GanTrainConfig& g = c.gan;
  const VaeTrainConfig& v = c.vae;
  j["model"] = {
      {"latent_dim", c.latent_dim},
      {"gan",
       {{"steps", g.steps},
        {"batch_size", g.batch_size},
        {"critic_steps", g.critic_steps},
        {"clip", g.clip},
        {"generator_lr", g.generator_lr},
        {"critic_lr", g.critic_lr},
        {"generator_hidden", g.generator_hidden},
        {"critic_hidden", g.critic_hidden},
        {"output_activation", std::string(to_string(g.output_activation))},
        {"latent_prior", std::string(to_string(g.latent_prior))},
        {"l2_reg", g.l2_reg},
        {"checkpoint_every", g.checkpoint_every}}},
      {"vae",
       {{"steps", v.steps},
        {"batch_size", v.batch_size},
        {"learning_rate", v.learning_rate},
        {"encoder_hidden", v.encoder_hidden},
        {"decoder_hidden", v.decoder_hidden},
        {"output_activation", std::string(to_string(v.output_activation))},
        {"observation_stddev", v.observation_stddev},
        {"l2_reg", v.l2_reg},
        {"checkpoint_every", v.checkpoint_every}}},
  };

  const AttackConfig& a = c.attack;
  j["attack"] = {
      {"attacker_hidden", a.attacker_hidden},
      {"attacker_activation", std::string(to_string(a.attacker_activation))},
      {"iterations", a.iterations},
      {"restarts", a.restarts},
      {"optimizer", std::string(to_string(a.optimizer))},
      {"learning_rate", a.learning_rate},
      {"projection_learning_rate", a.projection_learning_rate},
      {"gradient_mode", std::string(to_string(a.gradient_mode))},
      {"fd_step", a.fd_step},
  };

  const EvaluationSpec& e = c.evaluation;
  j["evaluation"] = {
      {"train_sizes", e.train_sizes},
      {"strengths", e.strengths},
      {"methods", names_of(e.methods)},
      {"models", names_of(e.models)},
      {"eval_members", e.eval_members},
      {"eval_nonmembers", e.eval_nonmembers},
      {"nn_pool_size", e.nn_pool_size},
      {"effective_auc", e.effective_auc},
      {"repeats", e.repeats},
  };
  j["dispersion"] = {{"ks", c.dispersion.ks},
                     {"num_samples", c.dispersion.num_samples}};
  j["learning_curve"] = {{"probe_steps", c.curve.probe_steps},
                         {"probe_size", c.curve.probe_size}};
  j["adversarial"] = {{"batch_size", c.adversarial.batch_size},
                      {"target_size", c.adversarial.target_size},
                      {"fine_tune_steps", c.adversarial.fine_tune_steps}};
  return j;
}

void require_positive_list(const std::vector<int>& values, const char* what) {
  if (values.empty()) throw ValidationError(std::string(what) + " must not be empty");
  for (int v : values) {
    if (v < 1) throw ValidationError(std::string(what) + " entries must be positive");
  }
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kTableAttackComparison:
      return "table_attack_comparison";
    case ExperimentKind::kRocVsDatasize:
      return "roc_vs_datasize";
    case ExperimentKind::kRocVsCoattackStrength:
      return "roc_vs_coattack_strength";
    case ExperimentKind::kStrengthVsDatasizeFrontier:
      return "strength_vs_datasize_frontier";
    case ExperimentKind::kGeneralizationGapSweep:
      return "generalization_gap_sweep";
    case ExperimentKind::kLearningCurve:
      return "learning_curve";
    case ExperimentKind::kDispersionProfile:
      return "dispersion_profile";
    case ExperimentKind::kAdversarialVsRandom:
      return "adversarial_vs_random";
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(std::string_view name) {
  for (auto kind :
       {ExperimentKind::kTableAttackComparison, ExperimentKind::kRocVsDatasize,
        ExperimentKind::kRocVsCoattackStrength,
        ExperimentKind::kStrengthVsDatasizeFrontier,
        ExperimentKind::kGeneralizationGapSweep, ExperimentKind::kLearningCurve,
        ExperimentKind::kDispersionProfile, ExperimentKind::kAdversarialVsRandom}) {
    if (to_string(kind) == name) return kind;
  }
  throw ValidationError("unknown experiment kind '" + std::string(name) + "'");
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kWgan:
      return "wgan";
    case ModelKind::kGanVanilla:
      return "gan";
    case ModelKind::kVae:
      return "vae";
  }
  return "unknown";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "wgan") return ModelKind::kWgan;
  if (name == "gan") return ModelKind::kGanVanilla;
  if (name == "vae") return ModelKind::kVae;
  throw ValidationError("unknown model kind '" + std::string(name) + "'");
}

std::string_view to_string(DataSource source) {
  switch (source) {
    case DataSource::kDigits:
      return "digits";
    case DataSource::kGaussianMixture:
      return "gaussian_mixture";
    case DataSource::kIdx:
      return "idx";
    case DataSource::kContributors:
      return "contributors";
  }
  return "unknown";
}

DataSource data_source_from_string(std::string_view name) {
  if (name == "digits") return DataSource::kDigits;
  if (name == "gaussian_mixture") return DataSource::kGaussianMixture;
  if (name == "idx") return DataSource::kIdx;
  if (name == "contributors") return DataSource::kContributors;
  throw ValidationError("unknown dataset source '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  if (latent_dim < 1) throw ValidationError("model.latent_dim must be positive");
  GanTrainConfig g = gan;
  g.latent_dim = latent_dim;
  g.validate();
  VaeTrainConfig v = vae;
  v.latent_dim = latent_dim;
  v.validate();
  attack.validate();

  const DatasetSpec& d = dataset;
  switch (d.source) {
    case DataSource::kDigits:
      if (d.pool_size < 2) throw ValidationError("dataset.pool_size must be >= 2");
      if (d.glyph_size < 6) throw ValidationError("dataset.glyph_size must be >= 6");
      break;
    case DataSource::kGaussianMixture:
      if (d.num_components < 1 || d.points_per_component < 1 || d.dimension < 1) {
        throw ValidationError("mixture counts must be positive");
      }
      if (!(d.spread >= 0.0)) throw ValidationError("dataset.spread must be >= 0");
      break;
    case DataSource::kIdx:
      if (d.idx_images.empty()) throw ValidationError("dataset.idx_images is required");
      break;
    case DataSource::kContributors:
      if (d.num_users < 2 || d.images_per_user < 1) {
        throw ValidationError("contributor counts must be positive");
      }
      if (!(d.contributing_fraction > 0.0 && d.contributing_fraction < 1.0)) {
        throw ValidationError(
            "dataset.contributing_fraction must leave both members and nonmembers");
      }
      if (d.glyph_size < 6) throw ValidationError("dataset.glyph_size must be >= 6");
      break;
  }

  const EvaluationSpec& e = evaluation;
  require_positive_list(e.train_sizes, "evaluation.train_sizes");
  require_positive_list(e.strengths, "evaluation.strengths");
  if (e.methods.empty()) throw ValidationError("evaluation.methods must not be empty");
  if (e.models.empty()) throw ValidationError("evaluation.models must not be empty");
  if (e.eval_members < 1 || e.eval_nonmembers < 1) {
    throw ValidationError("evaluation set sizes must be positive");
  }
  if (e.nn_pool_size < 1) throw ValidationError("evaluation.nn_pool_size must be >= 1");
  if (!(e.effective_auc > 0.0 && e.effective_auc < 1.0)) {
    throw ValidationError("evaluation.effective_auc must lie in (0, 1)");
  }
  if (e.repeats < 1) throw ValidationError("evaluation.repeats must be >= 1");
  for (int k : dispersion.ks) {
    if (k < 2) throw ValidationError("dispersion.ks entries must be >= 2");
  }
  if (dispersion.ks.empty()) throw ValidationError("dispersion.ks must not be empty");
  if (dispersion.num_samples < 2) {
    throw ValidationError("dispersion.num_samples must be >= 2");
  }
  if (curve.probe_size < 1) throw ValidationError("learning_curve.probe_size must be >= 1");
  int previous = -1;
  for (int s : curve.probe_steps) {
    if (kind != ExperimentKind::kLearningCurve) break;
    if (s <= previous || s > gan.steps) {
      throw ValidationError(
          "learning_curve.probe_steps must increase within model.gan.steps");
    }
    previous = s;
  }
  if (adversarial.batch_size < 1 || adversarial.target_size < 1 ||
      adversarial.fine_tune_steps < 0) {
    throw ValidationError("adversarial settings out of range");
  }
}

ExperimentConfig parse_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig c;
  ObjectReader root(j, "config");
  if (!root.has("kind")) throw ValidationError("config.kind is required");
  root.get_enum("kind", c.kind, experiment_kind_from_string);
  root.get("name", c.name);
  root.get("master_seed", c.master_seed);
  std::string out;
  root.get("output_dir", out);
  c.output_dir = out;
  if (const Json* d = root.child("dataset")) read_dataset(*d, c.dataset);

  const Json* model = root.child("model");
  if (model == nullptr) throw ValidationError("config.model.latent_dim is required");
  {
    ObjectReader r(*model, "model");
    if (!r.has("latent_dim")) {
      throw ValidationError("config.model.latent_dim is required");
    }
    r.get("latent_dim", c.latent_dim);
    if (const Json* g = r.child("gan")) read_gan(*g, c.gan);
    if (const Json* v = r.child("vae")) read_vae(*v, c.vae);
    r.finish();
  }
  if (const Json* a = root.child("attack")) read_attack(*a, c.attack);
  if (const Json* e = root.child("evaluation")) read_evaluation(*e, c.evaluation);
  if (const Json* d = root.child("dispersion")) {
    ObjectReader r(*d, "dispersion");
    r.get("ks", c.dispersion.ks);
    r.get("num_samples", c.dispersion.num_samples);
    r.finish();
  }
  if (const Json* lc = root.child("learning_curve")) {
    ObjectReader r(*lc, "learning_curve");
    r.get("probe_steps", c.curve.probe_steps);
    r.get("probe_size", c.curve.probe_size);
    r.finish();
  }
  if (const Json* a = root.child("adversarial")) {
    ObjectReader r(*a, "adversarial");
    r.get("batch_size", c.adversarial.batch_size);
    r.get("target_size", c.adversarial.target_size);
    r.get("fine_tune_steps", c.adversarial.fine_tune_steps);
    r.finish();
  }
  root.finish();
  c.gan.latent_dim = c.latent_dim;
  c.vae.latent_dim = c.latent_dim;
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path));
}

std::string config_to_json(const ExperimentConfig& config) {
  return to_json(config, true).dump(2) + "\n";
}

std::string config_hash(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(to_json(config, false).dump())));
  return buf;
}

}  // namespace genleak
