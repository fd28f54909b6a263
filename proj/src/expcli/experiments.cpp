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

#include "genleak/expcli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "genleak/attacks/attack_csv.hpp"
#include "genleak/datalab/idx.hpp"
#include "genleak/datalab/split.hpp"
#include "genleak/datalab/synthetic.hpp"
#include "genleak/metrics/adversarial_sampling.hpp"
#include "genleak/metrics/dispersion.hpp"
#include "genleak/metrics/evaluation.hpp"
#include "genleak/metrics/generalization.hpp"
#include "genleak/metrics/roc.hpp"
#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"
#include "json.hpp"

namespace genleak {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_ids(const std::vector<InstanceId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<InstanceId> split_ids(const std::string& text) {
  std::vector<InstanceId> ids;
  std::istringstream in(text);
  InstanceId id = 0;
  while (in >> id) ids.push_back(id);
  return ids;
}

std::string model_stem(int rep, ModelKind kind, const std::string& label) {
  return "r" + std::to_string(rep) + "_" + std::string(to_string(kind)) + "_" + label;
}

std::string size_label(int size) { return "n" + std::to_string(size); }

void write_model(StageContext& ctx, const std::string& stem, const TrainedModel& m) {
  const std::string base = "models/" + stem;
  if (m.vae) {
    ctx.write(base + ".encoder.glnk",
              encode_checkpoint({ModelRole::kEncoder, m.vae->encoder_spec,
                                 m.vae->encoder_params}));
    ctx.write(base + ".decoder.glnk",
              encode_checkpoint({ModelRole::kDecoder, m.vae->decoder_spec,
                                 m.vae->decoder_params}));
  } else {
    ctx.write(base + ".generator.glnk",
              encode_checkpoint({ModelRole::kGenerator, m.generator.spec,
                                 m.generator.params}));
    ctx.write(base + ".critic.glnk",
              encode_checkpoint({ModelRole::kCritic, m.critic->spec, m.critic->params}));
  }
  ctx.write("logs/" + stem + ".train.csv", m.log.to_csv());
}

GeneratorModel load_surface(const Pipeline& p, ModelKind kind, const std::string& stem) {
  const std::string base = "models/" + stem;
  if (kind == ModelKind::kVae) return decoder_as_generator(load_vae(p.path(base)));
  return load_generator(p.path(base + ".generator.glnk"), p.config().gan.latent_prior);
}

// Trains (or reuses) a model and returns what an attacker gets to query.
GeneratorModel trained(Pipeline& p, ModelKind kind, const std::string& stem,
                       const Matrix& data) {
  p.stage("train/" + stem, [&](StageContext& ctx) {
    const TrainedModel m = train_model(kind, data, p.config(), ctx.seed());
    write_model(ctx, stem, m);
    ctx.meta("train_size", std::to_string(data.cols()));
  });
  return load_surface(p, kind, stem);
}

double evaluate_stage(Pipeline& p, const std::string& name, const std::string& stem,
                      const GeneratorModel& generator, const Dataset& data,
                      const std::vector<CoAttackGroup>& groups, AttackMethod method,
                      const std::map<std::string, std::string>& meta) {
  const StageRecord record = p.stage(name, [&](StageContext& ctx) {
    const ExperimentConfig& cfg = p.config();
    AttackConfig attack = cfg.attack;
    attack.seed = ctx.seed();
    EvalOptions options;
    options.method = method;
    options.threads = p.threads();
    options.nn_pool_size = cfg.evaluation.nn_pool_size;
    options.nn_pool_seed = derive_seed(ctx.seed(), 1);
    const MembershipEvaluation eval =
        evaluate_membership(generator, data, groups, attack, options);
    ctx.write("attacks/" + stem + ".csv", attack_rows_to_csv(eval.rows));
    ctx.write("roc/" + stem + ".csv", roc_to_csv(eval.roc));
    ctx.write("roc/" + stem + ".json", roc_summary_json(eval.roc));
    for (const auto& [k, v] : meta) ctx.meta(k, v);
    ctx.meta("auc", fmt(eval.roc.auc));
  });
  return std::stod(record.meta.at("auc"));
}

std::vector<CoAttackGroup> groups_with_ids(const std::vector<InstanceId>& members,
                                           const std::vector<InstanceId>& nonmembers) {
  std::vector<CoAttackGroup> groups;
  for (InstanceId id : members) {
    groups.push_back({std::to_string(id), {id}, Membership::kMember});
  }
  for (InstanceId id : nonmembers) {
    groups.push_back({std::to_string(id), {id}, Membership::kNonmember});
  }
  return groups;
}

MembershipSplit split_for(const Pipeline& p, const Dataset& data, int rep, int size) {
  const EvaluationSpec& e = p.config().evaluation;
  return make_split(data, size, std::min(size, e.eval_members), e.eval_nonmembers,
                    p.seed_for("split/r" + std::to_string(rep) + "/" + size_label(size)));
}

std::vector<InstanceId> ids_with_label(const MembershipSplit& split, Membership label) {
  std::vector<InstanceId> out;
  for (InstanceId id : split.eval_ids) {
    if (split.labels.reveal(id) == label) out.push_back(id);
  }
  return out;
}

void write_summary(Pipeline& p, const std::string& csv, const Json& json) {
  p.stage("summary", [&](StageContext& ctx) {
    ctx.write("summary.csv", csv);
    ctx.write("summary.json", json.dump(2) + "\n");
  });
}

Json base_summary(const ExperimentConfig& cfg) {
  Json j;
  j["kind"] = std::string(to_string(cfg.kind));
  j["name"] = cfg.name;
  j["master_seed"] = cfg.master_seed;
  return j;
}

ModelKind gan_model(const ExperimentConfig& cfg) {
  const ModelKind kind = cfg.evaluation.models.front();
  if (kind == ModelKind::kVae) {
    throw ValidationError(std::string(to_string(cfg.kind)) +
                          " needs a GAN model (wgan or gan) first in evaluation.models");
  }
  return kind;
}

// ---------------------------------------------------------------------------
// AUC grids: attack comparison, data size, co-attack strength and frontier.

struct GridCell {
  int rep = 0;
  ModelKind model = ModelKind::kWgan;
  int train_size = 0;
  AttackMethod method = AttackMethod::kAttackerNet;
  int strength = 1;
  std::optional<double> auc;  // empty when the method cannot attack groups
};

void run_grid(Pipeline& p) {
  const ExperimentConfig& cfg = p.config();
  const EvaluationSpec& e = cfg.evaluation;
  const bool contributors = cfg.dataset.source == DataSource::kContributors;
  std::vector<GridCell> cells;

  for (int rep = 0; rep < e.repeats; ++rep) {
    const std::string r = "r" + std::to_string(rep);
    const std::uint64_t data_seed = p.seed_for("data/" + r);
    std::optional<ContributorSimulation> sim;
    Dataset data;
    std::vector<int> sizes = e.train_sizes;
    if (contributors) {
      sim = build_contributors(cfg.dataset, data_seed);
      data = sim->data;
      sizes = {static_cast<int>(sim->train_ids.size())};
    } else {
      data = build_dataset(cfg.dataset, data_seed);
    }

    for (ModelKind model : e.models) {
      for (int size : sizes) {
        std::optional<MembershipSplit> split;
        std::vector<InstanceId> train_ids;
        if (contributors) {
          train_ids = sim->train_ids;
        } else {
          split = split_for(p, data, rep, size);
          train_ids = split->train_ids;
        }
        const std::string stem = model_stem(rep, model, size_label(size));
        const GeneratorModel generator = trained(p, model, stem, data.gather(train_ids));

        for (int n : e.strengths) {
          std::vector<CoAttackGroup> groups;
          if (contributors) {
            groups = contributor_groups(*sim, n);
          } else if (n == 1) {
            groups = single_groups(*split);
          } else {
            groups = group_eval(*split, n,
                                p.seed_for("groups/" + stem + "/s" + std::to_string(n)))
                         .groups;
          }
          for (AttackMethod method : e.methods) {
            GridCell cell{rep, model, size, method, n, std::nullopt};
            if (method != AttackMethod::kDirectProjection || n == 1) {
              const std::string eval_stem = stem + "_" + std::string(to_string(method)) +
                                            "_s" + std::to_string(n);
              cell.auc = evaluate_stage(
                  p, "eval/" + eval_stem, eval_stem, generator, data, groups, method,
                  {{"rep", std::to_string(rep)},
                   {"model", std::string(to_string(model))},
                   {"method", std::string(to_string(method))},
                   {"strength", std::to_string(n)},
                   {"train_size", std::to_string(size)}});
            }
            cells.push_back(cell);
          }
        }
      }
    }
  }

  std::string csv = "rep,model,train_size,method,n,auc\n";
  Json summary = base_summary(cfg);
  Json rows = Json::array();
  for (const GridCell& c : cells) {
    csv += std::to_string(c.rep) + ',' + std::string(to_string(c.model)) + ',' +
           std::to_string(c.train_size) + ',' + std::string(to_string(c.method)) + ',' +
           std::to_string(c.strength) + ',' + (c.auc ? fmt(*c.auc) : "n/a") + '\n';
    Json row = {{"rep", c.rep},
                {"model", std::string(to_string(c.model))},
                {"train_size", c.train_size},
                {"method", std::string(to_string(c.method))},
                {"n", c.strength}};
    row["auc"] = c.auc ? Json(*c.auc) : Json(nullptr);
    rows.push_back(row);
  }
  summary["cells"] = rows;

  if (cfg.kind == ExperimentKind::kStrengthVsDatasizeFrontier) {
    // Smallest training size at which the attack stops being effective.
    std::string frontier = "rep,model,method,n,min_safe_size\n";
    Json fj = Json::array();
    std::vector<int> sorted = e.train_sizes;
    std::sort(sorted.begin(), sorted.end());
    for (int rep = 0; rep < e.repeats; ++rep) {
      for (ModelKind model : e.models) {
        for (AttackMethod method : e.methods) {
          for (int n : e.strengths) {
            std::optional<int> safe;
            bool applicable = false;
            for (int size : sorted) {
              for (const GridCell& c : cells) {
                if (c.rep == rep && c.model == model && c.method == method &&
                    c.strength == n && c.train_size == size && c.auc) {
                  applicable = true;
                  if (!safe && *c.auc < e.effective_auc) safe = size;
                }
              }
            }
            if (!applicable) continue;
            frontier += std::to_string(rep) + ',' + std::string(to_string(model)) + ',' +
                        std::string(to_string(method)) + ',' + std::to_string(n) + ',' +
                        (safe ? std::to_string(*safe) : "none") + '\n';
            Json row = {{"rep", rep},
                        {"model", std::string(to_string(model))},
                        {"method", std::string(to_string(method))},
                        {"n", n}};
            row["min_safe_size"] = safe ? Json(*safe) : Json(nullptr);
            fj.push_back(row);
          }
        }
      }
    }
    summary["effective_auc"] = e.effective_auc;
    summary["frontier"] = fj;
    p.stage("frontier", [&](StageContext& ctx) { ctx.write("frontier.csv", frontier); });
  }
  write_summary(p, csv, summary);
}

// ---------------------------------------------------------------------------

void run_gap_sweep(Pipeline& p) {
  const ExperimentConfig& cfg = p.config();
  const EvaluationSpec& e = cfg.evaluation;
  std::string csv = "rep,model,train_size,mean_train_loss,mean_test_loss,gap,auc\n";
  Json summary = base_summary(cfg);
  Json correlations = Json::array();
  for (int rep = 0; rep < e.repeats; ++rep) {
    const Dataset data = build_dataset(cfg.dataset, p.seed_for("data/r" + std::to_string(rep)));
    for (ModelKind model : e.models) {
      std::vector<double> gaps;
      std::vector<double> aucs;
      for (int size : e.train_sizes) {
        const MembershipSplit split = split_for(p, data, rep, size);
        const std::string stem = model_stem(rep, model, size_label(size));
        const GeneratorModel generator =
            trained(p, model, stem, data.gather(split.train_ids));
        const std::vector<InstanceId> members = ids_with_label(split, Membership::kMember);
        const std::vector<InstanceId> nonmembers =
            ids_with_label(split, Membership::kNonmember);
        const StageRecord rec = p.stage("gap/" + stem, [&](StageContext& ctx) {
          AttackConfig attack = cfg.attack;
          attack.seed = ctx.seed();
          const GapReport gap =
              generalization_gap(generator, data.gather(members), data.gather(nonmembers),
                                 attack, p.threads());
          std::vector<double> losses = gap.train_losses;
          losses.insert(losses.end(), gap.test_losses.begin(), gap.test_losses.end());
          std::vector<Membership> labels(gap.train_losses.size(), Membership::kMember);
          labels.resize(losses.size(), Membership::kNonmember);
          const RocReport roc = roc_and_auc(losses, labels);
          std::string rows = "instance_id,role,loss\n";
          for (std::size_t i = 0; i < members.size(); ++i) {
            rows += std::to_string(members[i]) + ",train," + fmt(gap.train_losses[i]) + '\n';
          }
          for (std::size_t i = 0; i < nonmembers.size(); ++i) {
            rows += std::to_string(nonmembers[i]) + ",test," + fmt(gap.test_losses[i]) + '\n';
          }
          ctx.write("gap/" + stem + ".csv", rows);
          ctx.meta("mean_train_loss", fmt(gap.mean_train_loss));
          ctx.meta("mean_test_loss", fmt(gap.mean_test_loss));
          ctx.meta("gap", fmt(gap.gap));
          ctx.meta("auc", fmt(roc.auc));
          ctx.meta("rep", std::to_string(rep));
          ctx.meta("model", std::string(to_string(model)));
          ctx.meta("method", std::string(to_string(AttackMethod::kAttackerNet)));
          ctx.meta("strength", "1");
          ctx.meta("train_size", std::to_string(size));
        });
        gaps.push_back(std::stod(rec.meta.at("gap")));
        aucs.push_back(std::stod(rec.meta.at("auc")));
        csv += std::to_string(rep) + ',' + std::string(to_string(model)) + ',' +
               std::to_string(size) + ',' + rec.meta.at("mean_train_loss") + ',' +
               rec.meta.at("mean_test_loss") + ',' + rec.meta.at("gap") + ',' +
               rec.meta.at("auc") + '\n';
      }
      Json c = {{"rep", rep}, {"model", std::string(to_string(model))}};
      c["spearman_gap_auc"] =
          gaps.size() >= 2 ? Json(spearman_correlation(gaps, aucs)) : Json(nullptr);
      correlations.push_back(c);
    }
  }
  summary["correlations"] = correlations;
  write_summary(p, csv, summary);
}

void run_learning_curve(Pipeline& p) {
  const ExperimentConfig& cfg = p.config();
  const EvaluationSpec& e = cfg.evaluation;
  const ModelKind model = gan_model(cfg);
  const int size = e.train_sizes.front();
  std::string csv = "rep,step,train_loss,test_loss,train_std,test_std\n";
  for (int rep = 0; rep < e.repeats; ++rep) {
    const Dataset data = build_dataset(cfg.dataset, p.seed_for("data/r" + std::to_string(rep)));
    const MembershipSplit split = split_for(p, data, rep, size);
    const std::string stem = model_stem(rep, model, size_label(size));
    const StageRecord rec = p.stage("curve/" + stem, [&](StageContext& ctx) {
      GanTrainConfig gan = cfg.gan;
      gan.latent_dim = cfg.latent_dim;
      gan.mode = model == ModelKind::kWgan ? CriticMode::kWasserstein : CriticMode::kVanilla;
      gan.seed = derive_seed(ctx.seed(), 0);
      AttackConfig attack = cfg.attack;
      attack.seed = derive_seed(ctx.seed(), 1);
      LearningCurveOptions options;
      options.probe_steps = cfg.curve.probe_steps;
      options.probe_size = cfg.curve.probe_size;
      options.probe_seed = derive_seed(ctx.seed(), 2);
      options.threads = p.threads();
      const auto curve = learning_curve(data.gather(split.train_ids),
                                        data.gather(split.holdout_ids), gan, attack,
                                        options);
      const std::string body = learning_curve_to_csv(curve);
      ctx.write("curves/" + stem + ".csv", body);
      // Keep the per-rep rows for the summary without rereading files.
      std::string rows;
      for (const CurvePoint& c : curve) {
        rows += std::to_string(c.step) + ',' + fmt(c.train_loss) + ',' +
                fmt(c.test_loss) + ',' + fmt(c.train_std) + ',' + fmt(c.test_std) + ';';
      }
      ctx.meta("rows", rows);
    });
    std::istringstream rows(rec.meta.at("rows"));
    std::string row;
    while (std::getline(rows, row, ';')) {
      if (!row.empty()) csv += std::to_string(rep) + ',' + row + '\n';
    }
  }
  write_summary(p, csv, base_summary(cfg));
}

std::string dispersion_stage(Pipeline& p, const std::string& stem,
                             const GeneratorModel& generator) {
  const StageRecord rec = p.stage("dispersion/" + stem, [&](StageContext& ctx) {
    const Matrix samples =
        sample_generator(generator, p.config().dispersion.num_samples, ctx.seed());
    const auto profile = dispersion_profile(samples, p.config().dispersion.ks);
    ctx.write("dispersion/" + stem + ".csv", dispersion_to_csv(profile));
    std::string values;
    for (const DispersionResult& r : profile) {
      values += std::to_string(r.k) + ':' + fmt(r.value) + ' ';
    }
    ctx.meta("values", values);
  });
  return rec.meta.at("values");
}

// "k:value k:value ..." -> rows "prefix,k,value\n".
std::string dispersion_rows(const std::string& prefix, const std::string& values) {
  std::string out;
  std::istringstream in(values);
  std::string item;
  while (in >> item) {
    const auto colon = item.find(':');
    out += prefix + ',' + item.substr(0, colon) + ',' + item.substr(colon + 1) + '\n';
  }
  return out;
}

void run_dispersion(Pipeline& p) {
  const ExperimentConfig& cfg = p.config();
  const EvaluationSpec& e = cfg.evaluation;
  std::string csv = "rep,model,train_size,k,value\n";
  for (int rep = 0; rep < e.repeats; ++rep) {
    const Dataset data = build_dataset(cfg.dataset, p.seed_for("data/r" + std::to_string(rep)));
    for (ModelKind model : e.models) {
      for (int size : e.train_sizes) {
        const MembershipSplit split = split_for(p, data, rep, size);
        const std::string stem = model_stem(rep, model, size_label(size));
        const GeneratorModel generator =
            trained(p, model, stem, data.gather(split.train_ids));
        csv += dispersion_rows(std::to_string(rep) + ',' + std::string(to_string(model)) +
                                   ',' + std::to_string(size),
                               dispersion_stage(p, stem, generator));
      }
    }
  }
  write_summary(p, csv, base_summary(cfg));
}

void run_adversarial(Pipeline& p) {
  const ExperimentConfig& cfg = p.config();
  const EvaluationSpec& e = cfg.evaluation;
  const ModelKind model = gan_model(cfg);
  std::string csv = "rep,subset,auc,k,dispersion\n";
  Json summary = base_summary(cfg);
  Json overlaps = Json::array();
  for (int rep = 0; rep < e.repeats; ++rep) {
    const std::string r = "r" + std::to_string(rep);
    const Dataset data = build_dataset(cfg.dataset, p.seed_for("data/" + r));
    if (static_cast<int>(data.size()) <= e.eval_nonmembers) {
      throw ValidationError("dataset too small to reserve evaluation nonmembers");
    }
    // Candidates for both selections; the remaining instances are never
    // trained on and serve as evaluation nonmembers.
    const MembershipSplit split =
        make_split(data, static_cast<int>(data.size()) - e.eval_nonmembers, 0,
                   e.eval_nonmembers, p.seed_for("split/" + r + "/adversarial"));
    const std::vector<InstanceId>& candidates = split.train_ids;
    const std::vector<InstanceId> nonmembers = ids_with_label(split, Membership::kNonmember);

    const StageRecord selection = p.stage("select/" + r, [&](StageContext& ctx) {
      GanTrainConfig gan = cfg.gan;
      gan.latent_dim = cfg.latent_dim;
      gan.mode = model == ModelKind::kWgan ? CriticMode::kWasserstein : CriticMode::kVanilla;
      gan.seed = derive_seed(ctx.seed(), 0);
      AttackConfig attack = cfg.attack;
      attack.seed = derive_seed(ctx.seed(), 1);
      AdversarialSamplingConfig adv;
      adv.batch_size = cfg.adversarial.batch_size;
      adv.target_size = cfg.adversarial.target_size;
      adv.fine_tune_steps = cfg.adversarial.fine_tune_steps;
      adv.seed = derive_seed(ctx.seed(), 2);
      adv.threads = p.threads();
      const AdversarialSample s =
          adversarial_sampling(data.gather(candidates), gan, attack, adv);
      std::vector<InstanceId> chosen;
      std::vector<InstanceId> control;
      std::string rows = "subset,instance_id\n";
      for (std::size_t i : s.selected) {
        chosen.push_back(candidates[i]);
        rows += "adversarial," + std::to_string(candidates[i]) + '\n';
      }
      for (std::size_t i : s.control) {
        control.push_back(candidates[i]);
        rows += "random," + std::to_string(candidates[i]) + '\n';
      }
      ctx.write("selection/" + r + ".csv", rows);
      ctx.meta("adversarial", join_ids(chosen));
      ctx.meta("random", join_ids(control));
      ctx.meta("overlap", std::to_string(s.overlap));
    });
    overlaps.push_back({{"rep", rep}, {"overlap", std::stoi(selection.meta.at("overlap"))}});

    for (const std::string subset : {"adversarial", "random"}) {
      const std::vector<InstanceId> members = split_ids(selection.meta.at(subset));
      const std::string stem = model_stem(rep, model, subset);
      const GeneratorModel generator = trained(p, model, stem, data.gather(members));
      const double auc = evaluate_stage(
          p, "eval/" + stem, stem + "_attacker_net_s1", generator, data,
          groups_with_ids(members, nonmembers), AttackMethod::kAttackerNet,
          {{"rep", std::to_string(rep)},
           {"model", std::string(to_string(model))},
           {"method", std::string(to_string(AttackMethod::kAttackerNet))},
           {"strength", "1"},
           {"train_size", subset}});
      csv += dispersion_rows(std::to_string(rep) + ',' + subset + ',' + fmt(auc),
                             dispersion_stage(p, stem, generator));
    }
  }
  summary["overlaps"] = overlaps;
  write_summary(p, csv, summary);
}

}  // namespace

Dataset build_dataset(const DatasetSpec& spec, std::uint64_t seed) {
  switch (spec.source) {
    case DataSource::kDigits:
      return synth_digits(spec.pool_size, spec.glyph_size, seed);
    case DataSource::kGaussianMixture:
      return synth_gaussian_mixture(spec.num_components, spec.points_per_component,
                                    spec.dimension, spec.spread, seed, true)
          .data;
    case DataSource::kIdx:
      return load_idx(spec.idx_images,
                      spec.idx_labels.empty()
                          ? std::nullopt
                          : std::optional<std::filesystem::path>(spec.idx_labels));
    case DataSource::kContributors:
      return build_contributors(spec, seed).data;
  }
  throw ValidationError("unknown dataset source");
}

ContributorSimulation build_contributors(const DatasetSpec& spec, std::uint64_t seed) {
  ContributorSpec cs;
  cs.glyph_size = spec.glyph_size;
  cs.image_noise = spec.image_noise;
  cs.train_images_per_user = spec.train_images_per_user;
  return simulate_contributors(cs, spec.num_users, spec.images_per_user,
                               spec.contributing_fraction, seed);
}

TrainedModel train_model(ModelKind kind, const Matrix& data,
                         const ExperimentConfig& config, std::uint64_t seed) {
  TrainedModel out;
  out.kind = kind;
  if (kind == ModelKind::kVae) {
    VaeTrainConfig vae = config.vae;
    vae.latent_dim = config.latent_dim;
    vae.seed = seed;
    VaeResult r = train_vae(data, vae);
    out.generator = decoder_as_generator(r.model);
    out.vae = std::move(r.model);
    out.log = std::move(r.log);
    return out;
  }
  GanTrainConfig gan = config.gan;
  gan.latent_dim = config.latent_dim;
  gan.seed = seed;
  GanResult r = kind == ModelKind::kWgan ? train_wgan(data, gan)
                                         : train_gan_vanilla(data, gan);
  out.generator = std::move(r.generator);
  out.critic = std::move(r.critic);
  out.log = std::move(r.log);
  return out;
}

void run_stages(Pipeline& pipeline) {
  switch (pipeline.config().kind) {
    case ExperimentKind::kTableAttackComparison:
    case ExperimentKind::kRocVsDatasize:
    case ExperimentKind::kRocVsCoattackStrength:
    case ExperimentKind::kStrengthVsDatasizeFrontier:
      run_grid(pipeline);
      return;
    case ExperimentKind::kGeneralizationGapSweep:
      run_gap_sweep(pipeline);
      return;
    case ExperimentKind::kLearningCurve:
      run_learning_curve(pipeline);
      return;
    case ExperimentKind::kDispersionProfile:
      run_dispersion(pipeline);
      return;
    case ExperimentKind::kAdversarialVsRandom:
      run_adversarial(pipeline);
      return;
  }
}

}  // namespace genleak
