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

// Acceptance suite: one PASS/FAIL line per criterion. Oracle criteria
// compare library results with independent reference computations; trend
// criteria train small models on synthetic digits and check directions over
// several seeds. Tolerances and budgets are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genleak/attacks/attacks.hpp"
#include "genleak/datalab/split.hpp"
#include "genleak/datalab/synthetic.hpp"
#include "genleak/expcli/config.hpp"
#include "genleak/expcli/experiments.hpp"
#include "genleak/expcli/pipeline.hpp"
#include "genleak/metrics/adversarial_sampling.hpp"
#include "genleak/metrics/dispersion.hpp"
#include "genleak/metrics/evaluation.hpp"
#include "genleak/metrics/generalization.hpp"
#include "genleak/metrics/roc.hpp"
#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/network.hpp"
#include "genleak/numcore/seeds.hpp"
#include "oracles.hpp"

namespace genleak {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Pinned tolerances.

constexpr int kGradNetworks = 100;
constexpr double kGradStep = 1e-5;
constexpr double kGradRelTol = 1e-4;
// Denominator floor of the relative error, for components that are
// essentially zero.
constexpr double kGradRelFloor = 1e-6;

constexpr int kAucSets = 1000;
constexpr double kAucTol = 1e-12;

constexpr int kDispersionSets = 50;

constexpr double kIdentityLossTol = 1e-2;

constexpr int kSeeds = 5;
constexpr int kMajority = 3;

constexpr double kAuc8Min = 0.85;
constexpr double kAuc512Max = 0.70;
constexpr double kCoAttackMargin = 0.05;
constexpr int kCoAttackSeedsNeeded = 4;
constexpr int kCoAttackStrength = 8;
constexpr double kSpearmanMin = 0.8;
constexpr int kAdversarialSeedsNeeded = 3;

// ---------------------------------------------------------------------------
// Desk-scale regime shared by the trend criteria.

struct Regime {
  int pool_size = 2600;   // digits synthesized per seed
  int gan_steps = 4000;
  int vae_steps = 4000;
  int eval_members = 64;  // capped by the training size
  int eval_nonmembers = 64;
  // Large evaluation sets for the co-attack comparison.
  int co_eval = 512;
  int attack_iterations = 300;
  int attack_restarts = 1;
  int nn_pool_size = 3000;
  std::vector<int> curve_probes;
  int curve_size = 64;
  // The whole training set is probed; smaller probes leave the late
  // windows within sampling noise of each other.
  int curve_probe_size = 64;
  int curve_window = 6;
  int curve_warmup_step = 500;
  int dispersion_samples = 1000;
  std::vector<int> dispersion_ks{8, 16, 32};
  int adversarial_batch = 8;
  int adversarial_target = 32;
  int adversarial_fine_tune = 200;

  Regime() {
    for (int s = 0; s <= gan_steps; s += 250) curve_probes.push_back(s);
  }
};

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (double v : values) out += (out.empty() ? "" : " ") + fmt3(v);
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Models and splits shared between criteria, built on first use.

class Fixtures {
 public:
  explicit Fixtures(const Regime& regime) : regime_(regime) {
    config_.latent_dim = 16;
    config_.gan.steps = regime.gan_steps;
    config_.gan.checkpoint_every = 0;
    config_.vae.steps = regime.vae_steps;
    config_.vae.checkpoint_every = 0;
  }

  const Regime& regime() const { return regime_; }
  const ExperimentConfig& config() const { return config_; }

  std::uint64_t seed_of(int seed, const std::string& what) const {
    return derive_seed(static_cast<std::uint64_t>(seed), stream_of(what));
  }

  const Dataset& digits(int seed) {
    auto it = digits_.find(seed);
    if (it == digits_.end()) {
      it = digits_.emplace(seed, synth_digits(regime_.pool_size, 8, seed_of(seed, "data")))
               .first;
    }
    return it->second;
  }

  // Evaluation sets hold up to co_eval instances per class; criteria that
  // need fewer take prefixes of each class.
  const MembershipSplit& split(int seed, int size) {
    const auto key = std::make_pair(seed, size);
    auto it = splits_.find(key);
    if (it == splits_.end()) {
      it = splits_
               .emplace(key, make_split(digits(seed), size, std::min(size, regime_.co_eval),
                                        regime_.co_eval,
                                        seed_of(seed, "split/" + std::to_string(size))))
               .first;
    }
    return it->second;
  }

  const GeneratorModel& model(ModelKind kind, int seed, int size) {
    const auto key = std::make_tuple(kind, seed, size);
    auto it = models_.find(key);
    if (it == models_.end()) {
      const Matrix train = digits(seed).gather(split(seed, size).train_ids);
      const TrainedModel m = train_model(
          kind, train, config_,
          seed_of(seed, "train/" + std::string(to_string(kind)) + "/" + std::to_string(size)));
      it = models_.emplace(key, m.generator).first;
    }
    return it->second;
  }

  AttackConfig attack(int seed) const {
    AttackConfig a;
    a.iterations = regime_.attack_iterations;
    a.restarts = regime_.attack_restarts;
    a.seed = seed_of(seed, "attack");
    return a;
  }

  // First `members` members and `nonmembers` nonmembers of the split's
  // evaluation order, as single-instance groups.
  std::vector<CoAttackGroup> singles(int seed, int size, int members, int nonmembers) {
    const MembershipSplit& s = split(seed, size);
    std::vector<CoAttackGroup> out;
    int m = 0;
    int n = 0;
    for (InstanceId id : s.eval_ids) {
      const Membership label = s.labels.reveal(id);
      int& count = label == Membership::kMember ? m : n;
      const int limit = label == Membership::kMember ? members : nonmembers;
      if (count >= limit) continue;
      ++count;
      out.push_back({std::to_string(id), {id}, label});
    }
    return out;
  }

  std::vector<CoAttackGroup> standard_singles(int seed, int size) {
    return singles(seed, size, std::min(size, regime_.eval_members), regime_.eval_nonmembers);
  }

  double auc(const GeneratorModel& g, int seed, const std::vector<CoAttackGroup>& groups,
             AttackMethod method = AttackMethod::kAttackerNet) {
    EvalOptions options;
    options.method = method;
    options.nn_pool_size = regime_.nn_pool_size;
    options.nn_pool_seed = seed_of(seed, "nn_pool");
    return evaluate_membership(g, digits(seed), groups, attack(seed), options).roc.auc;
  }

 private:
  Regime regime_;
  ExperimentConfig config_;
  std::map<int, Dataset> digits_;
  std::map<std::pair<int, int>, MembershipSplit> splits_;
  std::map<std::tuple<ModelKind, int, int>, GeneratorModel> models_;
};

// ---------------------------------------------------------------------------
// 1. Reverse-mode gradients against central differences.

Outcome gradient_oracle() {
  Rng rng(20260101);
  std::uniform_int_distribution<int> depth(1, 3);
  std::uniform_int_distribution<int> width(1, 6);
  std::uniform_int_distribution<int> act(0, 3);
  std::uniform_int_distribution<int> batch(1, 3);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Activation acts[] = {Activation::kRelu, Activation::kSigmoid, Activation::kTanh,
                             Activation::kIdentity};
  const oracle::Act oacts[] = {oracle::Act::kRelu, oracle::Act::kSigmoid,
                               oracle::Act::kTanh, oracle::Act::kIdentity};
  double worst = 0.0;
  std::size_t checked = 0;
  for (int net = 0; net < kGradNetworks; ++net) {
    NetworkSpec spec;
    const int layers = depth(rng);
    for (int l = 0; l <= layers; ++l) spec.layer_sizes.push_back(width(rng));
    const int h = act(rng);
    const int o = act(rng);
    spec.hidden_activation = acts[h];
    spec.output_activation = acts[o];
    std::vector<double> p(spec.param_count());
    for (double& v : p) v = 0.5 * normal(rng);
    const int cols = batch(rng);
    Matrix x(spec.input_size(), cols);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = normal(rng);
    Matrix w(spec.output_size(), cols);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = normal(rng);

    // Loss: sum over the batch of <w_j, f(x_j)>.
    const auto loss = [&](const std::vector<double>& params) {
      double total = 0.0;
      for (int j = 0; j < cols; ++j) {
        const std::vector<double> xj(x.col(j).data(), x.col(j).data() + x.rows());
        const std::vector<double> y =
            oracle::dense_forward(spec.layer_sizes, params.data(), oacts[h], oacts[o], xj);
        for (std::size_t i = 0; i < y.size(); ++i) total += w(static_cast<Eigen::Index>(i), j) * y[i];
      }
      return total;
    };
    const std::vector<double> fd = oracle::central_difference(loss, p, kGradStep);
    const ParamVector params(p);
    const Tape tape = forward(spec, params, x);
    const Gradients g = backward(spec, params, tape, w);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double denom = std::max({std::abs(g.params[i]), std::abs(fd[i]), kGradRelFloor});
      worst = std::max(worst, std::abs(g.params[i] - fd[i]) / denom);
      ++checked;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d networks, %zu coordinates, max relative error %.2e",
                kGradNetworks, checked, worst);
  return {worst <= kGradRelTol, buf};
}

// 2. Trapezoidal AUC against the pairwise statistic.

Outcome auc_oracle() {
  Rng rng(777);
  std::uniform_int_distribution<int> size(2, 60);
  std::uniform_int_distribution<int> levels(1, 12);
  std::bernoulli_distribution coin(0.5);
  double worst = 0.0;
  for (int t = 0; t < kAucSets; ++t) {
    const int n = size(rng);
    std::uniform_int_distribution<int> level(0, levels(rng));
    std::vector<double> losses;
    std::vector<Membership> labels;
    std::vector<double> pos;
    std::vector<double> neg;
    for (int i = 0; i < n; ++i) {
      const double loss = 0.37 * level(rng);
      const bool member = i == 0 || (i != 1 && coin(rng));
      losses.push_back(loss);
      labels.push_back(member ? Membership::kMember : Membership::kNonmember);
      (member ? pos : neg).push_back(loss);
    }
    const RocReport r = roc_and_auc(losses, labels);
    worst = std::max(worst, std::abs(r.auc - oracle::mann_whitney(pos, neg)));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d tied sets, max |AUC - U/(PN)| %.1e", kAucSets, worst);
  return {worst <= kAucTol, buf};
}

// 3. Greedy dispersion against exhaustive search.

Outcome dispersion_oracle() {
  Rng rng(4242);
  std::uniform_int_distribution<int> npts(2, 12);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  double min_ratio = 1.0;
  for (int t = 0; t < kDispersionSets; ++t) {
    const int n = npts(rng);
    Matrix pts(dim(rng), n);
    for (Eigen::Index i = 0; i < pts.size(); ++i) pts.data()[i] = u(rng);
    std::vector<std::vector<double>> rows;
    for (int j = 0; j < n; ++j) rows.emplace_back(pts.col(j).data(), pts.col(j).data() + pts.rows());
    for (int k = 2; k <= std::min(n, 6); ++k) {
      const double brute = oracle::brute_force_dispersion(rows, k);
      const double exact = dispersion_exact(pts, k).value;
      const double greedy = dispersion_greedy(pts, k).value;
      if (std::abs(exact - brute) > 1e-12) ++violations;
      if (!(exact >= greedy && greedy >= 0.5 * exact)) ++violations;
      if (k == 2 && greedy != exact) ++violations;
      if (exact > 0.0) min_ratio = std::min(min_ratio, greedy / exact);
    }
  }
  return {violations == 0, std::to_string(kDispersionSets) + " sets, " +
                               std::to_string(violations) +
                               " violations, min greedy/exact " + fmt3(min_ratio)};
}

// 4. Identity generator at default attack budgets.

Outcome identity_fixture() {
  const int d = 8;
  GeneratorModel g;
  g.spec.layer_sizes = {d, d};
  g.spec.output_activation = Activation::kIdentity;
  g.latent_dim = d;
  const Matrix eye = Matrix::Identity(d, d);
  g.params.values.assign(eye.data(), eye.data() + eye.size());
  g.params.values.resize(g.params.values.size() + d, 0.0);

  Rng rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix targets(d, 8);
  for (Eigen::Index i = 0; i < targets.size(); ++i) targets.data()[i] = u(rng);
  const AttackConfig defaults;
  const double single = attack_single(g, Vector(targets.col(0)), defaults).loss;
  const double co = attack_co(g, targets, defaults).loss;
  const double direct = attack_direct_projection(g, Vector(targets.col(0)), defaults).loss;
  char buf[128];
  std::snprintf(buf, sizeof buf, "single %.1e, co(n=8) %.1e, direct projection %.1e", single,
                co, direct);
  return {single <= kIdentityLossTol && co <= kIdentityLossTol && direct <= kIdentityLossTol,
          buf};
}

// ---------------------------------------------------------------------------
// 5. Single-attack AUC falls as the training set grows.

Outcome overfitting_trend(Fixtures& fx) {
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    std::vector<double> aucs;
    for (int size : {8, 64, 512}) {
      aucs.push_back(fx.auc(fx.model(ModelKind::kWgan, seed, size), seed,
                            fx.standard_singles(seed, size)));
    }
    const bool ok = aucs[0] > aucs[1] && aucs[1] > aucs[2] && aucs[0] >= kAuc8Min &&
                    aucs[2] <= kAuc512Max;
    good += ok;
    detail += " [" + join(aucs) + "]";
  }
  return {good >= kMajority, std::to_string(good) + "/5 seeds; AUC(8,64,512):" + detail};
}

// 6. Co-attacks of strength 8 beat single attacks on the 512 model.

Outcome coattack_trend(Fixtures& fx) {
  int good = 0;
  std::string detail;
  const int size = 512;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const GeneratorModel& g = fx.model(ModelKind::kWgan, seed, size);
    const MembershipSplit& split = fx.split(seed, size);
    const double single = fx.auc(g, seed, fx.singles(seed, size, size, fx.regime().co_eval));
    const GroupedEval grouped =
        group_eval(split, kCoAttackStrength, fx.seed_of(seed, "groups"));
    const double co = fx.auc(g, seed, grouped.groups);
    good += co > single + kCoAttackMargin;
    detail += " [" + fmt3(single) + " -> " + fmt3(co) + "]";
  }
  return {good >= kCoAttackSeedsNeeded,
          std::to_string(good) + "/5 seeds; AUC(n=1) -> AUC(n=8):" + detail};
}

// 7. Attacker network versus the two baselines on the overfit fixture.

Outcome method_comparison(Fixtures& fx) {
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const GeneratorModel& g = fx.model(ModelKind::kWgan, seed, 8);
    const auto groups = fx.standard_singles(seed, 8);
    const double net = fx.auc(g, seed, groups);
    const double nn = fx.auc(g, seed, groups, AttackMethod::kNearestNeighbor);
    const double dp = fx.auc(g, seed, groups, AttackMethod::kDirectProjection);
    good += net >= nn && net >= dp;
    detail += " [" + fmt3(net) + " " + fmt3(nn) + " " + fmt3(dp) + "]";
  }
  return {good >= kMajority, std::to_string(good) + "/5 seeds; AUC(net, nn, dp):" + detail};
}

// 8. Generalization gap and attack AUC move together across sizes.

Outcome gap_correlation(Fixtures& fx) {
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    std::vector<double> gaps;
    std::vector<double> aucs;
    for (int size : {8, 32, 128, 512}) {
      const GeneratorModel& g = fx.model(ModelKind::kWgan, seed, size);
      const auto groups = fx.standard_singles(seed, size);
      std::vector<InstanceId> members;
      std::vector<InstanceId> nonmembers;
      for (const CoAttackGroup& grp : groups) {
        (grp.shared_label == Membership::kMember ? members : nonmembers)
            .push_back(grp.member_ids[0]);
      }
      const Dataset& data = fx.digits(seed);
      const GapReport gap =
          generalization_gap(g, data.gather(members), data.gather(nonmembers), fx.attack(seed));
      std::vector<double> losses = gap.train_losses;
      losses.insert(losses.end(), gap.test_losses.begin(), gap.test_losses.end());
      std::vector<Membership> labels(gap.train_losses.size(), Membership::kMember);
      labels.resize(losses.size(), Membership::kNonmember);
      gaps.push_back(gap.gap);
      aucs.push_back(roc_and_auc(losses, labels).auc);
    }
    const double rho = spearman_correlation(gaps, aucs);
    good += rho >= kSpearmanMin;
    detail += " [rho " + fmt3(rho) + "; gap " + join(gaps) + "; auc " + join(aucs) + "]";
  }
  return {good >= kMajority, std::to_string(good) + "/5 seeds;" + detail};
}

// 9. Learning curve: training loss falls, the test-train difference opens up.

Outcome learning_curve_shape(Fixtures& fx) {
  const Regime& r = fx.regime();
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const Dataset& data = fx.digits(seed);
    const MembershipSplit& split = fx.split(seed, r.curve_size);
    GanTrainConfig gan = fx.config().gan;
    gan.latent_dim = fx.config().latent_dim;
    gan.seed = fx.seed_of(seed, "curve/train");
    LearningCurveOptions options;
    options.probe_steps = r.curve_probes;
    options.probe_size = r.curve_probe_size;
    options.probe_seed = fx.seed_of(seed, "curve/probe");
    const auto curve = learning_curve(data.gather(split.train_ids),
                                      data.gather(split.holdout_ids), gan, fx.attack(seed),
                                      options);
    std::vector<double> train;
    for (const CurvePoint& p : curve) train.push_back(p.train_loss);
    const std::vector<double> windows = windowed_means(train, r.curve_window);
    bool decreasing = true;
    for (std::size_t i = 1; i < windows.size(); ++i) decreasing &= windows[i] < windows[i - 1];
    const CurvePoint* first = nullptr;
    for (const CurvePoint& p : curve) {
      if (p.step >= r.curve_warmup_step) {
        first = &p;
        break;
      }
    }
    const double gap_first = first->test_loss - first->train_loss;
    const double gap_last = curve.back().test_loss - curve.back().train_loss;
    const bool ok = decreasing && gap_last > gap_first;
    good += ok;
    detail += " [windows " + join(windows) + "; gap " + fmt3(gap_first) + " -> " +
              fmt3(gap_last) + "]";
  }
  return {good >= kMajority, std::to_string(good) + "/5 seeds;" + detail};
}

// 10. Larger training sets give more diverse generators.

std::vector<double> profile_values(const GeneratorModel& g, const Regime& r,
                                   std::uint64_t seed) {
  const Matrix samples = sample_generator(g, r.dispersion_samples, seed);
  std::vector<double> out;
  for (const DispersionResult& d : dispersion_profile(samples, r.dispersion_ks)) {
    out.push_back(d.value);
  }
  return out;
}

Outcome dispersion_trend(Fixtures& fx) {
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto small = profile_values(fx.model(ModelKind::kWgan, seed, 8), fx.regime(),
                                      fx.seed_of(seed, "samples/8"));
    const auto large = profile_values(fx.model(ModelKind::kWgan, seed, 512), fx.regime(),
                                      fx.seed_of(seed, "samples/512"));
    bool dominates = true;
    for (std::size_t i = 0; i < small.size(); ++i) dominates &= large[i] > small[i];
    good += dominates;
    detail += " [" + join(large) + " vs " + join(small) + "]";
  }
  return {good >= kMajority,
          std::to_string(good) + "/5 seeds; disp(k=8,16,32) 512 vs 8:" + detail};
}

// 11. Adversarially selected training sets: more diverse and more exposed.

Outcome adversarial_sampling_trend(Fixtures& fx) {
  const Regime& r = fx.regime();
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const Dataset& data = fx.digits(seed);
    // Nonmembers are held out of the candidate pool.
    const MembershipSplit split =
        make_split(data, static_cast<int>(data.size()) - r.eval_nonmembers, 0,
                   r.eval_nonmembers, fx.seed_of(seed, "adversarial/split"));
    const Matrix candidates = data.gather(split.train_ids);
    GanTrainConfig gan = fx.config().gan;
    gan.latent_dim = fx.config().latent_dim;
    gan.seed = fx.seed_of(seed, "adversarial/select");
    AdversarialSamplingConfig adv;
    adv.batch_size = r.adversarial_batch;
    adv.target_size = r.adversarial_target;
    adv.fine_tune_steps = r.adversarial_fine_tune;
    adv.seed = fx.seed_of(seed, "adversarial/order");
    const AdversarialSample s =
        adversarial_sampling(candidates, gan, fx.attack(seed), adv);

    std::vector<InstanceId> nonmembers;
    for (InstanceId id : split.eval_ids) nonmembers.push_back(id);
    double disp[2];
    double auc[2];
    const std::vector<std::size_t>* subsets[2] = {&s.selected, &s.control};
    for (int which = 0; which < 2; ++which) {
      std::vector<InstanceId> members;
      for (std::size_t i : *subsets[which]) members.push_back(split.train_ids[i]);
      const TrainedModel m =
          train_model(ModelKind::kWgan, data.gather(members), fx.config(),
                      fx.seed_of(seed, which == 0 ? "adversarial/x" : "adversarial/y"));
      const auto values = profile_values(m.generator, r, fx.seed_of(seed, "adversarial/samples"));
      disp[which] = 0.0;
      for (double v : values) disp[which] += v / static_cast<double>(values.size());
      std::vector<CoAttackGroup> groups;
      for (InstanceId id : members) groups.push_back({std::to_string(id), {id}, Membership::kMember});
      for (InstanceId id : nonmembers) {
        groups.push_back({std::to_string(id), {id}, Membership::kNonmember});
      }
      auc[which] = fx.auc(m.generator, seed, groups);
    }
    const bool ok = disp[0] > disp[1] && auc[0] > auc[1];
    good += ok;
    detail += " [disp " + fmt3(disp[0]) + " vs " + fmt3(disp[1]) + ", auc " + fmt3(auc[0]) +
              " vs " + fmt3(auc[1]) + "]";
  }
  return {good >= kAdversarialSeedsNeeded, std::to_string(good) + "/5 seeds; X' vs Y:" + detail};
}

// 12. VAE versus WGAN at matched training size.

Outcome vae_vs_gan(Fixtures& fx) {
  int good = 0;
  std::string detail;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto groups = fx.standard_singles(seed, 64);
    const double vae = fx.auc(fx.model(ModelKind::kVae, seed, 64), seed, groups);
    const double gan = fx.auc(fx.model(ModelKind::kWgan, seed, 64), seed, groups);
    good += vae >= gan;
    detail += " [" + fmt3(vae) + " vs " + fmt3(gan) + "]";
  }
  return {good >= kMajority, std::to_string(good) + "/5 seeds; AUC vae vs wgan:" + detail};
}

// 13. Byte-identical result files across reruns and thread counts.

std::map<std::string, std::string> result_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), dir).generic_string();
    if (rel == "manifest.json") continue;  // holds wall times
    out.emplace(rel, read_file(e.path()));
  }
  return out;
}

Outcome determinism(const fs::path& out) {
  int runs = 0;
  int mismatched = 0;
  std::size_t files = 0;
  for (const char* kind :
       {"table_attack_comparison", "roc_vs_datasize", "roc_vs_coattack_strength",
        "strength_vs_datasize_frontier", "generalization_gap_sweep", "learning_curve",
        "dispersion_profile", "adversarial_vs_random"}) {
    ExperimentConfig cfg = parse_config(std::string(R"({"kind": ")") + kind + R"(",
      "master_seed": 11,
      "dataset": {"source": "digits", "pool_size": 200},
      "model": {"latent_dim": 4,
                "gan": {"steps": 40, "batch_size": 16, "generator_hidden": [24, 24],
                        "critic_hidden": [24, 24], "checkpoint_every": 20},
                "vae": {"steps": 40, "batch_size": 16, "encoder_hidden": [24],
                        "decoder_hidden": [24], "checkpoint_every": 20}},
      "attack": {"iterations": 25, "restarts": 2, "attacker_hidden": [16, 16]},
      "evaluation": {"train_sizes": [8, 32], "strengths": [1, 4],
                     "methods": ["attacker_net", "nearest_neighbor", "direct_projection"],
                     "models": ["wgan"], "eval_members": 8, "eval_nonmembers": 16,
                     "nn_pool_size": 100},
      "dispersion": {"ks": [2, 8], "num_samples": 60},
      "learning_curve": {"probe_steps": [0, 20, 40], "probe_size": 8},
      "adversarial": {"batch_size": 4, "target_size": 6, "fine_tune_steps": 5}})");
    std::optional<std::map<std::string, std::string>> reference;
    for (int threads : {1, 4, 1}) {
      const fs::path dir = out / "determinism" / (std::string(kind) + "_" + std::to_string(runs));
      fs::remove_all(dir);
      run_experiment(cfg, dir, threads);
      ++runs;
      const auto result = result_files(dir);
      if (!reference) {
        reference = result;
        files += result.size();
      } else if (result != *reference) {
        ++mismatched;
      }
    }
  }
  return {mismatched == 0, std::to_string(runs) + " runs over 8 kinds (threads 1, 4, 1), " +
                               std::to_string(files) + " files per replay, " +
                               std::to_string(mismatched) + " mismatching replays"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 when no runtime bound applies
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace genleak

int main(int argc, char** argv) {
  using namespace genleak;
  CLI::App app{"Acceptance criteria"};
  std::string out = "acceptance_runs";
  std::string report;
  std::vector<int> only;
  bool strict = false;
  app.add_option("--out", out, "Scratch directory for pipeline runs");
  app.add_option("--report", report, "Also write the PASS/FAIL lines to this file");
  app.add_option("--only", only, "Run only these criteria");
  app.add_flag("--strict", strict, "Exit nonzero when any criterion fails");
  CLI11_PARSE(app, argc, argv);

  const Regime regime;
  Fixtures fx(regime);
  const std::vector<Criterion> criteria = {
      {1, "gradient-oracle", 10, gradient_oracle},
      {2, "auc-oracle", 5, auc_oracle},
      {3, "dispersion-oracle", 10, dispersion_oracle},
      {4, "identity-generator-attacks", 60, identity_fixture},
      {5, "overfitting-trend", 900, [&] { return overfitting_trend(fx); }},
      {6, "coattack-strength", 900, [&] { return coattack_trend(fx); }},
      {7, "method-comparison", 600, [&] { return method_comparison(fx); }},
      {8, "gap-auc-correlation", 1200, [&] { return gap_correlation(fx); }},
      {9, "learning-curve", 600, [&] { return learning_curve_shape(fx); }},
      {10, "dispersion-vs-size", 600, [&] { return dispersion_trend(fx); }},
      {11, "adversarial-sampling", 1800, [&] { return adversarial_sampling_trend(fx); }},
      {12, "vae-vs-wgan", 0, [&] { return vae_vs_gan(fx); }},
      {13, "determinism", 0, [&] { return determinism(out); }},
  };

  std::ofstream report_file;
  if (!report.empty()) report_file.open(report);
  int executed = 0;
  int failures = 0;
  int errors = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++executed;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
      ++errors;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0 || secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    char timing[64];
    if (c.budget_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.1f s of %.0f s", secs, c.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.1f s", secs);
    }
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d %s: ", pass ? "PASS" : "FAIL", c.id, c.name);
    const std::string line = head + o.detail + " (" + timing + ")\n";
    std::fputs(line.c_str(), stdout);
    std::fflush(stdout);
    if (report_file) report_file << line << std::flush;
  }
  std::printf("%d of %d criteria failed\n", failures, executed);
  // A criterion that throws is a defect; a trend that does not reproduce is
  // a result, reported above and fatal only under --strict.
  if (errors > 0) return 2;
  return strict && failures > 0 ? 1 : 0;
}
