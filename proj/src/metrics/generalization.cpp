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

#include "genleak/metrics/generalization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/parallel.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {
namespace {

std::vector<double> attack_columns(const GeneratorModel& generator,
                                   const Matrix& sample,
                                   const AttackConfig& config, int threads) {
  std::vector<double> losses(static_cast<std::size_t>(sample.cols()));
  parallel_for(losses.size(), threads, [&](std::size_t i) {
    AttackConfig cfg = config;
    cfg.seed = derive_seed(config.seed, i);
    losses[i] =
        attack_single(generator, sample.col(static_cast<Eigen::Index>(i)), cfg).loss;
  });
  return losses;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

Matrix pick_columns(const Matrix& data, int count, Rng& rng) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(data.cols()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  // Chosen columns keep their data order.
  std::sort(order.begin(), order.begin() + count);
  Matrix out(data.rows(), count);
  for (int j = 0; j < count; ++j) out.col(j) = data.col(order[j]);
  return out;
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) r[order[t]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

GapReport generalization_gap(const GeneratorModel& generator,
                             const Matrix& train_sample,
                             const Matrix& test_sample,
                             const AttackConfig& config, int threads) {
  if (train_sample.cols() == 0 || test_sample.cols() == 0) {
    throw ValidationError("generalization_gap: samples must be nonempty");
  }
  if (train_sample.rows() != test_sample.rows()) {
    throw DimensionError("generalization_gap: samples differ in dimension");
  }
  GapReport report;
  report.train_losses = attack_columns(generator, train_sample, config, threads);
  report.test_losses = attack_columns(generator, test_sample, config, threads);
  report.mean_train_loss = mean(report.train_losses);
  report.mean_test_loss = mean(report.test_losses);
  report.gap = report.mean_test_loss - report.mean_train_loss;
  report.train_std = sample_std(report.train_losses);
  report.test_std = sample_std(report.test_losses);
  return report;
}

std::vector<CurvePoint> learning_curve(const Matrix& train, const Matrix& test,
                                       const GanTrainConfig& train_config,
                                       const AttackConfig& attack_config,
                                       const LearningCurveOptions& options) {
  if (train.cols() == 0 || test.cols() == 0) {
    throw ValidationError("learning_curve: samples must be nonempty");
  }
  if (options.probe_size < 1) throw ValidationError("probe_size must be positive");
  int previous = -1;
  for (int s : options.probe_steps) {
    if (s <= previous) throw ValidationError("probe steps must be increasing");
    if (s < 0 || s > train_config.steps) {
      throw ValidationError("probe step outside the training budget");
    }
    previous = s;
  }

  Rng rng(options.probe_seed);
  const Matrix train_probe = pick_columns(
      train, std::min<int>(options.probe_size, static_cast<int>(train.cols())), rng);
  const Matrix test_probe = pick_columns(
      test, std::min<int>(options.probe_size, static_cast<int>(test.cols())), rng);

  GanTrainer trainer(train_config, static_cast<int>(train.rows()));
  std::vector<CurvePoint> curve;
  for (int s : options.probe_steps) {
    trainer.train(train, s - trainer.step());
    const GapReport gap = generalization_gap(trainer.generator(), train_probe,
                                             test_probe, attack_config,
                                             options.threads);
    curve.push_back({s, gap.mean_train_loss, gap.mean_test_loss, gap.train_std,
                     gap.test_std});
  }
  return curve;
}

std::string learning_curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "step,train_loss,test_loss,train_std,test_std\n";
  for (const CurvePoint& p : curve) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", p.step,
                  p.train_loss, p.test_loss, p.train_std, p.test_std);
    out += buf;
  }
  return out;
}

std::vector<double> windowed_means(const std::vector<double>& values, int window) {
  if (window < 1) throw ValidationError("window must be positive");
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); i += static_cast<std::size_t>(window)) {
    const std::size_t end = std::min(values.size(), i + static_cast<std::size_t>(window));
    double sum = 0.0;
    for (std::size_t j = i; j < end; ++j) sum += values[j];
    out.push_back(sum / static_cast<double>(end - i));
  }
  return out;
}

double spearman_correlation(const std::vector<double>& a,
                            const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw ValidationError("spearman: need two equal-length series of length >= 2");
  }
  const std::vector<double> ra = ranks(a);
  const std::vector<double> rb = ranks(b);
  const double ma = mean(ra);
  const double mb = mean(rb);
  double num = 0.0;
  double da = 0.0;
  double db = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    num += (ra[i] - ma) * (rb[i] - mb);
    da += (ra[i] - ma) * (ra[i] - ma);
    db += (rb[i] - mb) * (rb[i] - mb);
  }
  if (da == 0.0 || db == 0.0) return 0.0;
  return num / std::sqrt(da * db);
}

}  // namespace genleak
