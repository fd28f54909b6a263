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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "genleak/attacks/attack_csv.hpp"
#include "genleak/attacks/attacks.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"
#include "oracles.hpp"

namespace genleak {
namespace {

// Single affine layer G(z) = W z + b with identity output.
GeneratorModel affine_generator(const Matrix& w, const Vector& b) {
  GeneratorModel g;
  g.spec.layer_sizes = {static_cast<int>(w.cols()), static_cast<int>(w.rows())};
  g.spec.output_activation = Activation::kIdentity;
  g.latent_dim = static_cast<int>(w.cols());
  g.params.values.assign(w.data(), w.data() + w.size());
  g.params.values.insert(g.params.values.end(), b.data(), b.data() + b.size());
  return g;
}

GeneratorModel identity_generator(int d) {
  return affine_generator(Matrix::Identity(d, d), Vector::Zero(d));
}

GeneratorModel constant_generator(int k, const Vector& c) {
  return affine_generator(Matrix::Zero(c.size(), k), c);
}

Matrix uniform_targets(int d, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix x(d, n);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = u(rng);
  return x;
}

AttackConfig small_attack(int iterations, int restarts) {
  AttackConfig cfg;
  cfg.attacker_hidden = {16};
  cfg.iterations = iterations;
  cfg.restarts = restarts;
  cfg.seed = 11;
  return cfg;
}

}  // namespace

TEST_CASE("identity generator is inverted by every attack at default budgets") {
  const int d = 4;
  const GeneratorModel g = identity_generator(d);
  const AttackConfig cfg;
  const Matrix targets = uniform_targets(d, 8, 1);

  const AttackResult single = attack_single(g, Vector(targets.col(0)), cfg);
  MESSAGE("single loss " << single.loss);
  CHECK(single.loss <= 1e-2);

  const AttackResult co = attack_co(g, targets, cfg);
  MESSAGE("co loss " << co.loss);
  CHECK(co.loss <= 1e-2);

  const AttackResult direct = attack_direct_projection(g, Vector(targets.col(1)), cfg);
  MESSAGE("direct projection loss " << direct.loss);
  CHECK(direct.loss <= 2e-3);
  CHECK((direct.reconstruction.col(0) - targets.col(1)).norm() == direct.loss);
}

TEST_CASE("a smaller attacker step gets below 1e-3 on the identity generator") {
  // Adam on the unsquared distance settles at a few tenths of the step size.
  const GeneratorModel g = identity_generator(4);
  AttackConfig cfg;
  cfg.learning_rate = 1e-4;
  const Matrix targets = uniform_targets(4, 3, 6);
  for (Eigen::Index j = 0; j < targets.cols(); ++j) {
    cfg.seed = static_cast<std::uint64_t>(j);
    CHECK(attack_single(g, Vector(targets.col(j)), cfg).loss <= 1e-3);
  }
}

TEST_CASE("attack result bookkeeping") {
  const GeneratorModel g = identity_generator(3);
  const Vector x = uniform_targets(3, 1, 2).col(0);
  const AttackResult one = attack_single(g, x, small_attack(50, 1));
  const AttackResult four = attack_single(g, x, small_attack(50, 4));
  REQUIRE(four.per_restart_losses.size() == 4);
  CHECK(four.per_restart_losses[0] == one.loss);
  CHECK(four.loss <= one.loss);
  CHECK(four.loss == *std::min_element(four.per_restart_losses.begin(),
                                       four.per_restart_losses.end()));
  CHECK(four.loss >= 0.0);
  CHECK(four.reconstruction.rows() == 3);
  CHECK(four.reconstruction.cols() == 1);
  CHECK(four.loss == doctest::Approx((four.reconstruction.col(0) - x).norm()).epsilon(1e-12));
}

TEST_CASE("co-attack of one or of duplicates equals the single attack") {
  const GeneratorModel g = identity_generator(3);
  const Vector x = uniform_targets(3, 1, 3).col(0);
  const AttackConfig cfg = small_attack(60, 2);
  const AttackResult single = attack_single(g, x, cfg);
  CHECK(attack_co(g, Matrix(x), cfg).per_restart_losses == single.per_restart_losses);
  const Matrix triple = x.replicate(1, 3);
  const AttackResult dup = attack_co(g, triple, cfg);
  CHECK(dup.loss == doctest::Approx(single.loss).epsilon(1e-12));
}

TEST_CASE("attacks never modify the generator") {
  GeneratorModel g = identity_generator(4);
  g.params.values[1] = 0.3;
  const ParamVector before = g.params;
  const Matrix targets = uniform_targets(4, 3, 4);
  attack_co(g, targets, small_attack(20, 2));
  attack_direct_projection(g, Vector(targets.col(0)), small_attack(20, 2));
  AttackConfig bb = small_attack(3, 1);
  bb.gradient_mode = GradientMode::kBlackBox;
  attack_single(g, Vector(targets.col(0)), bb);
  CHECK(g.params == before);
}

TEST_CASE("constant generator pins the loss at the distance to the constant") {
  Vector c(3);
  c << 0.1, 0.7, 0.4;
  const GeneratorModel g = constant_generator(2, c);
  Vector x(3);
  x << 0.5, 0.5, 0.5;
  const double expected = (x - c).norm();
  CHECK(attack_single(g, x, small_attack(30, 2)).loss == doctest::Approx(expected));
  CHECK(attack_direct_projection(g, x, small_attack(30, 2)).loss ==
        doctest::Approx(expected));

  const NetworkSpec spec = small_attack(1, 1).attacker_spec(3, 2);
  const ParamVector gamma = init_params(spec, 5);
  const LossAndGradient lg =
      blackbox_loss_and_grad(white_box_oracle(g), spec, gamma, Matrix(x), 1e-4);
  for (double v : lg.gradient) CHECK(v == 0.0);
}

TEST_CASE("direct projection onto a linear generator reaches the column space") {
  Matrix w(4, 2);
  w << 1.0, 0.0, 0.5, 1.0, 0.0, 2.0, -1.0, 0.3;
  const GeneratorModel g = affine_generator(w, Vector::Zero(4));
  Vector x(4);
  x << 0.9, 0.1, 0.4, 0.6;
  // Least squares through the 2x2 normal equations.
  const double a = w.col(0).dot(w.col(0));
  const double b = w.col(0).dot(w.col(1));
  const double d = w.col(1).dot(w.col(1));
  const double r0 = w.col(0).dot(x);
  const double r1 = w.col(1).dot(x);
  const double det = a * d - b * b;
  const Vector z_star = (Vector(2) << (d * r0 - b * r1) / det, (a * r1 - b * r0) / det).finished();
  const double expected = (w * z_star - x).norm();

  AttackConfig cfg;
  cfg.iterations = 3000;
  const AttackResult r = attack_direct_projection(g, x, cfg);
  MESSAGE("projection loss " << r.loss << " vs least squares " << expected);
  CHECK(r.loss >= expected - 1e-12);
  CHECK(r.loss <= expected + 1e-3);
}

TEST_CASE("nearest neighbor baseline") {
  Matrix pool(2, 2);
  pool << 0.0, 1.0, 0.0, 1.0;
  CHECK(attack_nearest_neighbor(pool, Vector(pool.col(1))) == 0.0);
  const Vector x = (Vector(2) << 0.9, 0.9).finished();
  CHECK(attack_nearest_neighbor(pool, x) == doctest::Approx(std::sqrt(0.02)));
  CHECK_THROWS_AS(attack_nearest_neighbor(Matrix(2, 0), x), ValidationError);

  const Matrix big = uniform_targets(5, 300, 9);
  const Matrix probes = uniform_targets(5, 20, 10);
  for (Eigen::Index p = 0; p < probes.cols(); ++p) {
    std::vector<double> target(probes.col(p).data(), probes.col(p).data() + 5);
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < big.cols(); ++j) {
      std::vector<double> row(big.col(j).data(), big.col(j).data() + 5);
      best = std::min(best, std::sqrt(oracle::sq_dist(row, target)));
    }
    CHECK(attack_nearest_neighbor(big, Vector(probes.col(p))) == doctest::Approx(best).epsilon(1e-14));
  }
}

TEST_CASE("black-box gradient agrees with back-propagation") {
  GeneratorModel g;
  g.spec.layer_sizes = {2, 6, 3};
  g.spec.hidden_activation = Activation::kTanh;
  g.spec.output_activation = Activation::kSigmoid;
  g.latent_dim = 2;
  g.params = init_params(g.spec, 7);
  AttackConfig cfg;
  cfg.attacker_hidden = {5};
  cfg.attacker_activation = Activation::kTanh;
  const NetworkSpec spec = cfg.attacker_spec(3, 2);
  REQUIRE(spec.param_count() <= 50);
  const ParamVector gamma = init_params(spec, 8);
  const Matrix xs = uniform_targets(3, 2, 12);

  int calls = 0;
  const GeneratorOracle counting = [&](const Matrix& z) {
    ++calls;
    return predict(g.spec, g.params, z);
  };
  const LossAndGradient bb = blackbox_loss_and_grad(counting, spec, gamma, xs, 1e-4);
  CHECK(calls == static_cast<int>(gamma.size()) + 1);
  const LossAndGradient wb = whitebox_loss_and_grad(g, spec, gamma, xs);
  CHECK(bb.loss == doctest::Approx(wb.loss).epsilon(1e-14));
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    diff += (bb.gradient[i] - wb.gradient[i]) * (bb.gradient[i] - wb.gradient[i]);
    norm += wb.gradient[i] * wb.gradient[i];
  }
  MESSAGE("relative error " << std::sqrt(diff / norm));
  CHECK(std::sqrt(diff / norm) <= 5e-2);
}

TEST_CASE("white-box gradient matches a central-difference oracle") {
  const GeneratorModel g = identity_generator(3);
  AttackConfig cfg;
  cfg.attacker_hidden = {4};
  cfg.attacker_activation = Activation::kSigmoid;
  const NetworkSpec spec = cfg.attacker_spec(3, 3);
  const ParamVector gamma = init_params(spec, 3);
  const Matrix xs = uniform_targets(3, 4, 13);
  const auto f = [&](const std::vector<double>& p) {
    double total = 0.0;
    for (Eigen::Index j = 0; j < xs.cols(); ++j) {
      const std::vector<double> x(xs.col(j).data(), xs.col(j).data() + 3);
      const std::vector<double> y = oracle::dense_forward(
          spec.layer_sizes, p.data(), oracle::Act::kSigmoid, oracle::Act::kIdentity, x);
      total += std::sqrt(oracle::sq_dist(x, y));
    }
    return total / static_cast<double>(xs.cols());
  };
  const std::vector<double> expected = oracle::central_difference(
      f, std::vector<double>(gamma.values.begin(), gamma.values.end()), 1e-6);
  const LossAndGradient wb = whitebox_loss_and_grad(g, spec, gamma, xs);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(wb.gradient[i] == doctest::Approx(expected[i]).epsilon(1e-5).scale(1e-3));
  }
}

TEST_CASE("attack errors") {
  const GeneratorModel g = identity_generator(3);
  CHECK_THROWS_AS(attack_single(g, Vector(Vector::Zero(4)), small_attack(5, 1)),
                  DimensionError);
  CHECK_THROWS_AS(attack_direct_projection(g, Matrix(Matrix::Zero(3, 2)), small_attack(5, 1)),
                  ValidationError);
  CHECK_THROWS_AS(attack_single(g, Vector(Vector::Zero(3)), small_attack(0, 1)),
                  ValidationError);
  CHECK_THROWS_AS(attack_single(g, Vector(Vector::Zero(3)), small_attack(5, 0)),
                  ValidationError);

  GeneratorModel broken = g;
  broken.params.values[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(attack_single(broken, Vector(Vector::Zero(3)), small_attack(5, 2)),
                  DivergenceError);
}

TEST_CASE("membership decision is a strict threshold") {
  CHECK(decide_membership(0.1, 0.2));
  CHECK_FALSE(decide_membership(0.2, 0.2));
  CHECK_FALSE(decide_membership(0.3, 0.2));
}

TEST_CASE("attack csv round trip") {
  std::vector<AttackRow> rows;
  rows.push_back({"17", 1, true, 0.1 + 0.2, 4, 1000, "attacker_net"});
  rows.push_back({"g3", 8, false, 1.0 / 3.0, 4, 1000, "attacker_net"});
  rows.push_back({"5", 1, std::nullopt, 2.5e-7, 1, 0, "nearest_neighbor"});
  const std::string csv = attack_rows_to_csv(rows);
  CHECK(csv.rfind(std::string(kAttackCsvHeader) + "\n", 0) == 0);
  CHECK(parse_attack_csv(csv) == rows);

  CHECK_THROWS_AS(parse_attack_csv("id,n\n"), FormatError);
  CHECK_THROWS_AS(parse_attack_csv(std::string(kAttackCsvHeader) + "\n1,1,true\n"),
                  FormatError);
  CHECK_THROWS_AS(
      parse_attack_csv(std::string(kAttackCsvHeader) + "\n1,1,true,abc,4,1000,x\n"),
      FormatError);
}

TEST_CASE("attack option names round trip") {
  for (AttackOptimizer o : {AttackOptimizer::kAdam, AttackOptimizer::kPlainGd}) {
    CHECK(attack_optimizer_from_string(to_string(o)) == o);
  }
  for (GradientMode m : {GradientMode::kWhiteBox, GradientMode::kBlackBox}) {
    CHECK(gradient_mode_from_string(to_string(m)) == m);
  }
  CHECK_THROWS_AS(attack_optimizer_from_string("sgd"), ValidationError);
}

}  // namespace genleak
