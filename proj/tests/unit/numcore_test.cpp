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

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "doctest.h"
#include "genleak/numcore/byteio.hpp"
#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/finite_diff.hpp"
#include "genleak/numcore/network.hpp"
#include "genleak/numcore/optim.hpp"
#include "genleak/numcore/parallel.hpp"
#include "genleak/numcore/seeds.hpp"
#include "oracles.hpp"

namespace genleak {
namespace {

oracle::Act to_oracle(Activation a) {
  switch (a) {
    case Activation::kRelu:
      return oracle::Act::kRelu;
    case Activation::kSigmoid:
      return oracle::Act::kSigmoid;
    case Activation::kTanh:
      return oracle::Act::kTanh;
    case Activation::kIdentity:
      return oracle::Act::kIdentity;
  }
  return oracle::Act::kIdentity;
}

NetworkSpec random_spec(Rng& rng, int max_hidden_layers, int max_width) {
  std::uniform_int_distribution<int> depth(0, max_hidden_layers);
  std::uniform_int_distribution<int> width(1, max_width);
  std::uniform_int_distribution<int> act(0, 3);
  NetworkSpec spec;
  const int hidden = depth(rng);
  for (int l = 0; l < hidden + 2; ++l) spec.layer_sizes.push_back(width(rng));
  spec.hidden_activation = static_cast<Activation>(act(rng));
  spec.output_activation = static_cast<Activation>(act(rng));
  return spec;
}

// Zero initial biases put units fed only by dead relus exactly on the kink,
// where one-sided and central differences disagree, so oracle checks use
// fully random parameters.
ParamVector random_params(const NetworkSpec& spec, Rng& rng) {
  std::normal_distribution<double> n(0.0, 0.5);
  ParamVector p(spec.param_count());
  for (double& v : p.values) v = n(rng);
  return p;
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
  return m;
}

}  // namespace

TEST_CASE("init_params lays out weights then zero biases") {
  const NetworkSpec spec{{2, 3}};
  const ParamVector p = init_params(spec, 7);
  REQUIRE(p.size() == 9);
  for (std::size_t i = 6; i < 9; ++i) CHECK(p.values[i] == 0.0);
  const double limit = std::sqrt(6.0 / 5.0);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(p.values[i]) <= limit);
  CHECK(init_params(spec, 7) == p);
  CHECK_FALSE(init_params(spec, 8) == p);
}

TEST_CASE("parameter count of the default attacker shape") {
  const NetworkSpec spec{{4, 100, 100, 8}};
  // 4*100 + 100 + 100*100 + 100 + 100*8 + 8
  CHECK(spec.param_count() == 11408);
  CHECK(init_params(spec, 1).size() == 11408);
}

TEST_CASE("parameter count matches the per-layer sum for random shapes") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const NetworkSpec spec = random_spec(rng, 4, 30);
    std::size_t expected = 0;
    for (std::size_t l = 0; l + 1 < spec.layer_sizes.size(); ++l) {
      expected += spec.layer_sizes[l] * spec.layer_sizes[l + 1] + spec.layer_sizes[l + 1];
    }
    CHECK(init_params(spec, trial).size() == expected);
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(NetworkSpec{{3}}.validate(), ValidationError);
  CHECK_THROWS_AS((NetworkSpec{{3, 0}}.validate()), ValidationError);
  NetworkSpec negative{{2, 2}};
  negative.l2_reg_coeff = -1.0;
  CHECK_THROWS_AS(negative.validate(), ValidationError);
}

TEST_CASE("zero weights with identity output return the bias") {
  NetworkSpec spec{{3, 2}};
  spec.output_activation = Activation::kIdentity;
  ParamVector p(spec.param_count(), 0.0);
  p.values[6] = 0.5;
  p.values[7] = -2.0;
  const Vector out = predict(spec, p, Vector(Vector::Constant(3, 9.0)));
  CHECK(out(0) == 0.5);
  CHECK(out(1) == -2.0);
}

TEST_CASE("relu of a negative pre-activation is zero") {
  NetworkSpec spec{{2, 3}};
  spec.output_activation = Activation::kRelu;
  ParamVector p(spec.param_count(), 0.0);
  for (std::size_t i = 6; i < 9; ++i) p.values[i] = -1.0;
  CHECK(predict(spec, p, Vector(Vector::Ones(2))).isZero());
}

TEST_CASE("forward agrees with plain loop arithmetic") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    NetworkSpec spec = random_spec(rng, 2, 12);
    while (spec.layer_sizes.size() != 4) spec = random_spec(rng, 2, 12);
    const ParamVector p = init_params(spec, trial);
    const Matrix x = random_matrix(spec.input_size(), 5, rng);
    const Matrix y = predict(spec, p, x);
    const Tape tape = forward(spec, p, x);
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      std::vector<double> col(x.col(j).data(), x.col(j).data() + x.rows());
      const std::vector<double> expected =
          oracle::dense_forward(spec.layer_sizes, p.data(), to_oracle(spec.hidden_activation),
                                to_oracle(spec.output_activation), col);
      for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(y(i, j) - expected[i]) <= 1e-12);
        CHECK(tape.output()(i, j) == y(i, j));
      }
    }
  }
}

TEST_CASE("forward rejects a wrong input size") {
  const NetworkSpec spec{{3, 2}};
  const ParamVector p = init_params(spec, 0);
  CHECK_THROWS_AS(forward(spec, p, Vector(Vector::Zero(4))), DimensionError);
  CHECK_THROWS_AS(predict(spec, ParamVector(3, 0.0), Vector(Vector::Zero(3))), DimensionError);
}

TEST_CASE("linear unit: derivative with respect to the weight is the input") {
  NetworkSpec spec{{1, 1}};
  ParamVector p(std::vector<double>{0.3, 0.1});
  const Tape tape = forward(spec, p, Vector(Vector::Constant(1, 2.5)));
  const Gradients g = backward(spec, p, tape, Matrix::Ones(1, 1));
  CHECK(g.params[0] == doctest::Approx(2.5));
  CHECK(g.params[1] == doctest::Approx(1.0));
  CHECK(g.input(0, 0) == doctest::Approx(0.3));
}

TEST_CASE("zero output gradient gives zero gradients") {
  Rng rng(5);
  const NetworkSpec spec = random_spec(rng, 3, 8);
  const ParamVector p = init_params(spec, 2);
  const Matrix x = random_matrix(spec.input_size(), 3, rng);
  const Tape tape = forward(spec, p, x);
  const Gradients g = backward(spec, p, tape, Matrix::Zero(spec.output_size(), 3));
  for (double v : g.params) CHECK(v == 0.0);
  CHECK(g.input.isZero());
}

TEST_CASE("backward matches central differences on random networks") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const NetworkSpec spec = random_spec(rng, 3, 8);
    const ParamVector p = random_params(spec, rng);
    const Matrix x = random_matrix(spec.input_size(), 3, rng);
    const Matrix r = random_matrix(spec.output_size(), 3, rng);
    const Gradients g = backward(spec, p, forward(spec, p, x), r);

    auto loss = [&](const std::vector<double>& values) {
      return (predict(spec, ParamVector(values), x).array() * r.array()).sum();
    };
    const std::vector<double> fd = oracle::central_difference(
        loss, std::vector<double>(p.values.begin(), p.values.end()), 1e-5);
    for (std::size_t i = 0; i < fd.size(); ++i) {
      const double scale = std::max({std::abs(fd[i]), std::abs(g.params[i]), 1e-3});
      CHECK(std::abs(fd[i] - g.params[i]) / scale <= 1e-4);
    }
  }
}

TEST_CASE("input gradient matches central differences") {
  NetworkSpec spec{{4, 6, 3}};
  spec.hidden_activation = Activation::kTanh;
  spec.output_activation = Activation::kSigmoid;
  const ParamVector p = init_params(spec, 9);
  Rng rng(9);
  const Matrix x = random_matrix(4, 1, rng);
  const Matrix r = random_matrix(3, 1, rng);
  const Gradients g = backward(spec, p, forward(spec, p, x), r, false);
  CHECK(g.params.empty());
  auto loss = [&](const std::vector<double>& in) {
    const Vector xi = Eigen::Map<const Vector>(in.data(), 4);
    return predict(spec, p, xi).dot(r.col(0));
  };
  const std::vector<double> fd =
      oracle::central_difference(loss, std::vector<double>(x.data(), x.data() + 4), 1e-5);
  for (int i = 0; i < 4; ++i) CHECK(g.input(i, 0) == doctest::Approx(fd[i]).epsilon(1e-6));
}

TEST_CASE("stale tapes are rejected") {
  const NetworkSpec spec{{2, 3, 1}};
  ParamVector p = init_params(spec, 1);
  const Tape tape = forward(spec, p, Vector(Vector::Ones(2)));
  p.values[0] += 1.0;
  CHECK_THROWS_AS(backward(spec, p, tape, Matrix::Ones(1, 1)), StaleTapeError);
  const NetworkSpec other{{2, 4, 1}};
  CHECK_THROWS_AS(backward(other, init_params(other, 1), tape, Matrix::Ones(1, 1)),
                  StaleTapeError);
  CHECK_THROWS_AS(backward(spec, p, Tape{}, Matrix::Ones(1, 1)), StaleTapeError);
}

TEST_CASE("bounded parameters and finite inputs never produce NaN") {
  Rng rng(33);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int trial = 0; trial < 20; ++trial) {
    const NetworkSpec spec = random_spec(rng, 3, 8);
    ParamVector p(spec.param_count());
    for (double& v : p.values) v = u(rng);
    Matrix x = random_matrix(spec.input_size(), 2, rng) * 100.0;
    const Tape tape = forward(spec, p, x);
    CHECK(tape.output().allFinite());
    const Gradients g = backward(spec, p, tape, Matrix::Ones(spec.output_size(), 2));
    CHECK(g.input.allFinite());
  }
}

TEST_CASE("l2 penalty adds twice the coefficient times the parameters") {
  NetworkSpec spec{{1, 1}};
  spec.l2_reg_coeff = 0.5;
  const ParamVector p(std::vector<double>{2.0, -1.0});
  std::vector<double> grad{1.0, 1.0};
  CHECK(add_l2_penalty(spec, p, grad) == doctest::Approx(2.5));
  CHECK(grad[0] == doctest::Approx(3.0));
  CHECK(grad[1] == doctest::Approx(0.0));
  spec.l2_reg_coeff = 0.0;
  CHECK(add_l2_penalty(spec, p, grad) == 0.0);
}

TEST_CASE("Adam leaves parameters alone under a zero gradient") {
  std::vector<double> p{1.0, -2.0, 3.0};
  const std::vector<double> g(3, 0.0);
  AdamState s(3, 1e-3);
  adam_step(p, g, s);
  CHECK(p == std::vector<double>{1.0, -2.0, 3.0});
  CHECK(s.step_count == 1);
}

TEST_CASE("first Adam step moves each coordinate by the learning rate") {
  std::vector<double> p{0.0, 0.0, 0.0};
  const std::vector<double> g{0.5, -3.0, 1e-2};
  AdamState s(3, 1e-3);
  adam_step(p, g, s);
  // Bias-corrected moments are g and g^2, so the step is lr * g / (|g| + eps).
  for (std::size_t i = 0; i < 3; ++i) {
    const double expected = -1e-3 * g[i] / (std::abs(g[i]) + 1e-8);
    CHECK(p[i] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("Adam is deterministic and rejects non-finite gradients") {
  auto run = [] {
    std::vector<double> p{1.0, 2.0};
    AdamState s(2, 1e-2);
    for (int t = 0; t < 50; ++t) {
      const std::vector<double> g{2.0 * p[0], std::sin(p[1])};
      adam_step(p, g, s);
    }
    return p;
  };
  CHECK(run() == run());
  std::vector<double> p{1.0};
  AdamState s(1, 1e-3);
  const std::vector<double> bad{std::nan("")};
  CHECK_THROWS_AS(adam_step(p, bad, s), DivergenceError);
  CHECK(p[0] == 1.0);
  CHECK(s.step_count == 0);
  AdamState wrong(1, 1e-3);
  wrong.beta1 = 1.0;
  CHECK_THROWS_AS(wrong.validate(), ValidationError);
}

TEST_CASE("clip_weights clamps elementwise and is idempotent") {
  std::vector<double> p{5.0, -0.002, 0.01, -7.0, 0.0};
  const std::vector<double> original = p;
  clip_weights(p, 0.01);
  for (std::size_t i = 0; i < p.size(); ++i) {
    double expected = original[i];
    if (expected > 0.01) expected = 0.01;
    if (expected < -0.01) expected = -0.01;
    CHECK(p[i] == expected);
  }
  std::vector<double> again = p;
  clip_weights(again, 0.01);
  CHECK(again == p);
  CHECK_THROWS_AS(clip_weights(p, 0.0), ValidationError);
}

TEST_CASE("finite differences on simple losses") {
  const std::vector<double> p{1.0, 2.0};
  const double h = 1e-3;
  auto quad = [](std::span<const double> v) { return v[0] * v[0] + v[1] * v[1]; };
  const DoubleBuffer g = finite_diff_grad(quad, p, h);
  CHECK(g[0] == doctest::Approx(2.0 + h).epsilon(1e-9));
  CHECK(g[1] == doctest::Approx(4.0 + h).epsilon(1e-9));

  auto constant = [](std::span<const double>) { return 3.0; };
  for (double v : finite_diff_grad(constant, p, h)) CHECK(v == 0.0);

  auto linear = [](std::span<const double> v) { return 0.5 * v[0] - 4.0 * v[1]; };
  for (double step : {1e-1, 1e-3}) {
    const DoubleBuffer lg = finite_diff_grad(linear, p, step);
    CHECK(lg[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(lg[1] == doctest::Approx(-4.0).epsilon(1e-9));
  }
  const DoubleBuffer c = finite_diff_grad(quad, p, 1e-5, DiffScheme::kCentral);
  CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(finite_diff_grad(quad, p, 0.0), ValidationError);
}

TEST_CASE("l2_distance") {
  CHECK(l2_distance(Vector::Ones(3), Vector::Ones(3)) == 0.0);
  Vector a(2);
  a << 0.0, 0.0;
  Vector b(2);
  b << 3.0, 4.0;
  CHECK(l2_distance(a, b) == 5.0);
  Rng rng(4);
  const Matrix m = random_matrix(17, 2, rng);
  double ss = 0.0;
  for (int i = 0; i < 17; ++i) ss += (m(i, 0) - m(i, 1)) * (m(i, 0) - m(i, 1));
  CHECK(std::abs(l2_distance(Vector(m.col(0)), Vector(m.col(1))) - std::sqrt(ss)) <= 1e-12);
  CHECK_THROWS_AS(l2_distance(Vector::Ones(2), Vector::Ones(3)), DimensionError);
}

TEST_CASE("checkpoint round trip and corruption") {
  Checkpoint cp;
  cp.role = ModelRole::kCritic;
  cp.spec = NetworkSpec{{3, 5, 1}, Activation::kTanh, Activation::kSigmoid, 1e-4};
  cp.params = init_params(cp.spec, 12);
  const std::string bytes = encode_checkpoint(cp);
  CHECK(bytes.substr(0, 4) == "GLNK");
  const Checkpoint back = decode_checkpoint(bytes);
  CHECK(back.role == cp.role);
  CHECK(back.spec == cp.spec);
  CHECK(back.params == cp.params);

  std::string flipped = bytes;
  flipped[40] ^= 0x01;
  CHECK_THROWS_AS(decode_checkpoint(flipped), IntegrityError);
  CHECK_THROWS_AS(decode_checkpoint("NOPE" + bytes.substr(4)), FormatError);
  CHECK_THROWS_AS(decode_checkpoint(bytes.substr(0, 10)), FormatError);
}

TEST_CASE("byte io honors the requested byte order") {
  ByteWriter big(Endian::kBig);
  big.put_u32(0x01020304);
  CHECK(big.bytes() == std::string("\x01\x02\x03\x04", 4));
  ByteWriter little(Endian::kLittle);
  little.put_f64(-1.5);
  ByteReader r(little.bytes(), Endian::kLittle);
  CHECK(r.get_f64() == -1.5);
  CHECK_THROWS_AS(r.get_u8(), FormatError);
}

TEST_CASE("seed derivation is stable and separates streams") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  CHECK(stream_of("train") != stream_of("eval"));
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("parallel_for writes every slot and propagates errors") {
  for (int threads : {1, 4}) {
    std::vector<int> out(100, 0);
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
    CHECK_THROWS_AS(parallel_for(10, threads,
                                 [](std::size_t i) {
                                   if (i == 3) throw DivergenceError("boom");
                                 }),
                    DivergenceError);
  }
}

}  // namespace genleak
