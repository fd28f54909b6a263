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

#include "genleak/numcore/network.hpp"

#include <cmath>
#include <random>
#include <string>

#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {
namespace {

using ConstMatrixMap = Eigen::Map<const Matrix>;
using MatrixMap = Eigen::Map<Matrix>;
using ConstVectorMap = Eigen::Map<const Vector>;
using VectorMap = Eigen::Map<Vector>;

void apply_activation(Activation activation, Matrix& z) {
  switch (activation) {
    case Activation::kRelu:
      z = z.cwiseMax(0.0);
      break;
    case Activation::kSigmoid:
      z = z.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
      break;
    case Activation::kTanh:
      z = z.array().tanh().matrix();
      break;
    case Activation::kIdentity:
      break;
  }
}

// Multiplies `grad` in place by the activation derivative, expressed through
// the activation output `a`.
void scale_by_derivative(Activation activation, const Matrix& a, Matrix& grad) {
  switch (activation) {
    case Activation::kRelu:
      grad = (a.array() > 0.0).select(grad, 0.0);
      break;
    case Activation::kSigmoid:
      grad.array() *= a.array() * (1.0 - a.array());
      break;
    case Activation::kTanh:
      grad.array() *= 1.0 - a.array().square();
      break;
    case Activation::kIdentity:
      break;
  }
}

std::uint64_t fingerprint(const ParamVector& params) {
  constexpr std::size_t kSamples = 64;
  const std::size_t n = params.size();
  const std::size_t stride = n <= kSamples ? 1 : n / kSamples;
  std::uint64_t h = fnv1a({}, 0xcbf29ce484222325ULL ^ n);
  for (std::size_t i = 0; i < n; i += stride) {
    double v = params.values[i];
    h = fnv1a(std::string_view(reinterpret_cast<const char*>(&v), sizeof v), h);
  }
  return h;
}

void check_input(const NetworkSpec& spec, const ParamVector& params,
                 Eigen::Index rows) {
  if (params.size() != spec.param_count()) {
    throw DimensionError("parameter vector has " +
                         std::to_string(params.size()) + " entries, network needs " +
                         std::to_string(spec.param_count()));
  }
  if (rows != spec.input_size()) {
    throw DimensionError("input has " + std::to_string(rows) +
                         " rows, network expects " +
                         std::to_string(spec.input_size()));
  }
}

}  // namespace

std::string_view to_string(Activation activation) {
  switch (activation) {
    case Activation::kRelu:
      return "relu";
    case Activation::kSigmoid:
      return "sigmoid";
    case Activation::kTanh:
      return "tanh";
    case Activation::kIdentity:
      return "identity";
  }
  return "unknown";
}

Activation activation_from_string(std::string_view name) {
  if (name == "relu") return Activation::kRelu;
  if (name == "sigmoid") return Activation::kSigmoid;
  if (name == "tanh") return Activation::kTanh;
  if (name == "identity") return Activation::kIdentity;
  throw ValidationError("unknown activation '" + std::string(name) + "'");
}

void NetworkSpec::validate() const {
  if (layer_sizes.size() < 2) {
    throw ValidationError("network needs at least an input and an output size");
  }
  for (int n : layer_sizes) {
    if (n <= 0) throw ValidationError("layer sizes must be positive");
  }
  if (!(l2_reg_coeff >= 0.0) || !std::isfinite(l2_reg_coeff)) {
    throw ValidationError("l2_reg_coeff must be finite and nonnegative");
  }
}

std::size_t NetworkSpec::param_count() const {
  std::size_t count = 0;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const auto in = static_cast<std::size_t>(layer_sizes[l]);
    const auto out = static_cast<std::size_t>(layer_sizes[l + 1]);
    count += in * out + out;
  }
  return count;
}

bool ParamVector::all_finite() const {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::vector<LayerSlice> layer_slices(const NetworkSpec& spec) {
  std::vector<LayerSlice> slices;
  slices.reserve(spec.layer_sizes.size());
  std::size_t offset = 0;
  for (int l = 0; l < spec.num_layers(); ++l) {
    const int in = spec.layer_sizes[l];
    const int out = spec.layer_sizes[l + 1];
    LayerSlice s{offset, offset + static_cast<std::size_t>(in) * out, in, out};
    slices.push_back(s);
    offset = s.bias_offset + static_cast<std::size_t>(out);
  }
  return slices;
}

ParamVector init_params(const NetworkSpec& spec, std::uint64_t seed) {
  spec.validate();
  ParamVector params(spec.param_count(), 0.0);
  Rng rng(seed);
  for (const LayerSlice& s : layer_slices(spec)) {
    const double limit = std::sqrt(6.0 / (s.in + s.out));
    std::uniform_real_distribution<double> dist(-limit, limit);
    for (std::size_t i = s.weight_offset; i < s.bias_offset; ++i) {
      params.values[i] = dist(rng);
    }
  }
  return params;
}

Tape forward(const NetworkSpec& spec, const ParamVector& params,
             const Matrix& inputs) {
  const auto slices = layer_slices(spec);
  check_input(spec, params, inputs.rows());

  Tape tape;
  tape.layer_sizes_ = spec.layer_sizes;
  tape.param_count_ = params.size();
  tape.param_fingerprint_ = fingerprint(params);
  tape.activations_.reserve(slices.size() + 1);
  tape.activations_.push_back(inputs);
  for (std::size_t l = 0; l < slices.size(); ++l) {
    const LayerSlice& s = slices[l];
    ConstMatrixMap w(params.data() + s.weight_offset, s.out, s.in);
    ConstVectorMap b(params.data() + s.bias_offset, s.out);
    Matrix z = w * tape.activations_.back();
    z.colwise() += b;
    const bool last = l + 1 == slices.size();
    apply_activation(last ? spec.output_activation : spec.hidden_activation, z);
    tape.activations_.push_back(std::move(z));
  }
  return tape;
}

Tape forward(const NetworkSpec& spec, const ParamVector& params,
             const Vector& input) {
  return forward(spec, params, Matrix(input));
}

Matrix predict(const NetworkSpec& spec, const ParamVector& params,
               const Matrix& inputs) {
  const auto slices = layer_slices(spec);
  check_input(spec, params, inputs.rows());
  Matrix a = inputs;
  for (std::size_t l = 0; l < slices.size(); ++l) {
    const LayerSlice& s = slices[l];
    ConstMatrixMap w(params.data() + s.weight_offset, s.out, s.in);
    ConstVectorMap b(params.data() + s.bias_offset, s.out);
    Matrix z = w * a;
    z.colwise() += b;
    const bool last = l + 1 == slices.size();
    apply_activation(last ? spec.output_activation : spec.hidden_activation, z);
    a = std::move(z);
  }
  return a;
}

Vector predict(const NetworkSpec& spec, const ParamVector& params,
               const Vector& input) {
  return predict(spec, params, Matrix(input)).col(0);
}

Gradients backward(const NetworkSpec& spec, const ParamVector& params,
                   const Tape& tape, const Matrix& output_gradient,
                   bool want_param_gradient) {
  if (tape.empty() || tape.layer_sizes_ != spec.layer_sizes ||
      tape.param_count_ != params.size() ||
      tape.param_fingerprint_ != fingerprint(params)) {
    throw StaleTapeError("tape does not match the network and parameters");
  }
  const Matrix& out = tape.activations_.back();
  if (output_gradient.rows() != out.rows() ||
      output_gradient.cols() != out.cols()) {
    throw DimensionError("output gradient shape does not match network output");
  }

  const auto slices = layer_slices(spec);
  Gradients grads;
  if (want_param_gradient) grads.params.assign(params.size(), 0.0);

  Matrix delta = output_gradient;
  for (std::size_t l = slices.size(); l-- > 0;) {
    const LayerSlice& s = slices[l];
    const bool last = l + 1 == slices.size();
    scale_by_derivative(last ? spec.output_activation : spec.hidden_activation,
                        tape.activations_[l + 1], delta);
    const Matrix& a_in = tape.activations_[l];
    if (want_param_gradient) {
      MatrixMap dw(grads.params.data() + s.weight_offset, s.out, s.in);
      VectorMap db(grads.params.data() + s.bias_offset, s.out);
      dw.noalias() = delta * a_in.transpose();
      db = delta.rowwise().sum();
    }
    ConstMatrixMap w(params.data() + s.weight_offset, s.out, s.in);
    Matrix next = w.transpose() * delta;
    delta = std::move(next);
  }
  grads.input = std::move(delta);
  return grads;
}

double add_l2_penalty(const NetworkSpec& spec, const ParamVector& params,
                      std::span<double> grad) {
  const double c = spec.l2_reg_coeff;
  if (c == 0.0) return 0.0;
  if (grad.size() != params.size()) {
    throw DimensionError("gradient and parameters differ in length");
  }
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double p = params.values[i];
    sum_sq += p * p;
    grad[i] += 2.0 * c * p;
  }
  return c * sum_sq;
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionError("l2_distance: lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double l2_distance(const Vector& a, const Vector& b) {
  return l2_distance(std::span<const double>(a.data(), a.size()),
                     std::span<const double>(b.data(), b.size()));
}

}  // namespace genleak
