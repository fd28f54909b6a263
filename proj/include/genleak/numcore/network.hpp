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

#ifndef GENLEAK_NUMCORE_NETWORK_HPP_
#define GENLEAK_NUMCORE_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace genleak {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Flat storage with a fixed base alignment. Eigen peels unaligned leading
// elements before vectorized reductions, so the summation order of mapped
// buffers would otherwise depend on where the allocator put them.
using DoubleBuffer = std::vector<double, Eigen::aligned_allocator<double>>;

// Networks consume and produce matrices with one instance per column.

enum class Activation { kRelu, kSigmoid, kTanh, kIdentity };

std::string_view to_string(Activation activation);
Activation activation_from_string(std::string_view name);

// Shape of a fully-connected feed-forward chain.
struct NetworkSpec {
  std::vector<int> layer_sizes;  // input size first
  Activation hidden_activation = Activation::kRelu;
  Activation output_activation = Activation::kIdentity;
  double l2_reg_coeff = 0.0;

  // Throws ValidationError when fewer than two layers, a non-positive width,
  // or a negative regularization coefficient is present.
  void validate() const;

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(layer_sizes.size()) - 1; }

  // Sum over layers of n_l * n_{l+1} + n_{l+1}.
  std::size_t param_count() const;

  bool operator==(const NetworkSpec&) const = default;
};

// Flat parameter storage. For each layer the weight block (out x in,
// column-major) is followed by the bias block, layer after layer.
struct ParamVector {
  DoubleBuffer values;

  ParamVector() = default;
  explicit ParamVector(DoubleBuffer v) : values(std::move(v)) {}
  explicit ParamVector(const std::vector<double>& v)
      : values(v.begin(), v.end()) {}
  explicit ParamVector(std::size_t n, double fill = 0.0) : values(n, fill) {}

  std::size_t size() const { return values.size(); }
  std::span<double> span() { return values; }
  std::span<const double> span() const { return values; }
  double* data() { return values.data(); }
  const double* data() const { return values.data(); }

  bool all_finite() const;

  bool operator==(const ParamVector&) const = default;
};

// Offsets of one layer's weights and biases inside a ParamVector.
struct LayerSlice {
  std::size_t weight_offset;
  std::size_t bias_offset;
  int in;
  int out;
};

std::vector<LayerSlice> layer_slices(const NetworkSpec& spec);

// Glorot-uniform weights, zero biases, deterministic in (spec, seed).
ParamVector init_params(const NetworkSpec& spec, std::uint64_t seed);

struct Gradients {
  DoubleBuffer params;  // empty when parameter gradients were skipped
  Matrix input;                // same shape as the forward input
};

// Activation record of one forward pass.
class Tape {
 public:
  const Matrix& output() const { return activations_.back(); }
  const Matrix& input() const { return activations_.front(); }
  Eigen::Index batch_size() const { return activations_.front().cols(); }
  bool empty() const { return activations_.empty(); }

 private:
  friend Tape forward(const NetworkSpec&, const ParamVector&, const Matrix&);
  friend Gradients backward(const NetworkSpec&, const ParamVector&,
                            const Tape&, const Matrix&, bool);

  std::vector<int> layer_sizes_;
  std::size_t param_count_ = 0;
  std::uint64_t param_fingerprint_ = 0;
  std::vector<Matrix> activations_;  // [0] is the input, back() the output
};

// Runs the network on every column of `inputs` and keeps the activations
// needed by backward(). Throws DimensionError on a row-count mismatch.
Tape forward(const NetworkSpec& spec, const ParamVector& params,
             const Matrix& inputs);
Tape forward(const NetworkSpec& spec, const ParamVector& params,
             const Vector& input);

// Same as forward() without retaining intermediate activations.
Matrix predict(const NetworkSpec& spec, const ParamVector& params,
               const Matrix& inputs);
Vector predict(const NetworkSpec& spec, const ParamVector& params,
               const Vector& input);

// Reverse pass for a scalar loss whose gradient with respect to the network
// output is `output_gradient`. The parameter gradient is summed over the
// batch. With `want_param_gradient` false only the input gradient is
// computed, which is what chaining an attacker through a frozen generator
// needs. Throws StaleTapeError when the tape came from another network or
// the parameters were modified after the forward pass.
Gradients backward(const NetworkSpec& spec, const ParamVector& params,
                   const Tape& tape, const Matrix& output_gradient,
                   bool want_param_gradient = true);

// Adds the gradient of l2_reg_coeff * ||params||^2 to `grad` and returns
// the penalty value. No-op returning 0 when the coefficient is zero.
double add_l2_penalty(const NetworkSpec& spec, const ParamVector& params,
                      std::span<double> grad);

double l2_distance(std::span<const double> a, std::span<const double> b);
double l2_distance(const Vector& a, const Vector& b);

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_NETWORK_HPP_
