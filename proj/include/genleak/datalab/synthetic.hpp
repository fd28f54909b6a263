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

#ifndef GENLEAK_DATALAB_SYNTHETIC_HPP_
#define GENLEAK_DATALAB_SYNTHETIC_HPP_

#include <cstdint>

#include "genleak/datalab/dataset.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {

struct MixtureSample {
  Dataset data;
  // Component centers after the same normalization as the data.
  Matrix centers;
  // Normalized value = (raw - offset) * scale, one map for every feature.
  double offset = 0.0;
  double scale = 1.0;
};

// Isotropic Gaussian components with centers uniform in [0,1]^d and standard
// deviation `spread`, mapped into [0,1]^d by a single global min-max affine
// map so pairwise geometry is preserved up to scale. Component index is
// stored as contributor id when `component_as_contributor` is set.
MixtureSample synth_gaussian_mixture(int num_components,
                                     int points_per_component, int dimension,
                                     double spread, std::uint64_t seed,
                                     bool component_as_contributor = false);

// Per-instance rendering parameters of a procedural digit glyph.
struct GlyphStyle {
  double shift_x = 0.0;
  double shift_y = 0.0;
  double scale_x = 1.0;
  double scale_y = 1.0;
  double shear = 0.0;
  double half_width = 0.07;  // stroke half-thickness, glyph units
  double intensity = 1.0;
  // Displacement of each of the six stroke anchor points, glyph units.
  double anchor_dx[6] = {};
  double anchor_dy[6] = {};
};

inline constexpr int kNumDigitClasses = 10;

// Style drawn from the default randomization used by synth_digits.
GlyphStyle random_glyph_style(Rng& rng);

// Renders one glyph of class `digit` as a glyph_size^2 vector in [0,1],
// row-major.
Vector render_digit(int digit, int glyph_size, const GlyphStyle& style);

// `count` stroke-based glyphs of random class with random styles. Class
// labels are stored. Requires glyph_size >= 6.
Dataset synth_digits(int count, int glyph_size, std::uint64_t seed);

}  // namespace genleak

#endif  // GENLEAK_DATALAB_SYNTHETIC_HPP_
