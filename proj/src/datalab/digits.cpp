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
#include <array>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "genleak/datalab/synthetic.hpp"
#include "genleak/numcore/errors.hpp"

namespace genleak {
namespace {

struct Point {
  double x;
  double y;
};

// Seven-segment anchors in glyph units (x right, y down):
// 0 top-left, 1 top-right, 2 middle-left, 3 middle-right, 4 bottom-left,
// 5 bottom-right.
constexpr std::array<Point, 6> kAnchors = {{{0.28, 0.15},
                                            {0.72, 0.15},
                                            {0.28, 0.50},
                                            {0.72, 0.50},
                                            {0.28, 0.85},
                                            {0.72, 0.85}}};

struct Stroke {
  Point a;
  Point b;
};

Point mid(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

std::vector<Stroke> strokes_for(int digit, const std::array<Point, 6>& p) {
  const Stroke top{p[0], p[1]};
  const Stroke upper_right{p[1], p[3]};
  const Stroke lower_right{p[3], p[5]};
  const Stroke bottom{p[4], p[5]};
  const Stroke lower_left{p[2], p[4]};
  const Stroke upper_left{p[0], p[2]};
  const Stroke middle{p[2], p[3]};
  switch (digit) {
    case 0:
      return {top, upper_right, lower_right, bottom, lower_left, upper_left};
    case 1: {
      const Point head = mid(p[0], p[1]);
      const Point foot = mid(p[4], p[5]);
      return {{head, foot}, {mid(p[0], p[2]), head}};
    }
    case 2:
      return {top, upper_right, middle, lower_left, bottom};
    case 3:
      return {top, upper_right, middle, lower_right, bottom};
    case 4:
      return {upper_left, middle, upper_right, lower_right};
    case 5:
      return {top, upper_left, middle, lower_right, bottom};
    case 6:
      return {top, upper_left, lower_left, bottom, lower_right, middle};
    case 7:
      return {top, {p[1], mid(p[4], p[5])}};
    case 8:
      return {top, upper_right, lower_right, bottom, lower_left, upper_left,
              middle};
    case 9:
      return {top, upper_right, lower_right, bottom, upper_left, middle};
    default:
      throw ValidationError("digit class must be in [0, 9]");
  }
}

double segment_distance(Point q, const Stroke& s) {
  const double vx = s.b.x - s.a.x;
  const double vy = s.b.y - s.a.y;
  const double len2 = vx * vx + vy * vy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((q.x - s.a.x) * vx + (q.y - s.a.y) * vy) / len2, 0.0, 1.0);
  }
  const double dx = q.x - (s.a.x + t * vx);
  const double dy = q.y - (s.a.y + t * vy);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

GlyphStyle random_glyph_style(Rng& rng) {
  std::uniform_real_distribution<double> shift(-0.08, 0.08);
  std::uniform_real_distribution<double> scale(0.85, 1.1);
  std::uniform_real_distribution<double> shear(-0.25, 0.25);
  std::uniform_real_distribution<double> width(0.05, 0.09);
  std::uniform_real_distribution<double> intensity(0.75, 1.0);
  std::normal_distribution<double> anchor(0.0, 0.035);
  GlyphStyle s;
  s.shift_x = shift(rng);
  s.shift_y = shift(rng);
  s.scale_x = scale(rng);
  s.scale_y = scale(rng);
  s.shear = shear(rng);
  s.half_width = width(rng);
  s.intensity = intensity(rng);
  for (int i = 0; i < 6; ++i) {
    s.anchor_dx[i] = anchor(rng);
    s.anchor_dy[i] = anchor(rng);
  }
  return s;
}

Vector render_digit(int digit, int glyph_size, const GlyphStyle& style) {
  if (glyph_size < 6) throw ValidationError("glyph_size must be at least 6");
  std::array<Point, 6> anchors = kAnchors;
  for (int i = 0; i < 6; ++i) {
    anchors[i].x += style.anchor_dx[i];
    anchors[i].y += style.anchor_dy[i];
  }
  const std::vector<Stroke> strokes = strokes_for(digit, anchors);

  const double pixel = 1.0 / glyph_size;
  Vector image(glyph_size * glyph_size);
  for (int row = 0; row < glyph_size; ++row) {
    for (int col = 0; col < glyph_size; ++col) {
      // Map the pixel center back into glyph space around the center (0.5, 0.5).
      const double px = (col + 0.5) * pixel - 0.5 - style.shift_x;
      const double py = (row + 0.5) * pixel - 0.5 - style.shift_y;
      const double gy = py / style.scale_y;
      const double gx = (px - style.shear * gy) / style.scale_x;
      const Point q{gx + 0.5, gy + 0.5};
      double dist = 1e9;
      for (const Stroke& s : strokes) dist = std::min(dist, segment_distance(q, s));
      const double coverage =
          std::clamp(1.0 - std::max(0.0, dist - style.half_width) / pixel, 0.0, 1.0);
      image(row * glyph_size + col) = std::clamp(style.intensity * coverage, 0.0, 1.0);
    }
  }
  return image;
}

Dataset synth_digits(int count, int glyph_size, std::uint64_t seed) {
  if (count < 0) throw ValidationError("count must be nonnegative");
  if (glyph_size < 6) throw ValidationError("glyph_size must be at least 6");
  Rng rng(seed);
  std::uniform_int_distribution<int> digit(0, kNumDigitClasses - 1);
  Dataset data;
  data.features.resize(glyph_size * glyph_size, count);
  for (int j = 0; j < count; ++j) {
    const int cls = digit(rng);
    const GlyphStyle style = random_glyph_style(rng);
    data.features.col(j) = render_digit(cls, glyph_size, style);
    data.ids.push_back(j);
    data.class_labels.push_back(cls);
  }
  return data;
}

}  // namespace genleak
