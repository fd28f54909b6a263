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

#include "genleak/metrics/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "genleak/numcore/errors.hpp"

namespace genleak {
namespace {

void check_k(const Matrix& points, int k) {
  if (k < 2 || k > points.cols()) {
    throw ValidationError("dispersion: k must lie in [2, number of points], got " +
                          std::to_string(k));
  }
}

double distance(const Matrix& points, std::size_t a, std::size_t b) {
  return (points.col(static_cast<Eigen::Index>(a)) -
          points.col(static_cast<Eigen::Index>(b)))
      .norm();
}

// Greedy order of the first `k` points; the greedy set for any smaller k is a
// prefix of it.
std::vector<std::size_t> greedy_order(const Matrix& points, int k) {
  const auto n = static_cast<std::size_t>(points.cols());
  std::size_t best_a = 0;
  std::size_t best_b = 1;
  double best = -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = distance(points, a, b);
      if (d > best) {
        best = d;
        best_a = a;
        best_b = b;
      }
    }
  }
  std::vector<std::size_t> chosen{best_a, best_b};
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<bool> taken(n, false);
  taken[best_a] = taken[best_b] = true;
  for (std::size_t i = 0; i < n; ++i) {
    nearest[i] = std::min(distance(points, i, best_a), distance(points, i, best_b));
  }
  while (chosen.size() < static_cast<std::size_t>(k)) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i] && (pick == n || nearest[i] > nearest[pick])) pick = i;
    }
    chosen.push_back(pick);
    taken[pick] = true;
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], distance(points, i, pick));
    }
  }
  return chosen;
}

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c;
}

}  // namespace

std::string_view to_string(DispersionMethod method) {
  return method == DispersionMethod::kGreedy ? "greedy" : "exact";
}

double min_pairwise_distance(const Matrix& points,
                             std::span<const std::size_t> subset) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      best = std::min(best, distance(points, subset[i], subset[j]));
    }
  }
  return best;
}

DispersionResult dispersion_greedy(const Matrix& points, int k) {
  check_k(points, k);
  DispersionResult result;
  result.k = k;
  result.method = DispersionMethod::kGreedy;
  result.witness = greedy_order(points, k);
  result.value = min_pairwise_distance(points, result.witness);
  return result;
}

DispersionResult dispersion_exact(const Matrix& points, int k) {
  check_k(points, k);
  const auto n = static_cast<std::size_t>(points.cols());
  const auto kk = static_cast<std::size_t>(k);
  if (binomial(n, kk) > kExactDispersionSubsetLimit) {
    throw ValidationError("dispersion_exact: too many subsets to enumerate");
  }
  Matrix dist(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) dist(a, b) = distance(points, a, b);
  }

  DispersionResult result;
  result.k = k;
  result.method = DispersionMethod::kExact;
  result.value = -1.0;
  std::vector<std::size_t> subset(kk);
  for (std::size_t i = 0; i < kk; ++i) subset[i] = i;
  while (true) {
    double value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kk && value > result.value; ++i) {
      for (std::size_t j = i + 1; j < kk; ++j) {
        value = std::min(value, dist(subset[i], subset[j]));
      }
    }
    if (value > result.value) {
      result.value = value;
      result.witness = subset;
    }
    // Next subset in lexicographic order.
    std::size_t i = kk;
    while (i > 0 && subset[i - 1] == n - kk + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < kk; ++j) subset[j] = subset[j - 1] + 1;
  }
  return result;
}

std::vector<DispersionResult> dispersion_profile(const Matrix& points,
                                                 std::span<const int> ks) {
  if (ks.empty()) return {};
  for (int k : ks) check_k(points, k);
  const int largest = *std::max_element(ks.begin(), ks.end());
  const std::vector<std::size_t> order = greedy_order(points, largest);
  std::vector<DispersionResult> profile;
  for (int k : ks) {
    DispersionResult r;
    r.k = k;
    r.method = DispersionMethod::kGreedy;
    r.witness.assign(order.begin(), order.begin() + k);
    r.value = min_pairwise_distance(points, r.witness);
    profile.push_back(std::move(r));
  }
  return profile;
}

std::string dispersion_to_csv(const std::vector<DispersionResult>& profile) {
  std::string out = "k,value,method\n";
  for (const DispersionResult& r : profile) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", r.value);
    out += std::to_string(r.k) + ',' + buf + ',' + std::string(to_string(r.method)) +
           '\n';
  }
  return out;
}

}  // namespace genleak
