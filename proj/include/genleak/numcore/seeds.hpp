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

#ifndef GENLEAK_NUMCORE_SEEDS_HPP_
#define GENLEAK_NUMCORE_SEEDS_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace genleak {

using Rng = std::mt19937_64;

// Counter-based seed split: the seed of stream `stream` under `base`.
// Distinct (base, stream) pairs give statistically independent seeds, so a
// stage can be replayed from its derived seed alone.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Stream index for a named stage, e.g. derive_seed(master, stream_of("train")).
std::uint64_t stream_of(std::string_view label);

// FNV-1a over raw bytes; stable across platforms and runs.
std::uint64_t fnv1a(std::string_view bytes,
                    std::uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_SEEDS_HPP_
