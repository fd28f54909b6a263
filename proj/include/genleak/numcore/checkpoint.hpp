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

#ifndef GENLEAK_NUMCORE_CHECKPOINT_HPP_
#define GENLEAK_NUMCORE_CHECKPOINT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "genleak/numcore/network.hpp"

namespace genleak {

// Binary layout, all integers and floats little-endian:
//
//   offset  size  field
//   0       4     magic "GLNK"
//   4       4     u32 format version (kCheckpointVersion)
//   8       4     u32 model role tag
//   12      1     u8 hidden activation
//   13      1     u8 output activation
//   14      2     reserved, zero
//   16      8     f64 l2_reg_coeff
//   24      4     u32 layer count L
//   28      4L    u32 layer sizes
//   ..      8     u64 parameter count P
//   ..      8P    f64 parameters
//   ..      8     u64 FNV-1a of every preceding byte
inline constexpr std::uint32_t kCheckpointVersion = 1;

enum class ModelRole : std::uint32_t {
  kUntagged = 0,
  kGenerator = 1,
  kCritic = 2,
  kEncoder = 3,
  kDecoder = 4,
  kAttacker = 5,
};

std::string_view to_string(ModelRole role);

struct Checkpoint {
  ModelRole role = ModelRole::kUntagged;
  NetworkSpec spec;
  ParamVector params;
};

std::string encode_checkpoint(const Checkpoint& checkpoint);

// Throws FormatError on a bad magic, unknown version, truncation or a
// parameter count that disagrees with the layer sizes, and IntegrityError
// when the trailing checksum does not match.
Checkpoint decode_checkpoint(std::string_view bytes);

void save_checkpoint(const std::filesystem::path& path,
                     const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// Reads a whole file; throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
// Writes atomically through a temporary sibling; throws IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_CHECKPOINT_HPP_
