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

#ifndef GENLEAK_DATALAB_IDX_HPP_
#define GENLEAK_DATALAB_IDX_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "genleak/datalab/dataset.hpp"

namespace genleak {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

// Parses big-endian IDX image data (and optional labels) into a dataset with
// pixels scaled from [0,255] to [0,1], one row-major image per column. Ids
// are the image indices. Throws FormatError on a bad magic number, a payload
// whose length disagrees with the declared dimensions, or an image/label
// count mismatch.
Dataset parse_idx(std::string_view image_bytes,
                  std::optional<std::string_view> label_bytes = std::nullopt);

Dataset load_idx(const std::filesystem::path& images_path,
                 const std::optional<std::filesystem::path>& labels_path =
                     std::nullopt);

// Quantizes features to round(255 * v). rows * cols must equal the dimension.
std::string encode_idx_images(const Dataset& data, int rows, int cols);
std::string encode_idx_labels(const Dataset& data);

}  // namespace genleak

#endif  // GENLEAK_DATALAB_IDX_HPP_
