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

#include "genleak/datalab/idx.hpp"

#include <algorithm>
#include <cmath>

#include "genleak/numcore/byteio.hpp"
#include "genleak/numcore/checkpoint.hpp"
#include "genleak/numcore/errors.hpp"

namespace genleak {

Dataset parse_idx(std::string_view image_bytes,
                  std::optional<std::string_view> label_bytes) {
  ByteReader r(image_bytes, Endian::kBig);
  if (r.get_u32() != kIdxImageMagic) throw FormatError("IDX images: bad magic");
  const std::uint64_t count = r.get_u32();
  const std::uint64_t rows = r.get_u32();
  const std::uint64_t cols = r.get_u32();
  const std::uint64_t pixels = rows * cols;
  if (r.remaining() != count * pixels) {
    throw FormatError("IDX images: payload holds " + std::to_string(r.remaining()) +
                      " bytes, header declares " + std::to_string(count * pixels));
  }
  Dataset data;
  data.features.resize(static_cast<Eigen::Index>(pixels),
                       static_cast<Eigen::Index>(count));
  for (std::uint64_t j = 0; j < count; ++j) {
    for (std::uint64_t i = 0; i < pixels; ++i) {
      data.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          r.get_u8() / 255.0;
    }
    data.ids.push_back(static_cast<InstanceId>(j));
  }

  if (label_bytes) {
    ByteReader l(*label_bytes, Endian::kBig);
    if (l.get_u32() != kIdxLabelMagic) throw FormatError("IDX labels: bad magic");
    const std::uint64_t label_count = l.get_u32();
    if (label_count != count) {
      throw FormatError("IDX labels: " + std::to_string(label_count) +
                        " labels for " + std::to_string(count) + " images");
    }
    if (l.remaining() != label_count) {
      throw FormatError("IDX labels: payload length disagrees with header");
    }
    for (std::uint64_t j = 0; j < label_count; ++j) {
      data.class_labels.push_back(l.get_u8());
    }
  }
  return data;
}

Dataset load_idx(const std::filesystem::path& images_path,
                 const std::optional<std::filesystem::path>& labels_path) {
  const std::string images = read_file(images_path);
  if (!labels_path) return parse_idx(images);
  const std::string labels = read_file(*labels_path);
  return parse_idx(images, labels);
}

std::string encode_idx_images(const Dataset& data, int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols != data.dim()) {
    throw DimensionError("IDX image shape does not match the feature dimension");
  }
  ByteWriter w(Endian::kBig);
  w.put_u32(kIdxImageMagic);
  w.put_u32(static_cast<std::uint32_t>(data.features.cols()));
  w.put_u32(static_cast<std::uint32_t>(rows));
  w.put_u32(static_cast<std::uint32_t>(cols));
  for (Eigen::Index j = 0; j < data.features.cols(); ++j) {
    for (Eigen::Index i = 0; i < data.features.rows(); ++i) {
      const double v = std::clamp(data.features(i, j), 0.0, 1.0);
      w.put_u8(static_cast<std::uint8_t>(std::lround(v * 255.0)));
    }
  }
  return w.take();
}

std::string encode_idx_labels(const Dataset& data) {
  if (data.class_labels.size() != data.size()) {
    throw ValidationError("dataset has no class labels to encode");
  }
  ByteWriter w(Endian::kBig);
  w.put_u32(kIdxLabelMagic);
  w.put_u32(static_cast<std::uint32_t>(data.class_labels.size()));
  for (int label : data.class_labels) {
    if (label < 0 || label > 255) throw ValidationError("IDX labels must fit a byte");
    w.put_u8(static_cast<std::uint8_t>(label));
  }
  return w.take();
}

}  // namespace genleak
