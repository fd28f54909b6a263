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

#ifndef GENLEAK_NUMCORE_BYTEIO_HPP_
#define GENLEAK_NUMCORE_BYTEIO_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "genleak/numcore/errors.hpp"

namespace genleak {

enum class Endian { kLittle, kBig };

// Appends fixed-width integers and IEEE-754 doubles with an explicit byte
// order, independent of the host.
class ByteWriter {
 public:
  explicit ByteWriter(Endian order) : order_(order) {}

  void put_bytes(std::string_view bytes) { out_.append(bytes); }
  void put_u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void put_u16(std::uint16_t v) { put_uint(v, 2); }
  void put_u32(std::uint32_t v) { put_uint(v, 4); }
  void put_u64(std::uint64_t v) { put_uint(v, 8); }
  void put_f64(double v) { put_uint(std::bit_cast<std::uint64_t>(v), 8); }

  const std::string& bytes() const { return out_; }
  std::string take() { return std::move(out_); }

 private:
  void put_uint(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) {
      const int shift = order_ == Endian::kLittle ? 8 * i : 8 * (width - 1 - i);
      out_.push_back(static_cast<char>((v >> shift) & 0xff));
    }
  }

  Endian order_;
  std::string out_;
};

// Reads what ByteWriter writes. Throws FormatError on truncation.
class ByteReader {
 public:
  ByteReader(std::string_view bytes, Endian order)
      : bytes_(bytes), order_(order) {}

  std::string_view get_bytes(std::size_t n) {
    require(n);
    auto view = bytes_.substr(pos_, n);
    pos_ += n;
    return view;
  }
  std::uint8_t get_u8() { return static_cast<std::uint8_t>(get_uint(1)); }
  std::uint16_t get_u16() { return static_cast<std::uint16_t>(get_uint(2)); }
  std::uint32_t get_u32() { return static_cast<std::uint32_t>(get_uint(4)); }
  std::uint64_t get_u64() { return get_uint(8); }
  double get_f64() { return std::bit_cast<double>(get_uint(8)); }

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void require(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw FormatError("unexpected end of data");
  }
  std::uint64_t get_uint(int width) {
    require(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      const auto byte = static_cast<std::uint64_t>(
          static_cast<unsigned char>(bytes_[pos_ + i]));
      const int shift = order_ == Endian::kLittle ? 8 * i : 8 * (width - 1 - i);
      v |= byte << shift;
    }
    pos_ += static_cast<std::size_t>(width);
    return v;
  }

  std::string_view bytes_;
  Endian order_;
  std::size_t pos_ = 0;
};

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_BYTEIO_HPP_
