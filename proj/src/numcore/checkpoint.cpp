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

#include "genleak/numcore/checkpoint.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "genleak/numcore/byteio.hpp"
#include "genleak/numcore/errors.hpp"
#include "genleak/numcore/seeds.hpp"

namespace genleak {
namespace {

constexpr std::string_view kMagic = "GLNK";

Activation activation_from_byte(std::uint8_t b) {
  if (b > static_cast<std::uint8_t>(Activation::kIdentity)) {
    throw FormatError("checkpoint: unknown activation code " + std::to_string(b));
  }
  return static_cast<Activation>(b);
}

}  // namespace

std::string_view to_string(ModelRole role) {
  switch (role) {
    case ModelRole::kUntagged:
      return "untagged";
    case ModelRole::kGenerator:
      return "generator";
    case ModelRole::kCritic:
      return "critic";
    case ModelRole::kEncoder:
      return "encoder";
    case ModelRole::kDecoder:
      return "decoder";
    case ModelRole::kAttacker:
      return "attacker";
  }
  return "unknown";
}

std::string encode_checkpoint(const Checkpoint& checkpoint) {
  const NetworkSpec& spec = checkpoint.spec;
  spec.validate();
  if (checkpoint.params.size() != spec.param_count()) {
    throw DimensionError("checkpoint: parameter count does not match spec");
  }
  ByteWriter w(Endian::kLittle);
  w.put_bytes(kMagic);
  w.put_u32(kCheckpointVersion);
  w.put_u32(static_cast<std::uint32_t>(checkpoint.role));
  w.put_u8(static_cast<std::uint8_t>(spec.hidden_activation));
  w.put_u8(static_cast<std::uint8_t>(spec.output_activation));
  w.put_u16(0);
  w.put_f64(spec.l2_reg_coeff);
  w.put_u32(static_cast<std::uint32_t>(spec.layer_sizes.size()));
  for (int n : spec.layer_sizes) w.put_u32(static_cast<std::uint32_t>(n));
  w.put_u64(checkpoint.params.size());
  for (double v : checkpoint.params.values) w.put_f64(v);
  const std::uint64_t checksum = fnv1a(w.bytes());
  w.put_u64(checksum);
  return w.take();
}

Checkpoint decode_checkpoint(std::string_view bytes) {
  ByteReader r(bytes, Endian::kLittle);
  if (r.remaining() < kMagic.size() || r.get_bytes(kMagic.size()) != kMagic) {
    throw FormatError("checkpoint: bad magic");
  }
  if (bytes.size() < kMagic.size() + 8) throw FormatError("checkpoint: truncated");
  {
    const std::size_t body = bytes.size() - 8;
    ByteReader tail(bytes.substr(body), Endian::kLittle);
    if (tail.get_u64() != fnv1a(bytes.substr(0, body))) {
      throw IntegrityError("checkpoint: checksum mismatch");
    }
  }
  const std::uint32_t version = r.get_u32();
  if (version != kCheckpointVersion) {
    throw FormatError("checkpoint: unsupported format version " +
                      std::to_string(version));
  }
  Checkpoint cp;
  const std::uint32_t role = r.get_u32();
  if (role > static_cast<std::uint32_t>(ModelRole::kAttacker)) {
    throw FormatError("checkpoint: unknown role tag " + std::to_string(role));
  }
  cp.role = static_cast<ModelRole>(role);
  cp.spec.hidden_activation = activation_from_byte(r.get_u8());
  cp.spec.output_activation = activation_from_byte(r.get_u8());
  r.get_u16();
  cp.spec.l2_reg_coeff = r.get_f64();
  const std::uint32_t layers = r.get_u32();
  if (layers < 2 || layers > 4096) {
    throw FormatError("checkpoint: implausible layer count");
  }
  for (std::uint32_t i = 0; i < layers; ++i) {
    cp.spec.layer_sizes.push_back(static_cast<int>(r.get_u32()));
  }
  try {
    cp.spec.validate();
  } catch (const ValidationError& e) {
    throw FormatError(std::string("checkpoint: ") + e.what());
  }
  const std::uint64_t count = r.get_u64();
  if (count != cp.spec.param_count()) {
    throw FormatError("checkpoint: parameter count disagrees with layer sizes");
  }
  if (r.remaining() != count * 8 + 8) {
    throw FormatError("checkpoint: payload length disagrees with header");
  }
  cp.params.values.resize(count);
  for (auto& v : cp.params.values) v = r.get_f64();
  return cp;
}

void save_checkpoint(const std::filesystem::path& path,
                     const Checkpoint& checkpoint) {
  write_file(path, encode_checkpoint(checkpoint));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  return decode_checkpoint(read_file(path));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " into place");
}

}  // namespace genleak
