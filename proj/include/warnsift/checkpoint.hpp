#pragma once

// Binary checkpoint. All integers and floats are little-endian.
//
//   bytes 0..7   magic "WSIFTCKP"
//   u32          format version (1)
//   u32 n, n B   config text, key=value lines as written by format_config
//   u32          tensor count
//   per tensor:  u32 n, n B name; u32 rank; rank × u64 dims; prod(dims) × f64 values (row-major)

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "warnsift/config.hpp"
#include "warnsift/model.hpp"

namespace warnsift {

inline constexpr char kCheckpointMagic[8] = {'W', 'S', 'I', 'F', 'T', 'C', 'K', 'P'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

namespace detail {

template <class T>
void put_le(std::ostream& os, T v) {
  unsigned char b[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), sizeof b);
}

template <class T>
T get_le(std::istream& is) {
  unsigned char b[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(b), sizeof b)) throw Error("checkpoint: unexpected end of file");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(b[i]) << (8 * i);
  return v;
}

inline void put_string(std::ostream& os, const std::string& s) {
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string get_string(std::istream& is) {
  const auto n = get_le<std::uint32_t>(is);
  std::string s(n, '\0');
  if (n && !is.read(s.data(), n)) throw Error("checkpoint: unexpected end of file");
  return s;
}

}  // namespace detail

struct Checkpoint {
  ModelConfig config;
  ModelParams params;
};

inline void write_checkpoint(std::ostream& os, const ModelConfig& cfg, const ModelParams& params) {
  os.write(kCheckpointMagic, sizeof kCheckpointMagic);
  detail::put_le<std::uint32_t>(os, kCheckpointVersion);
  detail::put_string(os, format_config(cfg));
  const auto entries = params.entries();
  detail::put_le<std::uint32_t>(os, static_cast<std::uint32_t>(entries.size()));
  for (const auto& [name, t] : entries) {
    detail::put_string(os, name);
    detail::put_le<std::uint32_t>(os, 2);
    detail::put_le<std::uint64_t>(os, t->rows);
    detail::put_le<std::uint64_t>(os, t->cols);
    for (double v : t->data) detail::put_le<std::uint64_t>(os, std::bit_cast<std::uint64_t>(v));
  }
  if (!os) throw Error("checkpoint: write failed");
}

inline Checkpoint read_checkpoint(std::istream& is) {
  char magic[8];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kCheckpointMagic, sizeof magic) != 0) {
    throw Error("checkpoint: bad magic");
  }
  const auto version = detail::get_le<std::uint32_t>(is);
  if (version != kCheckpointVersion) throw Error("checkpoint: unsupported format version " + std::to_string(version));
  Checkpoint ck;
  ck.config = parse_config(detail::get_string(is));
  const auto count = detail::get_le<std::uint32_t>(is);
  std::map<std::string, Tensor> tensors;
  for (std::uint32_t k = 0; k < count; ++k) {
    auto name = detail::get_string(is);
    const auto rank = detail::get_le<std::uint32_t>(is);
    if (rank != 2) throw Error("checkpoint: tensor " + name + " has unsupported rank");
    const auto rows = detail::get_le<std::uint64_t>(is);
    const auto cols = detail::get_le<std::uint64_t>(is);
    if (rows > (1ULL << 32) || cols > (1ULL << 32)) throw Error("checkpoint: tensor " + name + " is implausibly large");
    Tensor t(rows, cols);
    for (auto& v : t.data) v = std::bit_cast<double>(detail::get_le<std::uint64_t>(is));
    tensors.emplace(std::move(name), std::move(t));
  }
  auto dim = [&](const char* name, bool rows) -> std::size_t {
    auto it = tensors.find(name);
    if (it == tensors.end()) throw Error(std::string("checkpoint: missing tensor ") + name);
    return rows ? it->second.rows : it->second.cols;
  };
  ModelShape s;
  s.vocab_rows = dim("embed.function", true);
  s.embed_dim = dim("embed.function", false);
  s.hidden_dim = dim("lstm.function.fwd.U", true);
  s.rule_rows = dim("attr_embed.rule", true);
  s.attr_dim = dim("attr.W", true);
  ck.params = ModelParams::zeros(s);
  for (auto& [name, t] : ck.params.entries()) {
    auto it = tensors.find(name);
    if (it == tensors.end()) throw Error("checkpoint: missing tensor " + name);
    if (!it->second.same_shape(*t)) throw Error("checkpoint: tensor " + name + " has an inconsistent shape");
    *t = std::move(it->second);
  }
  if (tensors.size() != ck.params.entries().size()) throw Error("checkpoint: unexpected extra tensors");
  return ck;
}

inline void save_checkpoint(const std::string& path, const ModelConfig& cfg, const ModelParams& params) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write checkpoint " + path);
  write_checkpoint(os, cfg, params);
}

inline Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open checkpoint " + path);
  return read_checkpoint(is);
}

}  // namespace warnsift
