#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rskc/keychain.hpp"

namespace rskc {

// On-disk formats. Stream file:
//   "RSKC" | version u8 | chunk_count u32 BE | original_len u64 BE |
//   chunk_count * 127 symbol bytes (one symbol per byte, high bit clear).
// Key file: exactly 63 raw symbol bytes, each < 128.
inline constexpr std::size_t kHeaderSize = 17;
inline constexpr std::uint8_t kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> serialize_stream(const CipherStream& stream);

// Rejects bad magic/version, length mismatches, inconsistent header counts
// and symbol bytes with the high bit set; the FormatError message names the
// offending byte offset where one exists.
CipherStream parse_stream(std::span<const std::uint8_t> bytes);

void save_stream(const std::filesystem::path& path, const CipherStream& stream);
CipherStream load_stream(const std::filesystem::path& path);

void save_key(const std::filesystem::path& path, const Key& key);
Key load_key(const std::filesystem::path& path);

// 63 uniformly random symbols; seedless draws from the OS entropy source.
Key random_key(std::optional<std::uint64_t> seed);

}  // namespace rskc
