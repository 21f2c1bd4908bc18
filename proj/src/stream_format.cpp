#include "rskc/stream_format.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <random>
#include <string>

namespace rskc {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'R', 'S', 'K', 'C'};

void put_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_u64be(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

std::uint64_t get_be(std::span<const std::uint8_t> bytes, std::size_t off, std::size_t len) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) v = (v << 8) | bytes[off + i];
  return v;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace

std::vector<std::uint8_t> serialize_stream(const CipherStream& stream) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kHeaderSize + stream.chunk_count() * rs::kN);
  out.push_back(kFormatVersion);
  put_u32be(out, static_cast<std::uint32_t>(stream.chunk_count()));
  put_u64be(out, stream.original_len);
  for (const rs::Codeword& cw : stream.codewords) {
    out.insert(out.end(), cw.begin(), cw.end());
  }
  return out;
}

CipherStream parse_stream(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    throw FormatError("stream header truncated: " + std::to_string(bytes.size()) +
                      " bytes, need " + std::to_string(kHeaderSize));
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw FormatError("bad magic at offset 0");
  }
  if (bytes[4] != kFormatVersion) {
    throw FormatError("unsupported version " + std::to_string(bytes[4]) + " at offset 4");
  }
  const auto chunk_count = static_cast<std::size_t>(get_be(bytes, 5, 4));
  const std::uint64_t original_len = get_be(bytes, 9, 8);

  const std::uint64_t expected_chunks = (original_len + kChunkSymbols - 1) / kChunkSymbols;
  if (expected_chunks != chunk_count) {
    throw FormatError("original_len " + std::to_string(original_len) +
                      " inconsistent with chunk_count " + std::to_string(chunk_count));
  }
  const std::size_t expected_size = kHeaderSize + chunk_count * rs::kN;
  if (bytes.size() != expected_size) {
    throw FormatError("stream size " + std::to_string(bytes.size()) + " does not match header (expect " +
                      std::to_string(expected_size) + ")");
  }

  CipherStream stream;
  stream.original_len = original_len;
  stream.codewords.resize(chunk_count);
  for (std::size_t c = 0; c < chunk_count; ++c) {
    for (std::size_t i = 0; i < rs::kN; ++i) {
      const std::size_t off = kHeaderSize + c * rs::kN + i;
      if (bytes[off] >= kFieldSize) {
        throw FormatError("symbol byte at offset " + std::to_string(off) +
                          " has the high bit set");
      }
      stream.codewords[c][i] = static_cast<GfElem>(bytes[off]);
    }
  }
  return stream;
}

void save_stream(const std::filesystem::path& path, const CipherStream& stream) {
  write_file(path, serialize_stream(stream));
}

CipherStream load_stream(const std::filesystem::path& path) {
  return parse_stream(read_file(path));
}

void save_key(const std::filesystem::path& path, const Key& key) {
  write_file(path, std::span<const std::uint8_t>(key.data(), key.size()));
}

Key load_key(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  if (bytes.size() != kChunkSymbols) {
    throw FormatError("key file " + path.string() + " is " + std::to_string(bytes.size()) +
                      " bytes, expected " + std::to_string(kChunkSymbols));
  }
  Key key{};
  for (std::size_t i = 0; i < kChunkSymbols; ++i) {
    if (bytes[i] >= kFieldSize) {
      throw FormatError("key symbol at offset " + std::to_string(i) + " has the high bit set");
    }
    key[i] = static_cast<GfElem>(bytes[i]);
  }
  return key;
}

Key random_key(std::optional<std::uint64_t> seed) {
  std::mt19937_64 rng(seed ? *seed : (static_cast<std::uint64_t>(std::random_device{}()) << 32 |
                                      std::random_device{}()));
  Key key;
  for (auto& sym : key) sym = static_cast<GfElem>(uniform_below(rng, kFieldSize));
  return key;
}

}  // namespace rskc
