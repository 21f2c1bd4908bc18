#include "rskc/keychain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rskc {

namespace {

std::size_t chunk_count_for(std::uint64_t original_len) {
  return static_cast<std::size_t>((original_len + kChunkSymbols - 1) / kChunkSymbols);
}

}  // namespace

std::vector<GfElem> text_to_symbols(std::string_view text) {
  std::vector<GfElem> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (byte >= kFieldSize) {
      throw std::domain_error("byte value " + std::to_string(byte) + " at position " +
                              std::to_string(i) + " does not fit GF(2^7)");
    }
    symbols.push_back(static_cast<GfElem>(byte));
  }
  return symbols;
}

std::string symbols_to_text(std::span<const GfElem> symbols) {
  return {reinterpret_cast<const char*>(symbols.data()), symbols.size()};
}

std::vector<MessageChunk> chunk_message(std::span<const GfElem> symbols) {
  std::vector<MessageChunk> chunks;
  chunks.reserve(chunk_count_for(symbols.size()));
  for (std::size_t off = 0; off < symbols.size(); off += kChunkSymbols) {
    MessageChunk chunk;
    chunk.payload_len = std::min(kChunkSymbols, symbols.size() - off);
    std::copy_n(symbols.begin() + static_cast<std::ptrdiff_t>(off), chunk.payload_len,
                chunk.symbols.begin());
    chunks.push_back(chunk);
  }
  return chunks;
}

std::array<GfElem, kChunkSymbols> encrypt_chunk(const std::array<GfElem, kChunkSymbols>& m,
                                                const Key& k) {
  std::array<GfElem, kChunkSymbols> out;
  for (std::size_t i = 0; i < kChunkSymbols; ++i) out[i] = gf::add(m[i], k[i]);
  return out;
}

std::array<GfElem, kChunkSymbols> decrypt_chunk(const std::array<GfElem, kChunkSymbols>& c,
                                                const Key& k) {
  return encrypt_chunk(c, k);
}

Key evolve_key(const Key& k, const rs::Codeword& cw) {
  Key next;
  for (std::size_t i = 0; i < kChunkSymbols; ++i) {
    next[i] = gf::add(k[i], cw[rs::kK + i]);
  }
  return next;
}

EncryptResult encrypt_stream(std::string_view plaintext, const Key& initial) {
  const std::vector<GfElem> symbols = text_to_symbols(plaintext);

  EncryptResult out;
  out.stream.original_len = symbols.size();
  out.chain.push_back(initial);

  Key key = initial;
  for (const MessageChunk& chunk : chunk_message(symbols)) {
    const auto cipher = encrypt_chunk(chunk.symbols, key);
    const rs::Codeword cw = rs::encode(cipher);
    out.stream.codewords.push_back(cw);
    key = evolve_key(key, cw);
    out.chain.push_back(key);
  }
  return out;
}

DecryptResult decrypt_stream(const CipherStream& stream, const Key& initial) {
  if (chunk_count_for(stream.original_len) != stream.chunk_count()) {
    throw std::invalid_argument("stream original_len inconsistent with chunk count");
  }

  DecryptResult out;
  out.chain.push_back(initial);

  std::vector<GfElem> symbols;
  symbols.reserve(stream.chunk_count() * kChunkSymbols);

  Key key = initial;
  for (std::size_t i = 0; i < stream.chunk_count(); ++i) {
    rs::DecodeResult decoded = rs::decode(stream.codewords[i]);
    out.reports.push_back(decoded.report);
    if (!decoded.ok()) {
      out.failed_chunk = i;
      return out;  // keys beyond this chunk are unrecoverable
    }
    const auto plain = decrypt_chunk(decoded.message, key);
    symbols.insert(symbols.end(), plain.begin(), plain.end());
    key = evolve_key(key, decoded.corrected);
    out.chain.push_back(key);
  }

  symbols.resize(static_cast<std::size_t>(stream.original_len));  // strip padding
  out.plaintext = symbols_to_text(symbols);
  out.ok = true;
  return out;
}

KeyChainStats key_chain_stats(const KeyChain& chain) {
  if (chain.empty()) throw std::invalid_argument("key chain is empty");

  KeyChainStats stats;
  stats.step_distances.reserve(chain.size() - 1);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    std::size_t distance = 0;
    for (std::size_t j = 0; j < kChunkSymbols; ++j) {
      if (chain[i][j] != chain[i + 1][j]) ++distance;
    }
    stats.step_distances.push_back(distance);
  }
  stats.distinct_keys = std::set<Key>(chain.begin(), chain.end()).size();
  return stats;
}

}  // namespace rskc
