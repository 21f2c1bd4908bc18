#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rskc/rs_codec.hpp"

namespace rskc {

// Chunked XOR cipher whose key evolves with the Reed-Solomon parity of each
// transmitted codeword: both sides derive key i+1 by folding codeword i's
// parity into key i, so the FEC that protects the channel also refreshes the
// shared secret.

inline constexpr std::size_t kChunkSymbols = rs::kK;  // 63

using Key = std::array<GfElem, kChunkSymbols>;
using KeyChain = std::vector<Key>;  // chain[0] = initial key, chain[i] encrypts chunk i

struct MessageChunk {
  std::array<GfElem, kChunkSymbols> symbols{};  // zero beyond payload_len
  std::size_t payload_len = 0;
};

struct CipherStream {
  std::uint64_t original_len = 0;  // payload symbols before padding
  std::vector<rs::Codeword> codewords;

  std::size_t chunk_count() const { return codewords.size(); }
};

// Bytes are used verbatim as 7-bit symbols; a byte >= 128 does not fit
// GF(2^7) and raises std::domain_error naming the offending offset.
std::vector<GfElem> text_to_symbols(std::string_view text);
std::string symbols_to_text(std::span<const GfElem> symbols);

// Consecutive 63-symbol chunks, the last one zero-padded with its true
// payload length recorded. Empty input yields no chunks.
std::vector<MessageChunk> chunk_message(std::span<const GfElem> symbols);

// Symbol-wise addition in GF(2^7); encrypt and decrypt are the same
// involution, split for readability at call sites.
std::array<GfElem, kChunkSymbols> encrypt_chunk(const std::array<GfElem, kChunkSymbols>& m,
                                                const Key& k);
std::array<GfElem, kChunkSymbols> decrypt_chunk(const std::array<GfElem, kChunkSymbols>& c,
                                                const Key& k);

// Next key: key[i] xor parity[i] for the codeword's first 63 parity symbols
// (codeword indices 63..125; the 64th parity symbol is unused).
Key evolve_key(const Key& k, const rs::Codeword& cw);

struct EncryptResult {
  CipherStream stream;
  KeyChain chain;  // length chunk_count + 1
};

// Sender pipeline, strictly sequential over chunks: encrypt chunk i with
// key i, RS-encode, evolve key i+1 from the codeword parity.
EncryptResult encrypt_stream(std::string_view plaintext, const Key& initial);

struct DecryptResult {
  bool ok = false;
  std::size_t failed_chunk = 0;            // meaningful when !ok
  std::string plaintext;                   // meaningful when ok
  KeyChain chain;                          // receiver-side reconstruction
  std::vector<rs::DecodeReport> reports;   // one per processed codeword
};

// Receiver pipeline. Keys evolve from the *corrected* codeword's parity, so
// the chain stays in sync with the sender under any correctable noise. A
// decode failure aborts the stream (later keys are unrecoverable) and is
// reported with the chunk index. Throws std::invalid_argument if
// original_len is inconsistent with the codeword count.
DecryptResult decrypt_stream(const CipherStream& stream, const Key& initial);

struct KeyChainStats {
  std::vector<std::size_t> step_distances;  // symbol positions changed per step
  std::size_t distinct_keys = 0;
};

// Throws std::invalid_argument on an empty chain.
KeyChainStats key_chain_stats(const KeyChain& chain);

}  // namespace rskc
