#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "golden.hpp"
#include "rskc/channel.hpp"
#include "rskc/keychain.hpp"

using namespace rskc;

namespace {

Key random_key63(std::mt19937& rng) {
  Key k;
  for (auto& sym : k) sym = static_cast<GfElem>(rng() % kFieldSize);
  return k;
}

std::string random_ascii(std::mt19937& rng, std::size_t len) {
  std::string s(len, '\0');
  for (auto& ch : s) ch = static_cast<char>(rng() % kFieldSize);
  return s;
}

}  // namespace

TEST_SUITE("keychain") {

TEST_CASE("text_to_symbols maps bytes verbatim and rejects non-7-bit input") {
  CHECK(text_to_symbols("r") == std::vector<GfElem>{114});
  CHECK(text_to_symbols(".") == std::vector<GfElem>{46});
  CHECK(text_to_symbols("").empty());

  const std::string bad = std::string("ok") + static_cast<char>(0xC8);
  CHECK_THROWS_WITH_AS(text_to_symbols(bad),
                       "byte value 200 at position 2 does not fit GF(2^7)", std::domain_error);

  const auto symbols = text_to_symbols(golden::kPlaintext);
  REQUIRE(symbols.size() == golden::kPaperMessage.size());
  CHECK(std::equal(symbols.begin(), symbols.end(), golden::kPaperMessage.begin()));
  CHECK(symbols_to_text(symbols) == golden::kPlaintext);
}

TEST_CASE("chunking pads the tail with zeros and records payload lengths") {
  const auto symbols = text_to_symbols(golden::kPlaintext);
  const auto chunks = chunk_message(symbols);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0].payload_len == 63);
  CHECK(chunks[1].payload_len == 29);
  for (std::size_t i = 29; i < kChunkSymbols; ++i) CHECK(chunks[1].symbols[i] == 0);

  CHECK(chunk_message(std::vector<GfElem>{}).empty());
  CHECK(chunk_message(std::vector<GfElem>(63, 1)).size() == 1);
  CHECK(chunk_message(std::vector<GfElem>(63, 1))[0].payload_len == 63);

  const auto two = chunk_message(std::vector<GfElem>(64, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[1].payload_len == 1);
}

TEST_CASE("chunk encryption reproduces the golden vectors") {
  const auto chunks = chunk_message(text_to_symbols(golden::kPlaintext));
  CHECK(encrypt_chunk(chunks[0].symbols, golden::kInitialKey) == golden::kCipher1);
  CHECK(encrypt_chunk(chunks[1].symbols, golden::kKey1) == golden::kCipher2);

  const std::array<GfElem, kChunkSymbols> zero{};
  CHECK(encrypt_chunk(zero, golden::kInitialKey) == golden::kInitialKey);
}

TEST_CASE("chunk decryption inverts encryption") {
  const auto chunks = chunk_message(text_to_symbols(golden::kPlaintext));
  CHECK(decrypt_chunk(golden::kCipher1, golden::kInitialKey) == chunks[0].symbols);
  CHECK(decrypt_chunk(golden::kCipher2, golden::kKey1) == chunks[1].symbols);
  CHECK(decrypt_chunk(golden::kInitialKey, golden::kInitialKey) == Key{});

  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Key k = random_key63(rng);
    Key m = random_key63(rng);
    CHECK(decrypt_chunk(encrypt_chunk(m, k), k) == m);
  }
}

TEST_CASE("key evolution folds the first 63 parity symbols into the key") {
  CHECK(evolve_key(golden::kInitialKey, golden::kCodeword1) == golden::kKey1);
  CHECK(evolve_key(golden::kKey1, golden::kCodeword2) == golden::kKey2);

  CHECK(evolve_key(golden::kInitialKey, rs::Codeword{}) == golden::kInitialKey);
  // XOR is self-inverse, so evolving twice with the same codeword is a no-op.
  CHECK(evolve_key(evolve_key(golden::kKey1, golden::kCodeword1), golden::kCodeword1) ==
        golden::kKey1);
}

TEST_CASE("encrypt_stream reproduces the golden vectors end to end") {
  const auto result = encrypt_stream(golden::kPlaintext, golden::kInitialKey);
  CHECK(result.stream.original_len == 92);
  REQUIRE(result.stream.chunk_count() == 2);
  CHECK(result.stream.codewords[0] == golden::kCodeword1);
  CHECK(result.stream.codewords[1] == golden::kCodeword2);
  REQUIRE(result.chain.size() == 3);
  CHECK(result.chain[0] == golden::kInitialKey);
  CHECK(result.chain[1] == golden::kKey1);
  CHECK(result.chain[2] == golden::kKey2);
}

TEST_CASE("encrypt_stream boundaries") {
  const auto empty = encrypt_stream("", golden::kInitialKey);
  CHECK(empty.stream.chunk_count() == 0);
  CHECK(empty.stream.original_len == 0);
  CHECK(empty.chain == KeyChain{golden::kInitialKey});

  const auto one = encrypt_stream(std::string(63, 'a'), golden::kInitialKey);
  CHECK(one.stream.chunk_count() == 1);
  CHECK(one.chain.size() == 2);
}

TEST_CASE("decrypt_stream recovers the golden plaintext") {
  CipherStream stream;
  stream.original_len = 92;
  stream.codewords = {golden::kCodeword1, golden::kCodeword2};

  const auto result = decrypt_stream(stream, golden::kInitialKey);
  REQUIRE(result.ok);
  CHECK(result.plaintext == golden::kPlaintext);
  REQUIRE(result.chain.size() == 3);
  CHECK(result.chain[1] == golden::kKey1);
  CHECK(result.chain[2] == golden::kKey2);
  for (const auto& report : result.reports) CHECK(report.corrected_count == 0);
}

TEST_CASE("decrypt_stream rejects a header inconsistent with the codeword count") {
  CipherStream stream;
  stream.original_len = 200;  // needs 4 chunks
  stream.codewords = {golden::kCodeword1, golden::kCodeword2};
  CHECK_THROWS_AS(decrypt_stream(stream, golden::kInitialKey), std::invalid_argument);
}

TEST_CASE("roundtrip for random plaintexts and keys, with padding stripped exactly") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t len = rng() % 300;
    const std::string plaintext = random_ascii(rng, len);
    const Key key = random_key63(rng);

    const auto enc = encrypt_stream(plaintext, key);
    const auto dec = decrypt_stream(enc.stream, key);
    REQUIRE(dec.ok);
    CHECK(dec.plaintext == plaintext);
    CHECK(dec.plaintext.size() == len);
    CHECK(dec.chain == enc.chain);
  }
}

TEST_CASE("roundtrip survives up to 32 symbol errors per codeword") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 15; ++trial) {
    const std::string plaintext = random_ascii(rng, 1 + rng() % 400);
    const Key key = random_key63(rng);
    const auto enc = encrypt_stream(plaintext, key);

    CipherStream noisy = enc.stream;
    for (std::size_t i = 0; i < noisy.chunk_count(); ++i) {
      const ChannelSpec spec{ExactCount{static_cast<unsigned>(rng() % (rs::kMaxErrors + 1))},
                             rng()};
      noisy.codewords[i] = inject_errors(noisy.codewords[i], spec).word;
    }

    const auto dec = decrypt_stream(noisy, key);
    REQUIRE(dec.ok);
    CHECK(dec.plaintext == plaintext);
    // Chain agreement: receiver reconstructs the sender's chain exactly.
    CHECK(dec.chain == enc.chain);
  }
}

TEST_CASE("a chunk beyond the correction radius fails loudly with its index") {
  std::mt19937 rng(404);
  const std::string plaintext = random_ascii(rng, 150);  // 3 chunks
  const Key key = random_key63(rng);
  auto enc = encrypt_stream(plaintext, key);

  // 40 errors in codeword 1; codewords 0 and 2 stay clean.
  const ChannelSpec spec{ExactCount{40}, 17};
  enc.stream.codewords[1] = inject_errors(enc.stream.codewords[1], spec).word;

  const auto dec = decrypt_stream(enc.stream, key);
  REQUIRE_FALSE(dec.ok);
  CHECK(dec.failed_chunk == 1);
  CHECK(dec.plaintext.empty());
  CHECK(dec.reports.size() == 2);  // stops at the failure
  CHECK_FALSE(dec.reports[1].success);
}

TEST_CASE("flipping one plaintext symbol changes the next key") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    std::string plaintext = random_ascii(rng, 70);
    const Key key = random_key63(rng);
    const auto base = encrypt_stream(plaintext, key);

    std::string altered = plaintext;
    const std::size_t pos = rng() % 63;  // inside chunk 0
    altered[pos] ^= 1;                   // stays < 128, always differs
    const auto changed = encrypt_stream(altered, key);

    // A valid codeword pair at distance >= 65 cannot agree on all parity:
    // the systematic parts differ in one symbol, so parity differs too.
    CHECK(changed.chain[1] != base.chain[1]);
  }
}

TEST_CASE("chain is recomputable from any prefix") {
  std::mt19937 rng(1618);
  const std::string plaintext = random_ascii(rng, 250);  // 4 chunks
  const Key key = random_key63(rng);
  const auto enc = encrypt_stream(plaintext, key);

  for (std::size_t start = 0; start + 1 < enc.chain.size(); ++start) {
    Key k = enc.chain[start];
    for (std::size_t i = start; i < enc.stream.chunk_count(); ++i) {
      k = evolve_key(k, enc.stream.codewords[i]);
      CHECK(k == enc.chain[i + 1]);
    }
  }
}

TEST_CASE("key chain statistics") {
  CHECK_THROWS_AS(key_chain_stats({}), std::invalid_argument);

  const auto single = key_chain_stats({golden::kInitialKey});
  CHECK(single.step_distances.empty());
  CHECK(single.distinct_keys == 1);

  // Distance counted directly from the two golden keys.
  const auto pair = key_chain_stats({golden::kInitialKey, golden::kKey1});
  REQUIRE(pair.step_distances.size() == 1);
  CHECK(pair.step_distances[0] == 62);
  CHECK(pair.distinct_keys == 2);

  const auto golden_chain =
      key_chain_stats({golden::kInitialKey, golden::kKey1, golden::kKey2});
  CHECK(golden_chain.step_distances == std::vector<std::size_t>{62, 61});
  CHECK(golden_chain.distinct_keys == 3);

  // A zero-parity codeword leaves the key unchanged: distance 0, key repeated.
  const auto repeated = key_chain_stats({golden::kKey1, golden::kKey1});
  CHECK(repeated.step_distances == std::vector<std::size_t>{0});
  CHECK(repeated.distinct_keys == 1);
}

}  // TEST_SUITE
