#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rskc/rs_codec.hpp"

namespace rskc {

// Seeded symbol-error channel. Same seed and inputs produce byte-identical
// output; the generator is mt19937_64 with hand-rolled rejection sampling so
// the contract does not depend on implementation-defined std distributions.

struct ExactCount {
  unsigned errors = 0;  // distinct corrupted positions per codeword, <= 127
};

struct SymbolProb {
  double prob = 0.0;  // independent corruption probability per symbol
};

using ErrorModel = std::variant<ExactCount, SymbolProb>;

struct ChannelSpec {
  ErrorModel model;
  std::uint64_t seed = 0;
};

struct CorruptionResult {
  rs::Codeword word{};
  std::vector<std::uint8_t> positions;  // ascending corrupted indices
};

// Corrupted positions receive a uniformly random nonzero XOR delta, so every
// listed position really changes. Throws std::invalid_argument on an
// out-of-range parameter.
CorruptionResult inject_errors(const rs::Codeword& cw, const ChannelSpec& spec);

// Stable sub-seed for codeword `index` of a stream corrupted under `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct SweepRow {
  unsigned error_count = 0;
  unsigned trials = 0;
  unsigned decode_failures = 0;
  unsigned miscorrections = 0;  // decoder claimed success but message differed
};

// Empirical decode-failure rates over seeded trials of random message
// blocks, one row per requested error count. Counts <= 32 must show zero
// failures; beyond that the numbers are observations, not guarantees.
std::vector<SweepRow> sweep_decode_failure_rate(std::span<const unsigned> error_counts,
                                                unsigned trials, std::uint64_t seed);

}  // namespace rskc
