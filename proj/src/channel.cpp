#include "rskc/channel.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rskc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Unbiased draw in [0, n) by rejection; mt19937_64 output is pinned by the
// standard, so the whole sequence is reproducible across platforms.
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

GfElem nonzero_delta(std::mt19937_64& rng) {
  return static_cast<GfElem>(1 + uniform_below(rng, kGroupOrder));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 1));
}

CorruptionResult inject_errors(const rs::Codeword& cw, const ChannelSpec& spec) {
  CorruptionResult out;
  out.word = cw;
  std::mt19937_64 rng(spec.seed);

  if (const auto* exact = std::get_if<ExactCount>(&spec.model)) {
    if (exact->errors > rs::kN) {
      throw std::invalid_argument("channel: more error positions than codeword symbols");
    }
    // Partial Fisher-Yates: the first `errors` slots end up holding the
    // chosen distinct positions.
    std::array<std::uint8_t, rs::kN> idx{};
    std::iota(idx.begin(), idx.end(), static_cast<std::uint8_t>(0));
    for (unsigned i = 0; i < exact->errors; ++i) {
      const std::size_t j = i + uniform_below(rng, rs::kN - i);
      std::swap(idx[i], idx[j]);
      out.positions.push_back(idx[i]);
    }
    std::sort(out.positions.begin(), out.positions.end());
    for (const std::uint8_t p : out.positions) {
      out.word[p] ^= nonzero_delta(rng);
    }
  } else {
    const double prob = std::get<SymbolProb>(spec.model).prob;
    if (prob < 0.0 || prob > 1.0) {
      throw std::invalid_argument("channel: symbol error probability outside [0, 1]");
    }
    for (unsigned p = 0; p < rs::kN; ++p) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
      if (u < prob) {
        out.word[p] ^= nonzero_delta(rng);
        out.positions.push_back(static_cast<std::uint8_t>(p));
      }
    }
  }
  return out;
}

std::vector<SweepRow> sweep_decode_failure_rate(std::span<const unsigned> error_counts,
                                                unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("channel: sweep needs at least one trial");

  std::vector<SweepRow> rows;
  rows.reserve(error_counts.size());
  for (const unsigned count : error_counts) {
    SweepRow row;
    row.error_count = count;
    row.trials = trials;
    const std::uint64_t count_seed = derive_seed(seed, count);
    for (unsigned t = 0; t < trials; ++t) {
      const std::uint64_t trial_seed = derive_seed(count_seed, t);
      std::mt19937_64 rng(trial_seed);
      rs::Block message;
      for (auto& sym : message) sym = static_cast<GfElem>(uniform_below(rng, kFieldSize));

      const auto corrupted =
          inject_errors(rs::encode(message), {ExactCount{count}, derive_seed(trial_seed, 1)});
      const auto decoded = rs::decode(corrupted.word);
      if (!decoded.ok()) {
        ++row.decode_failures;
      } else if (decoded.message != message) {
        ++row.miscorrections;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rskc
