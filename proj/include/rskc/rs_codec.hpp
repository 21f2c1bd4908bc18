#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rskc/gf127.hpp"

namespace rskc::rs {

// Systematic Reed-Solomon (127, 63) over GF(2^7): 63 message symbols,
// 64 parity symbols, minimum distance 65, corrects up to 32 symbol errors.
inline constexpr std::size_t kN = 127;
inline constexpr std::size_t kK = 63;
inline constexpr std::size_t kParityLen = kN - kK;
inline constexpr unsigned kMaxErrors = 32;

// Generator roots are alpha^1 .. alpha^64 and codeword index i carries the
// coefficient of x^(126-i), i.e. the first symbol is the highest-degree term.
// Both choices are pinned by golden encoder vectors; changing either breaks
// parity compatibility.
inline constexpr unsigned kFirstRoot = 1;

using Block = std::array<GfElem, kK>;
using Codeword = std::array<GfElem, kN>;
using Syndromes = std::array<GfElem, kParityLen>;

// g(x) = prod_{i=1..64} (x + alpha^i); monic, degree 64. Built once.
const gf::Poly& generator_poly();

// Layout: [message | parity]. Every codeword returned here has all-zero
// syndromes.
Codeword encode(std::span<const GfElem, kK> message);

// S_j = r(alpha^(kFirstRoot+j)) for j = 0..63; all zero iff r is a codeword.
Syndromes syndromes(const Codeword& received);
bool all_zero(const Syndromes& s);

// Minimal LFSR (error locator) polynomial of the syndrome sequence.
// Lambda(0) = 1; its degree is the number of errors when that count <= 32.
gf::Poly berlekamp_massey(const Syndromes& s);

// Codeword indices flagged by the locator's roots, ascending. nullopt when
// the root count disagrees with the locator degree (uncorrectable word).
std::optional<std::vector<std::uint8_t>> chien_search(const gf::Poly& locator);

// Error magnitudes aligned with positions, via the evaluator polynomial
// Omega = S * Lambda mod x^64 and the locator's formal derivative. nullopt
// when the derivative vanishes at a root.
std::optional<std::vector<GfElem>> forney(const gf::Poly& locator, const Syndromes& s,
                                          std::span<const std::uint8_t> positions);

struct DecodeReport {
  unsigned corrected_count = 0;
  std::vector<std::uint8_t> error_positions;  // ascending codeword indices
  bool success = false;
};

struct DecodeResult {
  Block message{};     // meaningful only on success
  Codeword corrected{};
  DecodeReport report;

  bool ok() const { return report.success; }
};

// Bounded-distance decode. Failure is a result, not an exception; on failure
// the report is empty (count 0, no positions). A success is only ever
// reported after re-verifying that the corrected word has all-zero syndromes,
// so miscorrection beyond 32 errors can produce a wrong-but-valid codeword
// but never an invalid one.
DecodeResult decode(const Codeword& received);

}  // namespace rskc::rs
