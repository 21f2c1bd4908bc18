#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rskc {

// A symbol of GF(2^7): 7 bits, value always < 128.
// Addition is XOR; multiplication is carry-less multiplication reduced by
// the primitive polynomial x^7 + x^3 + 1 (137 decimal).
using GfElem = std::uint8_t;

inline constexpr unsigned kFieldSize = 128;
inline constexpr unsigned kGroupOrder = 127;  // order of the multiplicative group (prime)
inline constexpr unsigned kPrimPoly = 0x89;   // x^7 + x^3 + 1

namespace gf {

// exp/log tables for the generator alpha = 2 (the polynomial x).
// exp holds two periods so exp[log a + log b] needs no index wraparound.
// log is indexed by element value; log[0] is meaningless and never read.
struct Tables {
  std::array<GfElem, 2 * kGroupOrder> exp{};
  std::array<std::uint8_t, kFieldSize> log{};
};

constexpr Tables build_tables() {
  Tables t;
  unsigned x = 1;
  for (unsigned i = 0; i < kGroupOrder; ++i) {
    t.exp[i] = static_cast<GfElem>(x);
    t.exp[i + kGroupOrder] = static_cast<GfElem>(x);
    t.log[x] = static_cast<std::uint8_t>(i);
    x <<= 1;
    if (x & kFieldSize) x ^= kPrimPoly;
  }
  return t;
}

inline constexpr Tables kTables = build_tables();

constexpr GfElem add(GfElem a, GfElem b) { return a ^ b; }  // subtraction too

constexpr GfElem mul(GfElem a, GfElem b) {
  if (a == 0 || b == 0) return 0;
  return kTables.exp[static_cast<std::size_t>(kTables.log[a]) + kTables.log[b]];
}

inline GfElem inv(GfElem a) {
  if (a == 0) throw std::domain_error("gf: no inverse of zero");
  return kTables.exp[kGroupOrder - kTables.log[a]];
}

// a^e, with negative e meaning inverse powers. Exponents reduce mod 127:
// a^127 = 1 and a^128 = a for every nonzero a, hence a^126 = inv(a).
inline GfElem pow(GfElem a, long long e) {
  if (a == 0) {
    if (e < 0) throw std::domain_error("gf: zero to a negative power");
    return e == 0 ? GfElem{1} : GfElem{0};
  }
  constexpr long long order = kGroupOrder;
  long long r = (e % order) * kTables.log[a] % order;
  if (r < 0) r += order;
  return kTables.exp[static_cast<std::size_t>(r)];
}

// Polynomials over GF(2^7); coefficient index = degree (p[0] is the constant
// term). Trailing zero coefficients are tolerated everywhere; degree() skips
// them and returns -1 for the zero polynomial.
using Poly = std::vector<GfElem>;

int degree(const Poly& p);
void trim(Poly& p);

GfElem eval(const Poly& p, GfElem x);  // Horner's rule

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

}  // namespace gf
}  // namespace rskc
