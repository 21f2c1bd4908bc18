#include "rskc/rs_codec.hpp"

#include <algorithm>

namespace rskc::rs {

const gf::Poly& generator_poly() {
  static const gf::Poly g = [] {
    gf::Poly acc{1};
    for (unsigned i = kFirstRoot; i < kFirstRoot + kParityLen; ++i) {
      acc = gf::mul(acc, gf::Poly{gf::pow(2, i), 1});  // (alpha^i + x)
    }
    return acc;
  }();
  return g;
}

Codeword encode(std::span<const GfElem, kK> message) {
  const gf::Poly& g = generator_poly();
  Codeword cw{};
  std::copy(message.begin(), message.end(), cw.begin());

  // Long division of m(x) * x^64 by g(x), in place over the descending
  // layout: after the loop, cw[63..126] holds the remainder and the
  // message part is restored verbatim (systematic form).
  for (std::size_t i = 0; i < kK; ++i) {
    const GfElem coef = cw[i];
    if (coef == 0) continue;
    for (std::size_t j = 1; j <= kParityLen; ++j) {
      cw[i + j] ^= gf::mul(coef, g[kParityLen - j]);
    }
  }
  std::copy(message.begin(), message.end(), cw.begin());
  return cw;
}

Syndromes syndromes(const Codeword& received) {
  Syndromes s{};
  for (std::size_t j = 0; j < kParityLen; ++j) {
    const GfElem x = gf::pow(2, kFirstRoot + j);
    GfElem acc = 0;
    for (const GfElem sym : received) {
      acc = gf::add(gf::mul(acc, x), sym);
    }
    s[j] = acc;
  }
  return s;
}

bool all_zero(const Syndromes& s) {
  return std::all_of(s.begin(), s.end(), [](GfElem v) { return v == 0; });
}

gf::Poly berlekamp_massey(const Syndromes& s) {
  gf::Poly lambda{1};
  gf::Poly prev{1};  // locator saved at the last length change
  unsigned len = 0;  // current LFSR length
  unsigned gap = 1;  // steps since the last length change
  GfElem prev_delta = 1;

  for (unsigned n = 0; n < kParityLen; ++n) {
    GfElem delta = s[n];
    for (unsigned i = 1; i <= len && i < lambda.size(); ++i) {
      delta ^= gf::mul(lambda[i], s[n - i]);
    }
    if (delta == 0) {
      ++gap;
      continue;
    }
    const GfElem scale = gf::mul(delta, gf::inv(prev_delta));
    const bool grow = 2 * len <= n;
    const gf::Poly saved = lambda;
    if (lambda.size() < prev.size() + gap) lambda.resize(prev.size() + gap, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      lambda[i + gap] ^= gf::mul(scale, prev[i]);
    }
    if (grow) {
      len = n + 1 - len;
      prev = saved;
      prev_delta = delta;
      gap = 1;
    } else {
      ++gap;
    }
  }
  gf::trim(lambda);
  return lambda;
}

std::optional<std::vector<std::uint8_t>> chien_search(const gf::Poly& locator) {
  const int deg = gf::degree(locator);
  if (deg < 0 || locator[0] != 1) return std::nullopt;

  std::vector<std::uint8_t> positions;
  for (unsigned l = 0; l < kN; ++l) {
    // A root alpha^-l marks an error term of degree l, i.e. index 126-l.
    if (gf::eval(locator, gf::pow(2, -static_cast<long long>(l))) == 0) {
      positions.push_back(static_cast<std::uint8_t>(kN - 1 - l));
    }
  }
  if (positions.size() != static_cast<std::size_t>(deg)) return std::nullopt;
  std::sort(positions.begin(), positions.end());
  return positions;
}

std::optional<std::vector<GfElem>> forney(const gf::Poly& locator, const Syndromes& s,
                                          std::span<const std::uint8_t> positions) {
  gf::Poly omega = gf::mul(gf::Poly(s.begin(), s.end()), locator);
  omega.resize(kParityLen);  // mod x^64

  // Formal derivative in characteristic 2: only odd-degree terms survive.
  gf::Poly deriv;
  if (locator.size() > 1) {
    deriv.assign(locator.size() - 1, 0);
    for (std::size_t i = 1; i < locator.size(); i += 2) {
      deriv[i - 1] = locator[i];
    }
  }

  std::vector<GfElem> magnitudes;
  magnitudes.reserve(positions.size());
  for (const std::uint8_t p : positions) {
    const auto degree_of_p = static_cast<long long>(kN - 1 - p);
    const GfElem root = gf::pow(2, -degree_of_p);  // the locator root for p
    const GfElem denom = gf::eval(deriv, root);
    if (denom == 0) return std::nullopt;
    // With kFirstRoot = 1 the usual X^(1-fcr) factor is 1.
    magnitudes.push_back(gf::mul(gf::eval(omega, root), gf::inv(denom)));
  }
  return magnitudes;
}

DecodeResult decode(const Codeword& received) {
  DecodeResult out;

  const Syndromes s = syndromes(received);
  if (all_zero(s)) {
    out.corrected = received;
    std::copy_n(received.begin(), kK, out.message.begin());
    out.report.success = true;
    return out;
  }

  const gf::Poly locator = berlekamp_massey(s);
  const int error_count = gf::degree(locator);
  if (error_count <= 0 || static_cast<unsigned>(error_count) > kMaxErrors) return out;

  const auto positions = chien_search(locator);
  if (!positions) return out;

  const auto magnitudes = forney(locator, s, *positions);
  if (!magnitudes) return out;

  Codeword fixed = received;
  for (std::size_t i = 0; i < positions->size(); ++i) {
    fixed[(*positions)[i]] ^= (*magnitudes)[i];
  }
  // Detection honesty: a claimed correction must yield a valid codeword.
  if (!all_zero(syndromes(fixed))) return out;

  out.corrected = fixed;
  std::copy_n(fixed.begin(), kK, out.message.begin());
  out.report.corrected_count = static_cast<unsigned>(positions->size());
  out.report.error_positions = *positions;
  out.report.success = true;
  return out;
}

}  // namespace rskc::rs
