#include "rskc/gf127.hpp"

namespace rskc::gf {

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i > 0; --i) {
    if (p[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

void trim(Poly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }

GfElem eval(const Poly& p, GfElem x) {
  GfElem acc = 0;
  for (std::size_t i = p.size(); i > 0; --i) {
    acc = add(mul(acc, x), p[i - 1]);
  }
  return acc;
}

Poly add(const Poly& p, const Poly& q) {
  Poly r(std::max(p.size(), q.size()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i] ^= q[i];
  return r;
}

Poly mul(const Poly& p, const Poly& q) {
  if (degree(p) < 0 || degree(q) < 0) return {};
  Poly r(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      r[i + j] ^= mul(p[i], q[j]);
    }
  }
  return r;
}

}  // namespace rskc::gf
