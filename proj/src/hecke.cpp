#include "jring/hecke.hpp"

namespace jring {

namespace {
const LaurentPoly& xi() {  // v - v^{-1}
  static const LaurentPoly x =
      LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
  return x;
}
}  // namespace

void hecke_add(HeckeVector& acc, ElementIndex w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

HeckeVector t_basis(ElementIndex w) {
  HeckeVector v;
  v.emplace(w, LaurentPoly::one());
  return v;
}

HeckeVector left_gen_mul(const CoxeterGroup& g, int s, const HeckeVector& vec) {
  HeckeVector out;
  for (const auto& [w, a] : vec) {
    ElementIndex sw = g.left(s, w);
    hecke_add(out, sw, a);
    if (g.length(sw) < g.length(w)) hecke_add(out, w, xi() * a);
  }
  return out;
}

HeckeVector right_gen_mul(const CoxeterGroup& g, const HeckeVector& vec, int s) {
  HeckeVector out;
  for (const auto& [w, a] : vec) {
    ElementIndex ws = g.right(w, s);
    hecke_add(out, ws, a);
    if (g.length(ws) < g.length(w)) hecke_add(out, w, xi() * a);
  }
  return out;
}

HeckeVector right_gen_inv_mul(const CoxeterGroup& g, const HeckeVector& vec, int s) {
  HeckeVector out = right_gen_mul(g, vec, s);
  for (const auto& [w, a] : vec) hecke_add(out, w, -(xi() * a));
  return out;
}

HeckeVector t_multiply(const CoxeterGroup& g, ElementIndex x, ElementIndex y) {
  HeckeVector acc = t_basis(y);
  auto wx = g.word(x);
  for (auto it = wx.rbegin(); it != wx.rend(); ++it)
    acc = left_gen_mul(g, *it, acc);
  return acc;
}

LaurentPoly f_rescaled(const CoxeterGroup& g, ElementIndex x, ElementIndex y,
                       ElementIndex z, const LaurentPoly& f) {
  return f.shifted(g.length(x) + g.length(y) - g.length(z));
}

HeckeVector hecke_bar(const CoxeterGroup& g, const HeckeVector& vec) {
  HeckeVector out;
  for (const auto& [w, a] : vec) {
    HeckeVector barTw = t_basis(g.identity());
    for (int s : g.word(w)) barTw = right_gen_inv_mul(g, barTw, s);
    LaurentPoly abar = a.bar();
    for (const auto& [u, c] : barTw) hecke_add(out, u, abar * c);
  }
  return out;
}

}  // namespace jring
