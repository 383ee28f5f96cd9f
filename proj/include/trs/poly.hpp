#pragma once

#include <stdexcept>
#include <vector>

#include "trs/field.hpp"

namespace trs {

// Dense univariate polynomial over a Field: coefficients low degree first,
// kept trimmed (no trailing zeros).  The zero polynomial is the empty
// vector and has degree -1.
using Poly = std::vector<Fe>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int poly_deg(const Poly& f) { return int(f.size()) - 1; }

inline Fe poly_coeff(const Poly& f, std::size_t i) { return i < f.size() ? f[i] : 0; }

inline Fe poly_eval(const Field& F, const Poly& f, Fe x) {
  Fe acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

inline Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(poly_coeff(a, i), poly_coeff(b, i));
  poly_trim(r);
  return r;
}

inline Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(poly_coeff(a, i), poly_coeff(b, i));
  poly_trim(r);
  return r;
}

inline Poly poly_scale(const Field& F, const Poly& a, Fe s) {
  if (s == 0) return {};
  Poly r = a;
  for (auto& c : r) c = F.mul(c, s);
  return r;
}

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

// Quotient and remainder; the divisor may have any nonzero leading
// coefficient.
inline std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  Fe lead_inv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    Fe c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    poly_trim(a);
  }
  poly_trim(q);
  return {q, a};
}

inline Poly poly_monic(const Field& F, Poly f) {
  poly_trim(f);
  if (!f.empty() && f.back() != 1) f = poly_scale(F, f, F.inv(f.back()));
  return f;
}

inline Poly poly_gcd(const Field& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

inline Poly poly_derivative(const Field& F, const Poly& f) {
  Poly r;
  for (std::size_t i = 1; i < f.size(); ++i) {
    // multiply by the integer i, i.e. by the field image of i mod p
    Fe im = F.from_code(i % F.p());
    r.push_back(F.mul(f[i], im));
  }
  poly_trim(r);
  return r;
}

}  // namespace trs
