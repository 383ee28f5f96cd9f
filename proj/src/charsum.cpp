#include "trs/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace trs {
namespace {

constexpr long double tau = 2.0L * 3.14159265358979323846264338327950288L;
constexpr long double cx_tol = 1e-9L;

std::complex<long double> unit_root(std::uint32_t order, std::uint64_t e) {
  long double a = tau * (long double)(e % order) / (long double)order;
  return {std::cos(a), std::sin(a)};
}

bool cx_close(std::complex<long double> a, std::complex<long double> b) {
  return std::abs(a - b) <= cx_tol;
}

}  // namespace

CycInt additive_char(const Field& F, Fe a, Fe x) {
  return CycInt::root_pow(F.p(), F.trace_int(F.mul(a, x)));
}

MultVal mult_char(const Field& F, std::uint32_t i, Fe x) {
  MultVal v;
  if (x == 0) {
    v.zero = i != 0;
    return v;
  }
  v.num = std::uint32_t(std::uint64_t(i) * F.dlog(x) % (F.q() - 1));
  return v;
}

std::complex<long double> mult_char_cx(const Field& F, std::uint32_t i, Fe x) {
  MultVal v = mult_char(F, i, x);
  if (v.zero) return 0;
  return unit_root(F.q() - 1, v.num);
}

std::uint32_t quadratic_index(const Field& F) {
  if (!F.odd()) throw std::invalid_argument("quadratic character needs odd q");
  return (F.q() - 1) / 2;
}

CycInt gauss_sum(const Field& F, std::uint32_t psi_index, Fe a) {
  bool trivial = psi_index % (F.q() - 1) == 0;
  bool quadratic = F.odd() && psi_index == quadratic_index(F);
  if (!trivial && !quadratic)
    throw std::invalid_argument("exact Gauss sums cover only the trivial and quadratic characters");
  CycInt acc(F.p());
  for (Fe x = 1; x < F.q(); ++x) {
    CycInt term = additive_char(F, a, x);
    if (quadratic && F.quadratic_character(x) < 0)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

std::complex<long double> gauss_sum_cx(const Field& F, std::uint32_t psi_index, Fe a) {
  std::complex<long double> acc = 0;
  for (Fe x = 1; x < F.q(); ++x)
    acc += mult_char_cx(F, psi_index, x) * additive_char(F, a, x).to_complex();
  return acc;
}

bool check_gauss_shift(const Field& F, std::uint32_t psi_index, Fe a, Fe b) {
  if (a == 0) throw std::invalid_argument("shift element must be nonzero");
  bool trivial = psi_index % (F.q() - 1) == 0;
  bool quadratic = F.odd() && psi_index == (F.q() - 1) / 2;
  if (trivial || quadratic) {
    CycInt lhs = gauss_sum(F, psi_index, F.mul(a, b));
    CycInt rhs = gauss_sum(F, psi_index, b);
    if (quadratic && F.quadratic_character(a) < 0) rhs = -rhs;
    return lhs == rhs;
  }
  std::complex<long double> lhs = gauss_sum_cx(F, psi_index, F.mul(a, b));
  std::complex<long double> rhs =
      std::conj(mult_char_cx(F, psi_index, a)) * gauss_sum_cx(F, psi_index, b);
  return cx_close(lhs, rhs);
}

PowerSumReport weil_power_sum(const Field& F, Fe a, Fe b, std::uint32_t n) {
  if (a == 0) throw std::invalid_argument("leading coefficient must be nonzero");
  if (n == 0) throw std::invalid_argument("exponent must be positive");
  PowerSumReport rep{CycInt(F.p()), 0, {}, false};
  for (Fe c = 0; c < F.q(); ++c)
    rep.sum += additive_char(F, 1, F.add(F.mul(a, F.pow(c, n)), b));
  rep.d = std::uint32_t(std::gcd(std::uint64_t(n), std::uint64_t(F.q() - 1)));
  rep.abs2 = abs_square(rep.sum);
  rep.bound_ok = rep.abs2.at_most((long long)(rep.d - 1) * (rep.d - 1) * F.q());
  return rep;
}

QuadSumReport quad_complete_sum(const Field& F, Fe b, Fe a2, Fe a1, Fe a0) {
  if (a2 == 0) throw std::invalid_argument("quadratic coefficient must be nonzero");
  if (b == 0) throw std::invalid_argument("the twisting character must be nontrivial");
  QuadSumReport rep{CycInt(F.p()), CycInt(F.p()), false};
  for (Fe c = 0; c < F.q(); ++c) {
    Fe v = F.add(F.mul(a2, F.mul(c, c)), F.add(F.mul(a1, c), a0));
    rep.sum += additive_char(F, b, v);
  }
  if (F.odd()) {
    Fe four = F.from_code(4 % F.p());
    Fe shift = F.sub(a0, F.div(F.mul(a1, a1), F.mul(four, a2)));
    CycInt g = gauss_sum(F, quadratic_index(F), b);
    if (F.quadratic_character(a2) < 0) g = -g;
    rep.closed = additive_char(F, b, shift) * g;
  } else {
    Fe cond = F.add(F.mul(b, a2), F.mul(F.mul(b, b), F.mul(a1, a1)));
    if (cond == 0)
      rep.closed = additive_char(F, b, a0).scaled(F.q());
    // otherwise the closed form is the zero already present
  }
  rep.match = rep.sum == rep.closed;
  return rep;
}

std::uint32_t distinct_root_count(const Field& F, Poly f) {
  poly_trim(f);
  if (poly_deg(f) <= 0) return 0;
  f = poly_monic(F, f);
  Poly fp = poly_derivative(F, f);
  if (fp.empty()) {
    // f = h(x^p); take p-th roots of the coefficients (c -> c^(q/p))
    Poly h;
    for (std::size_t i = 0; i < f.size(); i += F.p())
      h.push_back(F.pow(f[i], F.q() / F.p()));
    return distinct_root_count(F, h);
  }
  Poly t = poly_gcd(F, f, fp);
  Poly s = poly_divmod(F, f, t).first;  // distinct tame factors, each once
  // Remove every factor shared with s from t; what survives is a pure
  // p-th power carrying the wild factors.
  Poly w = t;
  for (;;) {
    Poly g = poly_gcd(F, w, s);
    if (poly_deg(g) <= 0) break;
    w = poly_divmod(F, w, g).first;
  }
  return std::uint32_t(poly_deg(s)) + distinct_root_count(F, w);
}

bool is_power_of_exponent(const Field& F, const Poly& f, std::uint32_t m) {
  int df = poly_deg(f);
  if (m == 0) throw std::invalid_argument("exponent must be positive");
  if (m == 1) return true;
  if (df < 0) return true;
  if (df % m != 0) return false;
  std::uint32_t dg = std::uint32_t(df) / m;
  // enumerate monic g of degree dg
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < dg; ++i) total *= F.q();
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly g(dg + 1, 0);
    std::uint64_t t = code;
    for (std::uint32_t i = 0; i < dg; ++i) {
      g[i] = Fe(t % F.q());
      t /= F.q();
    }
    g[dg] = 1;
    Poly pw{1};
    for (std::uint32_t i = 0; i < m; ++i) pw = poly_mul(F, pw, g);
    if (pw == poly_monic(F, f)) return true;
  }
  return false;
}

MultPolySumReport mult_char_poly_sum(const Field& F, std::uint32_t psi_index, Fe a,
                                     const Poly& f) {
  std::uint32_t i = psi_index % (F.q() - 1);
  if (i == 0) throw std::invalid_argument("character must be nontrivial");
  if (f.empty() || f.back() != 1) throw std::invalid_argument("polynomial must be monic");
  MultPolySumReport rep;
  rep.psi_order = (F.q() - 1) / std::uint32_t(std::gcd(std::uint64_t(i), std::uint64_t(F.q() - 1)));
  if (is_power_of_exponent(F, f, rep.psi_order))
    throw std::invalid_argument("polynomial is a perfect power of the character order");
  rep.d = distinct_root_count(F, f);
  bool quadratic = F.odd() && i == quadratic_index(F);
  long long bound2 = (long long)(rep.d - 1) * (rep.d - 1) * F.q();
  if (quadratic) {
    rep.exact = true;
    long long s = 0;
    for (Fe c = 0; c < F.q(); ++c)
      s += F.quadratic_character(F.mul(a, poly_eval(F, f, c)));
    rep.exact_sum = s;
    rep.sum_cx = (long double)s;
    rep.bound_ok = s * s <= bound2;
  } else {
    std::complex<long double> s = 0;
    for (Fe c = 0; c < F.q(); ++c) s += mult_char_cx(F, i, F.mul(a, poly_eval(F, f, c)));
    rep.sum_cx = s;
    rep.bound_ok = std::norm(s) <= (long double)bound2 + cx_tol;
  }
  return rep;
}

KloostermanReport kloosterman(const Field& F, Fe a, Fe b) {
  if (a == 0 && b == 0) throw std::invalid_argument("Kloosterman sum needs (a, b) != (0, 0)");
  KloostermanReport rep{CycInt(F.p()), {}, false, 0, false};
  for (Fe c = 1; c < F.q(); ++c)
    rep.value += additive_char(F, 1, F.add(F.mul(a, c), F.mul(b, F.inv(c))));
  rep.abs2 = abs_square(rep.value);
  rep.bound_ok = rep.abs2.at_most(4LL * F.q());
  rep.trace_norm = (rep.value * rep.value.conj()).galois_trace();
  rep.trace_bound_ok = rep.trace_norm <= (long long)(F.p() - 1) * 4 * F.q();
  return rep;
}

ConicReport conic_count(const Field& F, Fe a1, Fe a2, Fe b) {
  if (!F.odd()) throw std::invalid_argument("conic counts need odd q");
  if (a1 == 0 || a2 == 0) throw std::invalid_argument("conic coefficients must be nonzero");
  ConicReport rep;
  for (Fe x = 0; x < F.q(); ++x)
    for (Fe y = 0; y < F.q(); ++y) {
      Fe v = F.add(F.mul(a1, F.mul(x, x)), F.mul(a2, F.mul(y, y)));
      if (v == b) ++rep.count;
    }
  long long vb = b == 0 ? (long long)F.q() - 1 : -1;
  rep.predicted = F.q() + vb * F.quadratic_character(F.neg(F.mul(a1, a2)));
  rep.match = rep.count == rep.predicted;
  return rep;
}

Fe Bivar::eval(const Field& F, Fe x, Fe y) const {
  Fe acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Fe row = 0;
    for (std::size_t j = c[i].size(); j-- > 0;) row = F.add(F.mul(row, y), c[i][j]);
    acc = F.add(acc, F.mul(row, F.pow(x, (long long)i)));
  }
  return acc;
}

int Bivar::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j] != 0) d = std::max(d, int(i + j));
  return d;
}

long long surface_count(const Field& F, const Bivar& f) {
  if (f.total_degree() > 4)
    throw std::invalid_argument("surface counts are limited to total degree 4");
  long long n = 0;
  for (Fe x = 0; x < F.q(); ++x)
    for (Fe y = 0; y < F.q(); ++y)
      if (f.eval(F, x, y) == 0) ++n;
  return n;
}

}  // namespace trs
