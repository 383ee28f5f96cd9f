#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "trs/cyclotomic.hpp"
#include "trs/field.hpp"
#include "trs/poly.hpp"

namespace trs {

// Additive character chi_a(x) = zeta_p^{Tr(ax)}, exact in Z[zeta_p].
CycInt additive_char(const Field& F, Fe a, Fe x);

// Multiplicative character value psi_i(x): zero flag plus the exponent e
// with value zeta_{q-1}^e.  psi_i(0) = 0 for i != 0 and psi_0(0) = 1.
struct MultVal {
  bool zero = false;
  std::uint32_t num = 0;  // exponent of zeta_{q-1}
};
MultVal mult_char(const Field& F, std::uint32_t i, Fe x);
std::complex<long double> mult_char_cx(const Field& F, std::uint32_t i, Fe x);

// Index of the quadratic character inside the psi_i family (odd q).
std::uint32_t quadratic_index(const Field& F);

// Gauss sum G(psi_i, chi_a) over the nonzero elements.  The exact overload
// requires psi trivial or quadratic; the complex overload takes any index.
CycInt gauss_sum(const Field& F, std::uint32_t psi_index, Fe a);
std::complex<long double> gauss_sum_cx(const Field& F, std::uint32_t psi_index, Fe a);

// Checks G(psi, chi_{ab}) == conj(psi(a)) * G(psi, chi_b); exact for the
// trivial and quadratic characters, complex with tolerance otherwise.
bool check_gauss_shift(const Field& F, std::uint32_t psi_index, Fe a, Fe b);

// Complete sum of chi_1(a c^n + b) over c, with d = gcd(n, q-1) and the
// verdict on |S| <= (d-1) sqrt(q).
struct PowerSumReport {
  CycInt sum;
  std::uint32_t d = 0;
  Abs2 abs2;
  bool bound_ok = false;
};
PowerSumReport weil_power_sum(const Field& F, Fe a, Fe b, std::uint32_t n);

// Complete sum of chi_b(a2 c^2 + a1 c + a0) over c together with the
// closed-form value it must equal: for odd q,
// chi_b(a0 - a1^2 (4 a2)^{-1}) pi(a2) G(pi, chi_b), and for even q,
// chi_b(a0) q when b a2 + b^2 a1^2 = 0 and 0 otherwise.
struct QuadSumReport {
  CycInt sum;
  CycInt closed;
  bool match = false;
};
QuadSumReport quad_complete_sum(const Field& F, Fe b, Fe a2, Fe a1, Fe a0);

// Number of distinct roots of f in its splitting field, computed by
// squarefree/wild-part bookkeeping without building extensions.
std::uint32_t distinct_root_count(const Field& F, Poly f);

// Whether monic f equals g^m for some monic g (brute-force enumeration,
// meant for the small degrees used here).
bool is_power_of_exponent(const Field& F, const Poly& f, std::uint32_t m);

// Complete sum of psi_i(a f(c)) over c for a nontrivial psi_i and monic f
// that is not an order(psi)-th power; d counts distinct roots of f.  The
// value is exact (a plain integer) for the quadratic character and complex
// otherwise.
struct MultPolySumReport {
  bool exact = false;
  long long exact_sum = 0;
  std::complex<long double> sum_cx;
  std::uint32_t d = 0;
  std::uint32_t psi_order = 0;
  bool bound_ok = false;
};
MultPolySumReport mult_char_poly_sum(const Field& F, std::uint32_t psi_index, Fe a,
                                     const Poly& f);

// Kloosterman sum K(chi; a, b) = sum over nonzero c of chi_1(ac + b/c),
// with the verdict on |K|^2 <= 4q and the exact Galois-trace consequence
// Tr(K conj(K)) <= (p-1) 4q.
struct KloostermanReport {
  CycInt value;
  Abs2 abs2;
  bool bound_ok = false;
  long long trace_norm = 0;
  bool trace_bound_ok = false;
};
KloostermanReport kloosterman(const Field& F, Fe a, Fe b);

// Exhaustive count of solutions of a1 X^2 + a2 Y^2 = b against the closed
// form q + v(b) pi(-a1 a2) with v(0) = q-1 and v(b) = -1 otherwise.
struct ConicReport {
  long long count = 0;
  long long predicted = 0;
  bool match = false;
};
ConicReport conic_count(const Field& F, Fe a1, Fe a2, Fe b);

// Bivariate polynomial as a coefficient grid c[i][j] on X^i Y^j.
struct Bivar {
  std::vector<std::vector<Fe>> c;
  Fe eval(const Field& F, Fe x, Fe y) const;
  int total_degree() const;
};

// Exact count of zeros of F(X, Y) over the full plane; total degree <= 4.
long long surface_count(const Field& F, const Bivar& f);

}  // namespace trs
