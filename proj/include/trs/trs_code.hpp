#pragma once

#include <cstdint>
#include <vector>

#include "trs/code.hpp"
#include "trs/field.hpp"
#include "trs/poly.hpp"

namespace trs {

// Parameters of the twisted evaluation code: messages are polynomials
// sum_{i != l, i < k} a_i x^i + a_l (x^l + eta x^k) evaluated on the
// ordered set A.
struct TrsParams {
  const Field* F = nullptr;
  std::vector<Fe> A;  // pairwise distinct, kept in the given order
  std::uint32_t k = 0, l = 0;
  Fe eta = 0;

  std::uint32_t n() const { return std::uint32_t(A.size()); }
  // Subset size of the syndrome criterion.
  std::uint32_t r() const { return n() - k - 1; }
};

// Validates 0 <= l <= k-1 <= n-2, eta != 0, distinct A.
TrsParams make_trs_params(const Field& F, std::vector<Fe> A, std::uint32_t k,
                          std::uint32_t l, Fe eta);

// Evaluation sets in canonical element order.
std::vector<Fe> full_eval_set(const Field& F);
std::vector<Fe> unit_eval_set(const Field& F);

// The message polynomial of a coefficient tuple (a_0..a_{k-1}); its x^k
// coefficient always equals eta times its x^l coefficient.
Poly twist_poly(const TrsParams& P, const std::vector<Fe>& msg);

// Generator rows: evaluations of x^0..x^{l-1}, x^{l+1}..x^{k-1}, then the
// twisted monomial x^l + eta x^k.
Mat trs_generator(const TrsParams& P);

// Plain Reed-Solomon generator: rows x^0..x^{dim-1} evaluated on A.
Mat rs_generator(const Field& F, const std::vector<Fe>& A, std::uint32_t dim);

// Closed-form parity check: rows u_i alpha_i^t for t = 0..n-k-2 and a last
// row u_i f(alpha_i), with u_i the inverse derivative of prod(x - alpha) at
// alpha_i and f(x) = x^(n-k-1) (1 - eta sum_j sigma_j x^(k-l-j)).
Mat trs_parity(const TrsParams& P);

// Both matrices wrapped with rank/duality validation.
LinearCode trs_code(const TrsParams& P);

Word trs_encode(const TrsParams& P, const std::vector<Fe>& msg);
bool trs_contains(const TrsParams& P, const Word& u);
std::vector<Fe> trs_syndrome(const TrsParams& P, const Word& u);

// sigma_0..sigma_n of prod over A of (x - alpha).
std::vector<Fe> trs_sigma(const TrsParams& P);
// Lambda sequence of that sigma, up to index tmax.
std::vector<Fe> trs_lambda(const TrsParams& P, std::size_t tmax);
// The weights u_i.
std::vector<Fe> trs_u(const TrsParams& P);
// The polynomial f appearing in the last parity-check row.
Poly trs_f(const TrsParams& P);

}  // namespace trs
