#include "trs/trs_code.hpp"

#include <stdexcept>

#include "trs/sym.hpp"

namespace trs {

TrsParams make_trs_params(const Field& F, std::vector<Fe> A, std::uint32_t k,
                          std::uint32_t l, Fe eta) {
  TrsParams P;
  P.F = &F;
  P.A = std::move(A);
  P.k = k;
  P.l = l;
  P.eta = eta;
  std::uint32_t n = P.n();
  if (n < 2 || n > F.q()) throw std::invalid_argument("evaluation set size out of range");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (P.A[i] == P.A[j]) throw std::invalid_argument("evaluation points must be distinct");
  if (k == 0 || k + 1 > n) throw std::invalid_argument("dimension must satisfy 1 <= k <= n-1");
  if (l >= k) throw std::invalid_argument("twist position must satisfy 0 <= l <= k-1");
  if (eta == 0) throw std::invalid_argument("twist coefficient must be nonzero");
  return P;
}

std::vector<Fe> full_eval_set(const Field& F) {
  std::vector<Fe> A(F.q());
  for (Fe x = 0; x < F.q(); ++x) A[x] = x;
  return A;
}

std::vector<Fe> unit_eval_set(const Field& F) {
  std::vector<Fe> A(F.q() - 1);
  for (Fe x = 1; x < F.q(); ++x) A[x - 1] = x;
  return A;
}

Poly twist_poly(const TrsParams& P, const std::vector<Fe>& msg) {
  if (msg.size() != P.k) throw std::invalid_argument("message length mismatch");
  const Field& F = *P.F;
  Poly f(P.k + 1, 0);
  for (std::uint32_t i = 0; i < P.k; ++i) f[i] = msg[i];
  f[P.k] = F.mul(P.eta, msg[P.l]);
  poly_trim(f);
  return f;
}

Mat trs_generator(const TrsParams& P) {
  const Field& F = *P.F;
  std::uint32_t n = P.n();
  Mat G(P.k, n);
  std::uint32_t row = 0;
  for (std::uint32_t i = 0; i < P.k; ++i) {
    if (i == P.l) continue;
    for (std::uint32_t j = 0; j < n; ++j) G.at(row, j) = F.pow(P.A[j], i);
    ++row;
  }
  for (std::uint32_t j = 0; j < n; ++j)
    G.at(row, j) = F.add(F.pow(P.A[j], P.l), F.mul(P.eta, F.pow(P.A[j], P.k)));
  return G;
}

Mat rs_generator(const Field& F, const std::vector<Fe>& A, std::uint32_t dim) {
  std::uint32_t n = std::uint32_t(A.size());
  if (dim == 0 || dim > n) throw std::invalid_argument("dimension must satisfy 1 <= dim <= n");
  Mat G(dim, n);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < n; ++j) G.at(i, j) = F.pow(A[j], i);
  return G;
}

std::vector<Fe> trs_sigma(const TrsParams& P) { return sigma_seq(*P.F, P.A); }

std::vector<Fe> trs_lambda(const TrsParams& P, std::size_t tmax) {
  return lambda_from_sigma(*P.F, trs_sigma(P), tmax);
}

std::vector<Fe> trs_u(const TrsParams& P) {
  const Field& F = *P.F;
  Poly g = sigma_from_roots(F, P.A);
  Poly gp = poly_derivative(F, g);
  std::vector<Fe> u(P.n());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = F.inv(poly_eval(F, gp, P.A[i]));
  return u;
}

Poly trs_f(const TrsParams& P) {
  const Field& F = *P.F;
  std::vector<Fe> sigma = trs_sigma(P);
  std::uint32_t d = P.k - P.l;
  // inner = 1 - eta * sum_{j=0..d} sigma_j x^(d-j)
  Poly inner(d + 1, 0);
  for (std::uint32_t j = 0; j <= d; ++j)
    inner[d - j] = F.neg(F.mul(P.eta, sigma[j]));
  inner[0] = F.add(inner[0], 1);
  poly_trim(inner);
  // shift by x^(n-k-1)
  std::uint32_t shift = P.r();
  Poly f(shift, 0);
  f.insert(f.end(), inner.begin(), inner.end());
  poly_trim(f);
  return f;
}

Mat trs_parity(const TrsParams& P) {
  const Field& F = *P.F;
  std::uint32_t n = P.n(), rows = n - P.k;
  std::vector<Fe> u = trs_u(P);
  Poly f = trs_f(P);
  Mat H(rows, n);
  for (std::uint32_t t = 0; t + 1 < rows; ++t)
    for (std::uint32_t j = 0; j < n; ++j) H.at(t, j) = F.mul(u[j], F.pow(P.A[j], t));
  for (std::uint32_t j = 0; j < n; ++j)
    H.at(rows - 1, j) = F.mul(u[j], poly_eval(F, f, P.A[j]));
  return H;
}

LinearCode trs_code(const TrsParams& P) {
  return make_linear_code(*P.F, trs_generator(P), trs_parity(P));
}

Word trs_encode(const TrsParams& P, const std::vector<Fe>& msg) {
  const Field& F = *P.F;
  Poly f = twist_poly(P, msg);
  Word w(P.n());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = poly_eval(F, f, P.A[j]);
  return w;
}

std::vector<Fe> trs_syndrome(const TrsParams& P, const Word& u) {
  const Field& F = *P.F;
  if (u.size() != P.n()) throw std::invalid_argument("word length mismatch");
  Mat H = trs_parity(P);
  std::vector<Fe> s(H.rows, 0);
  for (std::size_t i = 0; i < H.rows; ++i) {
    Fe acc = 0;
    for (std::size_t j = 0; j < H.cols; ++j) acc = F.add(acc, F.mul(H.at(i, j), u[j]));
    s[i] = acc;
  }
  return s;
}

bool trs_contains(const TrsParams& P, const Word& u) {
  std::vector<Fe> s = trs_syndrome(P, u);
  for (Fe v : s)
    if (v != 0) return false;
  return true;
}

}  // namespace trs
