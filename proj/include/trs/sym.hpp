#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "trs/field.hpp"
#include "trs/poly.hpp"

namespace trs {

// Elementary symmetric values S_0..S_n of the given elements.
std::vector<Fe> elementary_symmetric(const Field& F, const std::vector<Fe>& xs);

// Expanded product prod(x - root), low degree first; roots must be
// pairwise distinct.
Poly sigma_from_roots(const Field& F, const std::vector<Fe>& roots);

// Signed coefficients sigma_0..sigma_n with prod(x - root) =
// sum_j sigma_j x^(n-j), i.e. sigma_j = (-1)^j S_j.
std::vector<Fe> sigma_seq(const Field& F, const std::vector<Fe>& roots);

// Forward substitution for the unit lower-triangular system
// Lambda_0 = 1, Lambda_t = -sum_{i=1..t} sigma_i Lambda_{t-i}, with
// sigma_i = 0 past the end of the given sequence.
std::vector<Fe> lambda_from_sigma(const Field& F, const std::vector<Fe>& sigma,
                                  std::size_t tmax);

// Generalized Vandermonde identity: lhs = det(x_j^{t_i}) over the given
// strictly increasing exponents (t_1 = 0 and t_s = m-1 for the partition of
// {0..m-1} they induce); rhs = prod_{i<j}(x_j - x_i) times the determinant
// of the complementary elementary-symmetric minor.
std::pair<Fe, Fe> gen_vandermonde_det(const Field& F, const std::vector<Fe>& xs,
                                      const std::vector<std::uint32_t>& exponents);

// Unique polynomial of degree < #points through the given (x, y) pairs.
Poly lagrange_interpolate(const Field& F,
                          const std::vector<std::pair<Fe, Fe>>& points);

// Incremental elementary-symmetric table over a stack of elements.  Column
// j holds S_0..S_cap of the first j pushed elements, so pushing or popping
// one element costs O(cap).  Subset scans keep a shared stack and only
// replace the columns whose elements changed.
class SymStack {
public:
  SymStack(const Field& F, std::size_t cap);

  void push(Fe x);
  void pop();
  void clear();
  std::size_t depth() const { return xs_.size(); }
  Fe element(std::size_t pos) const { return xs_[pos]; }

  // S_i over the first j pushed elements (j defaults to the full stack).
  Fe S_at(std::size_t i, std::size_t j) const;
  Fe S_top(std::size_t i) const { return S_at(i, depth()); }
  // c_j = (-1)^j S_j over the full stack.
  Fe c_top(std::size_t j) const;
  // Lambda' sequence of the full stack's c_j, up to index tmax inclusive.
  std::vector<Fe> lambda_prime(std::size_t tmax) const;

private:
  const Field* F_;
  std::size_t cap_;
  std::vector<Fe> xs_;
  std::vector<std::vector<Fe>> cols_;  // cols_[j] = S_0..S_cap of first j elements
};

// All r-subsets of {0..n-1} in colexicographic order, as sorted index
// vectors.
void for_each_subset_colex(std::uint32_t n, std::uint32_t r,
                           const std::function<void(const std::vector<std::uint32_t>&)>& fn);

}  // namespace trs
