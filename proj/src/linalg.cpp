#include "trs/linalg.hpp"

#include <stdexcept>

namespace trs {

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      Fe v = A.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
    }
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

bool mat_is_zero(const Mat& A) {
  for (Fe v : A.a)
    if (v != 0) return false;
  return true;
}

std::vector<std::size_t> rref(const Field& F, Mat& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t sel = r;
    while (sel < A.rows && A.at(sel, c) == 0) ++sel;
    if (sel == A.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
    Fe inv = F.inv(A.at(r, c));
    for (std::size_t j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || A.at(i, c) == 0) continue;
      Fe f = A.at(i, c);
      for (std::size_t j = 0; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t mat_rank(const Field& F, Mat A) { return rref(F, A).size(); }

Fe mat_det(const Field& F, Mat A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant needs a square matrix");
  Fe det = 1;
  for (std::size_t c = 0; c < A.cols; ++c) {
    std::size_t sel = c;
    while (sel < A.rows && A.at(sel, c) == 0) ++sel;
    if (sel == A.rows) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, A.at(c, c));
    Fe inv = F.inv(A.at(c, c));
    for (std::size_t i = c + 1; i < A.rows; ++i) {
      if (A.at(i, c) == 0) continue;
      Fe f = F.mul(A.at(i, c), inv);
      for (std::size_t j = c; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(c, j)));
    }
  }
  return det;
}

std::optional<std::vector<Fe>> solve(const Field& F, Mat A, std::vector<Fe> b) {
  if (b.size() != A.rows) throw std::invalid_argument("right-hand side length mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<std::size_t> pivots = rref(F, aug);
  for (std::size_t t = 0; t < pivots.size(); ++t)
    if (pivots[t] == A.cols) return std::nullopt;  // inconsistent row
  std::vector<Fe> x(A.cols, 0);
  for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug.at(t, A.cols);
  return x;
}

Mat nullspace(const Field& F, Mat A) {
  std::vector<std::size_t> pivots = rref(F, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Mat N(A.cols - pivots.size(), A.cols);
  std::size_t out = 0;
  for (std::size_t c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    N.at(out, c) = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t)
      N.at(out, pivots[t]) = F.neg(A.at(t, c));
    ++out;
  }
  return N;
}

}  // namespace trs
