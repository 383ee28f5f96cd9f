#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trs/field.hpp"

namespace trs {

// Dense row-major matrix over a Field.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Fe> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Fe& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Fe at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  const Fe* row(std::size_t r) const { return a.data() + r * cols; }
  Fe* row(std::size_t r) { return a.data() + r * cols; }
};

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
bool mat_is_zero(const Mat& A);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(const Field& F, Mat& A);
std::size_t mat_rank(const Field& F, Mat A);
Fe mat_det(const Field& F, Mat A);

// One solution of A x = b, if any.
std::optional<std::vector<Fe>> solve(const Field& F, Mat A, std::vector<Fe> b);

// Basis of the right kernel, one vector per row.
Mat nullspace(const Field& F, Mat A);

}  // namespace trs
