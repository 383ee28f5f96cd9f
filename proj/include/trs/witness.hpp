#pragma once
// Constructive witnesses for the full-length twist setting A = F_q^*,
// l = k-1 (odd q): subsets with prescribed symmetric-function values
// that reject the structured syndrome families, greedy constructions
// for nonvanishing symmetric sums, and the prefix-plus-scaling search
// that covers generic syndromes.

#include "trs/deephole.hpp"

#include <optional>

namespace trs {

// All square roots of t, ascending canonical order (odd q).
std::vector<Fe> square_roots(const Field& F, Fe t);

// Roots of a x^2 + b x + c over odd F_q (a may be zero), ascending.
std::vector<Fe> quad_roots(const Field& F, Fe a, Fe b, Fe c);

// r pairwise distinct nonzero elements with sum eta^{-1}: canonical
// units scaled by the inverse of eta times their sum, with the first
// element shifted when the initial sum vanishes.  Odd q, 3 <= r <= q-2.
std::vector<Fe> sum_subset_witness(const Field& F, std::uint32_t r, Fe eta);

// (0, 2 b eta, b, b / (4 eta)): the r = 3 quartet syndrome for b.
Syndrome quartet_syndrome(const Field& F, Fe b, Fe eta);

// a_j = a0 M^j for j < r with tail a0 (M^r - eta M^{r+1}), M = a1 / a0.
Syndrome geometric_syndrome(const Field& F, Fe a0, Fe a1, std::uint32_t r, Fe eta);

struct QuartetWitness {
  std::vector<Fe> subset;   // x_1 = 1/(2 eta) + alpha, x_2 = -alpha, x_3 = -1/(2 eta)
  Fe alpha = 0;
  std::vector<Fe> excluded; // the four alpha values that degenerate
};

// One 3-subset rejecting every quartet syndrome at once.  Odd q >= 7.
QuartetWitness quartet_witness(const Field& F, Fe eta);

// c_1 - eta c_2 + eta c_1^2 + b on a subset, where c_j are the signed
// elementary symmetric sums; tail-pair rejection needs a root of this.
Fe quadric_value(const Field& F, const std::vector<Fe>& xs, Fe eta, Fe b);

struct QuadricWitness {
  std::vector<Fe> subset;
  bool guided = false; // found by the (X, Y) substitution rather than scan
};

// Subset with quadric_value = 0: deterministic prefix plus the
// substitution X = (x_{r-1}+x_r)/2, Y = (x_{r-1}-x_r)/2 solving the
// resulting conic, with a colex exhaustive fallback.  Odd q, r >= 3;
// throws if both searches exhaust.
QuadricWitness quadric_witness(const Field& F, Fe b, std::uint32_t r, Fe eta);

// Subset {M, first others} rejecting a geometric syndrome; verifies the
// rejection through the criterion before returning.
std::vector<Fe> geometric_rejection_subset(const TrsParams& P, const Syndrome& a);

// Greedy constructions over F_q^*, odd q, 1 <= j <= i-1 <= q-5:
// distinct nonzero x_1..x_i with S_{j,i} != 0 and
// S_{1,i} S_{j,i} - S_{j+1,i} != 0;
std::vector<Fe> greedy_nonzero_pair(const Field& F, std::uint32_t i, std::uint32_t j);
// distinct nonzero x_1..x_i with S_{j-1,i} != 0 and
// S_{j,i}^2 - S_{j-1,i} S_{j+1,i} != 0.
std::vector<Fe> greedy_discriminant(const Field& F, std::uint32_t i, std::uint32_t j);

// a lies in one of the closed-form families (quartet only at r = 3).
bool in_any_syndrome_family(const Field& F, std::uint32_t r, Fe eta, const Syndrome& a);

struct PrefixGammaWitness {
  std::vector<Fe> prefix; // colex-first (r-2)-subset of units
  Fe gamma = 0;           // scaling applied to the prefix
  std::vector<Fe> scaled;
  Fe g1 = 0, g2 = 0, g3 = 0, g4 = 0;
  Fe beta0 = 0;      // S_1 of the scaled prefix, minus eta^{-1}
  Fe resultant = 0;  // beta0 g4 g3^2 + g3^3 - beta0 g2 g4^2 - g1 g4^2 + a_r g4^2
};

// Searches colex (r-2)-subsets times scaling factors for g_4 != 0 and a
// nonzero cubic resultant; such a pair certifies that a generic
// syndrome is rejected by some completion of the scaled prefix.
std::optional<PrefixGammaWitness> prefix_gamma_witness(const TrsParams& P, const Syndrome& a);

} // namespace trs
