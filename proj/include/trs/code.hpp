#pragma once

#include <cstdint>
#include <vector>

#include "trs/field.hpp"
#include "trs/linalg.hpp"

namespace trs {

using Word = std::vector<Fe>;

// Linear [n, k] code with both a generator and a parity-check matrix.
struct LinearCode {
  const Field* F = nullptr;
  std::uint32_t n = 0, k = 0;
  Mat G;  // k x n, full rank
  Mat H;  // (n-k) x n, full rank, H G^T = 0
};

// Builds the parity check from a full-rank generator (or the generator from
// a full-rank parity check); validates ranks and duality.
LinearCode code_from_generator(const Field& F, Mat G);
LinearCode code_from_parity(const Field& F, Mat H);
// Wraps a matched pair of matrices, validating ranks and duality.
LinearCode make_linear_code(const Field& F, Mat G, Mat H);

std::uint32_t hamming_weight(const Word& u);
std::uint32_t hamming_distance(const Word& u, const Word& v);

Word encode_message(const LinearCode& C, const Word& msg);
std::vector<Fe> syndrome_of(const LinearCode& C, const Word& u);
bool code_contains(const LinearCode& C, const Word& u);

// Mixed-radix syndrome keys: key = sum s_i q^i over the digits.
std::uint64_t syndrome_key(const Field& F, const std::vector<Fe>& s);
std::vector<Fe> key_syndrome(const Field& F, std::uint64_t key, std::uint32_t len);

// Exact minimum distance by message enumeration; q^k must fit the budget.
std::uint32_t min_distance(const LinearCode& C, std::uint64_t budget = 10'000'000);
bool is_mds(const LinearCode& C, std::uint64_t budget = 10'000'000);

// Coset-leader weights for every syndrome, indexed by syndrome key.
struct CosetTable {
  std::uint32_t digits = 0;  // n - k
  std::uint64_t size = 0;    // q^(n-k)
  std::vector<std::uint8_t> weight;
  std::uint32_t rho = 0;  // covering radius = max leader weight
};

// Production kernel: per-position dynamic program over the syndrome space,
// OpenMP-parallel over syndromes.
CosetTable coset_weights(const LinearCode& C);
// Reference implementation: fills cosets by enumerating error patterns in
// increasing weight with early termination.  Budget caps the pattern count.
CosetTable coset_weights_serial(const LinearCode& C, std::uint64_t budget = 200'000'000);

std::uint32_t covering_radius(const LinearCode& C);
std::uint32_t error_distance(const LinearCode& C, const CosetTable& T, const Word& u);

// Full coset description of one syndrome: minimal weight plus the
// lexicographically smallest leader of that weight.
struct CosetReport {
  std::vector<Fe> syndrome;
  std::uint32_t leader_weight = 0;
  Word leader;
  bool is_deep_hole = false;
};
CosetReport coset_report(const LinearCode& C, const CosetTable& T,
                         const std::vector<Fe>& syndrome);

// Checks that every word of the bigger code that is outside the smaller one
// (dimension gap exactly 1) has error distance n - k to the smaller code.
struct SubcodeDeepHoleReport {
  std::uint64_t words_checked = 0;
  std::uint32_t rho = 0;
  bool all_deep = true;
};
SubcodeDeepHoleReport subcode_deep_holes(const LinearCode& outer, const LinearCode& inner,
                                         std::uint64_t budget = 10'000'000);

}  // namespace trs
