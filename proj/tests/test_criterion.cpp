#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trs/deephole.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

using namespace trs;

namespace {

const Field& field_of(std::uint32_t q) {
  switch (q) {
    case 4: return get_field(2, 2);
    case 8: return get_field(2, 3);
    case 9: return get_field(3, 2);
    case 16: return get_field(2, 4);
    default: return get_field(q, 1);
  }
}

std::uint64_t upow64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Exhaustive comparison of the subset criterion against coset-leader
// weights, with spot checks of the per-syndrome verdicts and witnesses.
void run_cell(const Field& F, bool units, std::uint32_t k, std::uint32_t l, Fe eta,
              std::mt19937_64& rng) {
  std::vector<Fe> A = units ? unit_eval_set(F) : full_eval_set(F);
  TrsParams P = make_trs_params(F, A, k, l, eta);
  std::uint32_t n = P.n(), R = P.r();
  LinearCode C = trs_code(P);
  CosetTable T = coset_weights(C);
  REQUIRE(T.size == upow64(F.q(), n - k));
  CHECK(T.rho == n - k);

  std::vector<std::uint8_t> bits = deep_syndrome_set(P);
  REQUIRE(bits.size() == T.size);
  for (std::uint64_t key = 0; key < T.size; ++key)
    REQUIRE(bits[key] == (T.weight[key] == n - k ? 1 : 0));

  bool small = T.size <= 20000;
  if (small) {
    std::vector<std::uint8_t> serial = deep_syndrome_set_serial(P);
    CHECK(serial == bits);
  }
  std::uint64_t probes = small ? T.size : 1500;
  for (std::uint64_t t = 0; t < probes; ++t) {
    std::uint64_t key = small ? t : rng() % T.size;
    Syndrome a = key_syndrome(F, key, n - k);
    DeepHoleVerdict v = is_deep_hole_syndrome(P, a);
    REQUIRE(v.deep == (bits[key] != 0));
    if (v.deep) {
      CHECK(v.witness.empty());
    } else {
      REQUIRE(v.witness.size() == R);
      CHECK(std::is_sorted(v.witness.begin(), v.witness.end()));
      std::vector<Fe> subset;
      for (std::uint32_t pos : v.witness) {
        REQUIRE(pos < n);
        subset.push_back(A[pos]);
      }
      Fe expr = F.add(criterion_lhs(P, a, subset), a[R]);
      CHECK(expr == 0);
    }
  }
}

}  // namespace

TEST_CASE("criterion matches coset weights: q = 5, both sets, all shapes and twists") {
  std::mt19937_64 rng(101);
  const Field& F = field_of(5);
  for (bool units : {true, false}) {
    std::uint32_t n = units ? 4 : 5;
    for (std::uint32_t k = 1; k < n; ++k)
      for (std::uint32_t l = 0; l < k; ++l)
        for (Fe eta = 1; eta < 5; ++eta) run_cell(F, units, k, l, eta, rng);
  }
}

TEST_CASE("criterion matches coset weights: q = 7, both sets, all shapes") {
  std::mt19937_64 rng(103);
  const Field& F = field_of(7);
  for (bool units : {true, false}) {
    std::uint32_t n = units ? 6 : 7;
    for (std::uint32_t k = 1; k < n; ++k)
      for (std::uint32_t l = 0; l < k; ++l)
        for (Fe eta : {Fe(1), Fe(3)}) run_cell(F, units, k, l, eta, rng);
  }
}

TEST_CASE("criterion matches coset weights: q = 8 units, all shapes") {
  std::mt19937_64 rng(107);
  const Field& F = field_of(8);
  for (std::uint32_t k = 1; k < 7; ++k)
    for (std::uint32_t l = 0; l < k; ++l)
      for (Fe eta : {Fe(1), Fe(2)}) run_cell(F, true, k, l, eta, rng);
}

TEST_CASE("criterion matches coset weights: q = 9 selected cells") {
  std::mt19937_64 rng(109);
  const Field& F = field_of(9);
  // Full-length twist cells plus a deep-twist cell l = 0 where the
  // lambda-prime tail extends past the subset size.
  run_cell(F, true, 2, 1, 2, rng);
  run_cell(F, true, 4, 3, 2, rng);
  run_cell(F, true, 6, 5, 2, rng);
  run_cell(F, true, 5, 0, 2, rng);
  run_cell(F, false, 6, 2, 2, rng);
}

TEST_CASE("criterion matches coset weights: larger prime and even fields") {
  std::mt19937_64 rng(113);
  run_cell(field_of(11), true, 7, 3, 1, rng);
  run_cell(field_of(11), true, 7, 6, 1, rng);
  run_cell(field_of(13), true, 9, 8, 1, rng);
  run_cell(field_of(16), true, 12, 11, 1, rng);
  run_cell(field_of(16), true, 13, 12, 1, rng);
}

TEST_CASE("an independent solver oracle confirms the criterion at q = 5") {
  // Not deep <=> the syndrome lies in the span of some R columns of H.
  const Field& F = field_of(5);
  for (bool units : {true, false}) {
    std::uint32_t n = units ? 4 : 5;
    std::vector<Fe> A = units ? unit_eval_set(F) : full_eval_set(F);
    for (auto [k, l, eta] : {std::tuple<std::uint32_t, std::uint32_t, Fe>{1, 0, 2},
                             {2, 1, 1}, {2, 0, 3}, {3, 2, 4}}) {
      if (k >= n) continue;
      TrsParams P = make_trs_params(F, A, k, l, eta);
      std::uint32_t R = P.r();
      Mat H = trs_parity(P);
      std::uint64_t space = upow64(5, n - k);
      for (std::uint64_t key = 0; key < space; ++key) {
        Syndrome a = key_syndrome(F, key, n - k);
        bool representable = false;
        for_each_subset_colex(n, R, [&](const std::vector<std::uint32_t>& cols) {
          if (representable) return;
          Mat S(n - k, R);
          for (std::uint32_t i = 0; i < n - k; ++i)
            for (std::uint32_t j = 0; j < R; ++j) S.at(i, j) = H.at(i, cols[j]);
          if (solve(F, S, a)) representable = true;
        });
        DeepHoleVerdict v = is_deep_hole_syndrome(P, a);
        CHECK(v.deep == !representable);
      }
    }
  }
}

TEST_CASE("zero-subset corner: k = n-1 leaves only the tail condition") {
  std::mt19937_64 rng(127);
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    const Field& F = field_of(q);
    for (bool units : {true, false}) {
      std::vector<Fe> A = units ? unit_eval_set(F) : full_eval_set(F);
      std::uint32_t n = std::uint32_t(A.size());
      TrsParams P = make_trs_params(F, A, n - 1, n - 2, 1 + Fe(rng() % (q - 1)));
      REQUIRE(P.r() == 0);
      for (Fe a0 = 0; a0 < q; ++a0) {
        DeepHoleVerdict v = is_deep_hole_syndrome(P, {a0});
        CHECK(v.deep == (a0 != 0));
      }
      run_cell(F, units, n - 1, n - 2, 1, rng);
    }
  }
}

TEST_CASE("subset budgets cap the criterion scan") {
  const Field& F = field_of(7);
  TrsParams P = make_trs_params(F, unit_eval_set(F), 3, 2, 1);
  Syndrome a(P.n() - 3, 1);
  CHECK_THROWS_AS(is_deep_hole_syndrome(P, a, 3), std::runtime_error);
  CHECK(binom_capped(6, 2, 100) == 15);
  CHECK(binom_capped(30, 15, 1000) == 1001);
  CHECK(binom_capped(5, 0, 10) == 1);
}
