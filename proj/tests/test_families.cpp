#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trs/deephole.hpp"
#include "trs/witness.hpp"

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

std::uint64_t binom(std::uint32_t n, std::uint32_t r) {
  unsigned long long b = 1;
  for (std::uint32_t i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
  return b;
}

Syndrome random_syndrome(const Field& F, std::uint32_t len, std::mt19937_64& rng) {
  Syndrome a(len);
  for (Fe& x : a) x = Fe(rng() % F.q());
  return a;
}

std::vector<Fe> random_distinct_units(const Field& F, std::uint32_t count,
                                      std::mt19937_64& rng) {
  std::vector<Fe> pool = unit_eval_set(F);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

Syndrome tail_syndrome(std::uint32_t len, Fe a_R) {
  Syndrome a(len, 0);
  a[len - 1] = a_R;
  return a;
}

}  // namespace

TEST_CASE("reconstruction solves the syndrome equation on every shape") {
  std::mt19937_64 rng(131);
  std::uint32_t instances = 0;
  while (instances < 2000) {
    std::uint32_t qs[] = {5, 7, 8, 9};
    const Field& F = field_of(qs[rng() % 4]);
    bool units = rng() % 2 == 0;
    std::vector<Fe> A = units ? unit_eval_set(F) : full_eval_set(F);
    std::uint32_t n = std::uint32_t(A.size());
    std::uint32_t k = 1 + rng() % (n - 1);
    std::uint32_t l = rng() % k;
    Fe eta = 1 + Fe(rng() % (F.q() - 1));
    TrsParams P = make_trs_params(F, A, k, l, eta);
    Syndrome a = random_syndrome(F, n - k, rng);
    Word w = reconstruct(P, a);
    REQUIRE(w.size() == n);
    CHECK(trs_syndrome(P, w) == a);
    ++instances;
  }
}

TEST_CASE("deep-hole words shift reconstructions by codewords at full distance") {
  std::mt19937_64 rng(137);
  for (auto [q, k, l] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{5, 2, 1},
                         {7, 3, 1}, {8, 4, 2}, {9, 5, 4}}) {
    const Field& F = field_of(q);
    TrsParams P = make_trs_params(F, unit_eval_set(F), k, l, 2);
    std::uint32_t n = P.n();
    LinearCode C = trs_code(P);
    CosetTable T = coset_weights(C);
    Syndrome tail = tail_syndrome(n - k, 1);
    REQUIRE(is_deep_hole_syndrome(P, tail).deep);
    Word base = reconstruct(P, tail);
    for (int t = 0; t < 15; ++t) {
      std::vector<Fe> msg(k);
      for (Fe& x : msg) x = Fe(rng() % F.q());
      Word w = deep_hole_word(P, tail, msg);
      CHECK(trs_syndrome(P, w) == tail);
      Word expect = trs_encode(P, msg);
      for (std::uint32_t j = 0; j < n; ++j) expect[j] = F.add(expect[j], base[j]);
      CHECK(w == expect);
      CHECK(error_distance(C, T, w) == n - k);
    }
    // The zero syndrome is never a deep hole.
    CHECK_THROWS_AS(deep_hole_word(P, Syndrome(n - k, 0), std::vector<Fe>(k, 0)),
                    std::invalid_argument);
  }
}

TEST_CASE("pure tail syndromes are deep holes in every cell") {
  std::mt19937_64 rng(139);
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    const Field& F = field_of(q);
    for (bool units : {true, false}) {
      std::vector<Fe> A = units ? unit_eval_set(F) : full_eval_set(F);
      std::uint32_t n = std::uint32_t(A.size());
      for (std::uint32_t k = 1; k < n; ++k)
        for (std::uint32_t l = 0; l < k; ++l)
          for (int t = 0; t < 2; ++t) {
            Fe eta = 1 + Fe(rng() % (q - 1));
            TrsParams P = make_trs_params(F, A, k, l, eta);
            for (Fe v = 1; v < q; ++v)
              CHECK(is_deep_hole_syndrome(P, tail_syndrome(n - k, v)).deep);
          }
    }
  }
}

TEST_CASE("unit-tail searches reproduce the frozen excluded-value counts") {
  struct Cell {
    std::uint32_t q, k, l;
    Fe eta;
    bool subset_A;
    std::uint64_t excluded;
  };
  // excluded == q means every tail value is killed by some subset, which
  // can only happen when the subset count reaches q.
  std::vector<Cell> cells = {
      {5, 2, 1, 1, false, 3},  {7, 3, 1, 3, false, 7}, {7, 2, 0, 1, false, 7},
      {8, 4, 2, 2, false, 5},  {9, 5, 4, 2, false, 9}, {11, 3, 1, 1, true, 9},
  };
  for (const Cell& cell : cells) {
    const Field& F = field_of(cell.q);
    std::vector<Fe> A =
        cell.subset_A ? std::vector<Fe>{1, 2, 3, 4, 5, 6} : unit_eval_set(F);
    TrsParams P = make_trs_params(F, A, cell.k, cell.l, cell.eta);
    std::uint32_t n = P.n(), R = P.r();
    UnitTailReport rep = unit_tail_deep_search(P);
    CHECK(rep.subset_count == binom(n, R));
    CHECK(rep.excluded_count == cell.excluded);
    CHECK(rep.excluded_count <= rep.subset_count);
    REQUIRE(rep.excluded.size() == F.q());
    std::uint64_t marked = 0;
    for (std::uint8_t b : rep.excluded) marked += b;
    CHECK(marked == rep.excluded_count);
    // The bitmap is exactly the non-deep indicator of (0,...,0,1,a).
    for (std::uint32_t idx = 0; idx < F.q(); ++idx) {
      Fe aval = idx == 0 ? Fe(0) : F.xi_pow(idx - 1);
      Syndrome s(n - cell.k, 0);
      s[R - 1] = 1;
      s[R] = aval;
      CHECK(is_deep_hole_syndrome(P, s).deep == (rep.excluded[idx] == 0));
    }
    if (rep.excluded_count < F.q()) {
      REQUIRE(rep.value.has_value());
      Syndrome s(n - cell.k, 0);
      s[R - 1] = 1;
      s[R] = *rep.value;
      CHECK(is_deep_hole_syndrome(P, s).deep);
    } else {
      CHECK(!rep.value.has_value());
    }
  }
}

TEST_CASE("the last-point quadratic split agrees with the criterion everywhere") {
  std::mt19937_64 rng(149);
  for (std::uint32_t q : {7u, 8u}) {
    const Field& F = field_of(q);
    std::vector<Fe> A = unit_eval_set(F);
    std::uint32_t n = q - 1;
    for (std::uint32_t k = 1; k + 2 <= n; ++k) {
      TrsParams P = make_trs_params(F, A, k, k - 1, 1 + Fe(rng() % (q - 1)));
      std::uint32_t r = P.r();
      REQUIRE(r >= 1);
      for (int t = 0; t < 30; ++t) {
        Syndrome a = random_syndrome(F, n - k, rng);
        std::vector<Fe> pts = random_distinct_units(F, r, rng);
        std::vector<Fe> prefix(pts.begin(), pts.end() - 1);
        Fe x_r = pts.back();
        LastVarSplit sp = last_var_split(P, a, prefix, x_r);
        CHECK(last_var_quad(F, sp, x_r) ==
              F.add(criterion_lhs(P, a, pts), a[r]));
        for (Fe x : A) {
          if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) continue;
          std::vector<Fe> subset = prefix;
          subset.push_back(x);
          CHECK(last_var_quad(F, sp, x) ==
                F.add(criterion_lhs(P, a, subset), a[r]));
        }
      }
    }
  }
}

TEST_CASE("the two-point bivariate split agrees with the criterion everywhere") {
  std::mt19937_64 rng(151);
  for (std::uint32_t q : {7u, 8u}) {
    const Field& F = field_of(q);
    std::vector<Fe> A = unit_eval_set(F);
    std::uint32_t n = q - 1;
    for (std::uint32_t k = 1; k + 3 <= n; ++k) {
      TrsParams P = make_trs_params(F, A, k, k - 1, 1 + Fe(rng() % (q - 1)));
      std::uint32_t r = P.r();
      REQUIRE(r >= 2);
      for (int t = 0; t < 20; ++t) {
        Syndrome a = random_syndrome(F, n - k, rng);
        std::vector<Fe> pts = random_distinct_units(F, r, rng);
        std::vector<Fe> prefix(pts.begin(), pts.end() - 2);
        Fe x1 = pts[r - 2], x2 = pts[r - 1];
        PairSplit sp = pair_split(P, a, prefix, x1, x2);
        CHECK(sp.a_r == a[r]);
        for (Fe y1 : A)
          for (Fe y2 : A) {
            if (y1 == y2) continue;
            if (std::find(prefix.begin(), prefix.end(), y1) != prefix.end()) continue;
            if (std::find(prefix.begin(), prefix.end(), y2) != prefix.end()) continue;
            std::vector<Fe> subset = prefix;
            subset.push_back(y1);
            subset.push_back(y2);
            CHECK(pair_form(F, sp, y1, y2) ==
                  F.add(criterion_lhs(P, a, subset), a[r]));
          }
      }
    }
  }
}

TEST_CASE("split preconditions reject non-canonical settings") {
  const Field& F = field_of(7);
  std::vector<Fe> A = unit_eval_set(F);
  TrsParams twisted_low = make_trs_params(F, A, 3, 0, 1);  // l != k-1
  Syndrome a(3, 1);
  CHECK_THROWS_AS(last_var_split(twisted_low, a, {1, 3}, 2), std::invalid_argument);
  TrsParams full = make_trs_params(F, full_eval_set(F), 4, 3, 1);
  Syndrome b(3, 1);
  CHECK_THROWS_AS(last_var_split(full, b, {1, 3}, 2), std::invalid_argument);
  TrsParams P = make_trs_params(F, A, 3, 2, 1);
  Syndrome c(3, 1);
  CHECK_THROWS_AS(last_var_split(P, c, {1, 3, 5}, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_split(P, c, {1, 3}, 2, 4), std::invalid_argument);
}

TEST_CASE("closed factorizations of the head, tail-pair, and geometric families") {
  std::mt19937_64 rng(157);
  for (std::uint32_t q : {7u, 9u, 11u}) {
    const Field& F = field_of(q);
    std::vector<Fe> A = unit_eval_set(F);
    std::uint32_t n = q - 1;
    for (std::uint32_t r = 2; r + 2 <= n && r <= 4; ++r) {
      std::uint32_t k = n - r - 1;
      for (int t = 0; t < 10; ++t) {
        Fe eta = 1 + Fe(rng() % (q - 1));
        TrsParams P = make_trs_params(F, A, k, k - 1, eta);
        std::vector<Fe> S = random_distinct_units(F, r, rng);
        std::vector<Fe> cs = sigma_seq(F, S);

        // Head-only syndrome (a_0, 0, ..., 0).
        Fe a0 = 1 + Fe(rng() % (q - 1));
        Syndrome head(r + 1, 0);
        head[0] = a0;
        Fe head_expr = F.add(criterion_lhs(P, head, S), head[r]);
        Fe head_rhs = F.mul(F.mul(a0, cs[r]), F.add(1, F.mul(eta, cs[1])));
        CHECK(head_expr == head_rhs);

        // Tail-pair syndrome (0, ..., 0, a_{r-1}, a_r).
        Fe am1 = 1 + Fe(rng() % (q - 1));
        Fe ar = Fe(rng() % q);
        Syndrome pair(r + 1, 0);
        pair[r - 1] = am1;
        pair[r] = ar;
        Fe pair_expr = F.add(criterion_lhs(P, pair, S), pair[r]);
        Fe inner = F.add(F.add(cs[1], F.neg(F.mul(eta, cs[2]))),
                         F.add(F.mul(eta, F.mul(cs[1], cs[1])), F.div(ar, am1)));
        CHECK(pair_expr == F.mul(am1, inner));

        // Geometric syndrome a_j = a_0 M^j with the matched tail.
        Fe M = 1 + Fe(rng() % (q - 1));
        Syndrome geo = geometric_syndrome(F, a0, F.mul(a0, M), r, eta);
        REQUIRE(geo.size() == r + 1);
        for (std::uint32_t j = 0; j < r; ++j)
          CHECK(geo[j] == F.mul(a0, F.pow(M, j)));
        CHECK(geo[r] == F.mul(a0, F.sub(F.pow(M, r), F.mul(eta, F.pow(M, r + 1)))));
        Fe geo_expr = F.add(criterion_lhs(P, geo, S), geo[r]);
        Fe factor = F.add(F.add(1, F.mul(eta, cs[1])), F.neg(F.mul(eta, M)));
        Fe prod = a0;
        for (Fe x : S) prod = F.mul(prod, F.sub(M, x));
        CHECK(geo_expr == F.mul(prod, factor));
      }
    }
  }
}
