#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trs/sym.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

using namespace trs;

namespace {

std::vector<const Field*> test_fields() {
  return {&get_field(5, 1), &get_field(7, 1), &get_field(2, 3), &get_field(3, 2),
          &get_field(13, 1)};
}

// Elementary symmetric S_i by direct enumeration of all subsets.
std::vector<Fe> brute_elementary(const Field& F, const std::vector<Fe>& xs) {
  std::size_t n = xs.size();
  std::vector<Fe> S(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Fe prod = 1;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        prod = F.mul(prod, xs[i]);
        ++bits;
      }
    S[bits] = F.add(S[bits], prod);
  }
  return S;
}

// Complete homogeneous h_t by the two-variable recurrence
// h_t(x_1..x_j) = h_t(x_1..x_{j-1}) + x_j h_{t-1}(x_1..x_j).
std::vector<Fe> brute_complete_homogeneous(const Field& F, const std::vector<Fe>& xs,
                                           std::size_t tmax) {
  std::vector<Fe> h(tmax + 1, 0);
  h[0] = 1;
  for (Fe x : xs)
    for (std::size_t t = 1; t <= tmax; ++t) h[t] = F.add(h[t], F.mul(x, h[t - 1]));
  return h;
}

std::vector<Fe> distinct_sample(const Field& F, std::size_t n, std::mt19937_64& rng,
                                bool nonzero) {
  std::vector<Fe> pool;
  for (Fe x = nonzero ? 1 : 0; x < F.q(); ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  return pool;
}

}  // namespace

TEST_CASE("elementary symmetric values match subset enumeration") {
  std::mt19937_64 rng(7);
  for (const Field* Fp : test_fields()) {
    const Field& F = *Fp;
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = rng() % 7;
      std::vector<Fe> xs(n);
      for (Fe& x : xs) x = Fe(rng() % F.q());
      std::vector<Fe> S = elementary_symmetric(F, xs);
      REQUIRE(S.size() == n + 1);
      CHECK(S == brute_elementary(F, xs));
      CHECK(S[0] == 1);
      // Appending y maps S_i to S_i + y S_{i-1}.
      Fe y = Fe(rng() % F.q());
      std::vector<Fe> ext = xs;
      ext.push_back(y);
      std::vector<Fe> S2 = elementary_symmetric(F, ext);
      for (std::size_t i = 1; i <= n; ++i)
        CHECK(S2[i] == F.add(S[i], F.mul(y, S[i - 1])));
      CHECK(S2[n + 1] == F.mul(y, S[n]));
    }
  }
}

TEST_CASE("sigma_from_roots expands the product of linear factors") {
  std::mt19937_64 rng(11);
  for (const Field* Fp : test_fields()) {
    const Field& F = *Fp;
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % std::min<std::size_t>(5, F.q() - 1);
      std::vector<Fe> roots = distinct_sample(F, n, rng, false);
      Poly g = sigma_from_roots(F, roots);
      Poly ref = {1};
      for (Fe r : roots) ref = poly_mul(F, ref, Poly{F.neg(r), 1});
      CHECK(g == ref);
      REQUIRE(g.size() == n + 1);
      CHECK(g[n] == 1);
      for (Fe r : roots) CHECK(poly_eval(F, g, r) == 0);
      for (Fe x = 0; x < F.q(); ++x)
        if (std::find(roots.begin(), roots.end(), x) == roots.end())
          CHECK(poly_eval(F, g, x) != 0);
      // sigma_seq lists the same coefficients from the top degree down,
      // which is the signed form sigma_j = (-1)^j S_j.
      std::vector<Fe> sig = sigma_seq(F, roots);
      std::vector<Fe> S = elementary_symmetric(F, roots);
      REQUIRE(sig.size() == n + 1);
      Fe sign = 1;
      for (std::size_t j = 0; j <= n; ++j) {
        CHECK(sig[j] == g[n - j]);
        CHECK(sig[j] == F.mul(sign, S[j]));
        sign = F.neg(sign);
      }
    }
  }
}

TEST_CASE("lambda_from_sigma inverts the sigma convolution") {
  std::mt19937_64 rng(13);
  for (const Field* Fp : test_fields()) {
    const Field& F = *Fp;
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % std::min<std::size_t>(5, F.q() - 1);
      std::vector<Fe> roots = distinct_sample(F, n, rng, true);
      std::vector<Fe> sig = sigma_seq(F, roots);
      std::size_t tmax = 1 + rng() % 7;
      std::vector<Fe> lam = lambda_from_sigma(F, sig, tmax);
      REQUIRE(lam.size() == tmax + 1);
      CHECK(lam[0] == 1);
      for (std::size_t t = 1; t <= tmax; ++t) {
        Fe acc = 0;
        for (std::size_t j = 0; j <= t; ++j) {
          Fe s = j < sig.size() ? sig[j] : Fe(0);
          acc = F.add(acc, F.mul(s, lam[t - j]));
        }
        CHECK(acc == 0);
      }
      // The solution is the complete homogeneous sequence of the roots.
      std::vector<Fe> h = brute_complete_homogeneous(F, roots, tmax);
      CHECK(lam == h);
    }
  }
}

TEST_CASE("lagrange interpolation reproduces sampled polynomials") {
  std::mt19937_64 rng(17);
  for (const Field* Fp : test_fields()) {
    const Field& F = *Fp;
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % std::min<std::size_t>(6, F.q());
      std::vector<Fe> xs = distinct_sample(F, n, rng, false);
      Poly f(n);
      for (Fe& c : f) c = Fe(rng() % F.q());
      std::vector<std::pair<Fe, Fe>> pts;
      for (Fe x : xs) pts.push_back({x, poly_eval(F, f, x)});
      Poly g = lagrange_interpolate(F, pts);
      CHECK(g.size() <= n);
      for (auto& [x, y] : pts) CHECK(poly_eval(F, g, x) == y);
      Poly trimmed = f;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      CHECK(g == trimmed);
    }
  }
}

TEST_CASE("lambda values equal top interpolation coefficients of power maps") {
  std::mt19937_64 rng(19);
  for (const Field* Fp : test_fields()) {
    const Field& F = *Fp;
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 2 + rng() % std::min<std::size_t>(5, F.q() - 2);
      std::vector<Fe> A = distinct_sample(F, n, rng, true);
      std::size_t tmax = 4;
      std::vector<Fe> lam = lambda_from_sigma(F, sigma_seq(F, A), tmax);
      for (std::size_t t = 0; t <= tmax; ++t) {
        std::vector<std::pair<Fe, Fe>> pts;
        for (Fe a : A) pts.push_back({a, F.pow(a, (long long)(n - 1 + t))});
        Poly g = lagrange_interpolate(F, pts);
        Fe top = g.size() >= n ? g[n - 1] : Fe(0);
        CHECK(top == lam[t]);
      }
    }
  }
}

TEST_CASE("generalized vandermonde determinants match the factored form") {
  std::mt19937_64 rng(23);
  for (const Field* Fp : test_fields()) {
    const Field& F = *Fp;
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t s = 1 + rng() % std::min<std::size_t>(5, F.q() - 1);
      std::vector<Fe> xs = distinct_sample(F, s, rng, true);
      std::vector<std::uint32_t> exps = {0};
      while (exps.size() < s) exps.push_back(exps.back() + 1 + rng() % 3);
      auto [lhs, rhs] = gen_vandermonde_det(F, xs, exps);
      CHECK(lhs == rhs);
      // Consecutive exponents reduce to the classic Vandermonde product.
      bool classic = exps.back() == s - 1;
      if (classic) {
        Fe prod = 1;
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = i + 1; j < s; ++j)
            prod = F.mul(prod, F.sub(xs[j], xs[i]));
        CHECK(lhs == prod);
      }
    }
    // Force the classic case at least once per field.
    std::vector<Fe> xs = distinct_sample(F, std::min<std::size_t>(4, F.q() - 1), rng, true);
    std::vector<std::uint32_t> exps(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) exps[i] = (std::uint32_t)i;
    auto [lhs, rhs] = gen_vandermonde_det(F, xs, exps);
    Fe prod = 1;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        prod = F.mul(prod, F.sub(xs[j], xs[i]));
    CHECK(lhs == prod);
    CHECK(rhs == prod);
  }
}

TEST_CASE("symmetric stack mirrors fresh elementary-symmetric evaluations") {
  std::mt19937_64 rng(29);
  const Field& F = get_field(3, 2);
  std::size_t cap = 4;
  SymStack st(F, cap);
  std::vector<Fe> xs;
  auto check_state = [&]() {
    REQUIRE(st.depth() == xs.size());
    for (std::size_t pos = 0; pos < xs.size(); ++pos)
      CHECK(st.element(pos) == xs[pos]);
    for (std::size_t j = 0; j <= xs.size(); ++j) {
      std::vector<Fe> prefix(xs.begin(), xs.begin() + j);
      std::vector<Fe> S = elementary_symmetric(F, prefix);
      for (std::size_t i = 0; i <= cap; ++i) {
        Fe expect = i < S.size() ? S[i] : Fe(0);
        CHECK(st.S_at(i, j) == expect);
        if (j == xs.size()) CHECK(st.S_top(i) == expect);
      }
    }
    std::vector<Fe> S = elementary_symmetric(F, xs);
    std::vector<Fe> sig(xs.size() + 1);
    Fe sign = 1;
    for (std::size_t j = 0; j < sig.size(); ++j) {
      sig[j] = F.mul(sign, S[j]);
      sign = F.neg(sign);
    }
    for (std::size_t j = 0; j <= cap; ++j) {
      Fe expect = j < sig.size() ? sig[j] : Fe(0);
      CHECK(st.c_top(j) == expect);
    }
    std::vector<Fe> lp = st.lambda_prime(5);
    CHECK(lp == lambda_from_sigma(F, sig, 5));
  };
  check_state();
  for (int step = 0; step < 200; ++step) {
    bool can_push = xs.size() < cap;
    bool do_push = can_push && (xs.empty() || rng() % 2 == 0);
    if (do_push) {
      Fe x = Fe(rng() % F.q());
      st.push(x);
      xs.push_back(x);
    } else {
      st.pop();
      xs.pop_back();
    }
    check_state();
  }
  st.clear();
  xs.clear();
  check_state();
  CHECK(st.S_top(0) == 1);
  CHECK(st.S_top(2) == 0);
}

TEST_CASE("colex subset enumeration is complete, sorted, and ordered") {
  auto binom = [](std::uint32_t n, std::uint32_t r) {
    unsigned long long b = 1;
    for (std::uint32_t i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
  };
  for (std::uint32_t n : {1u, 4u, 6u, 8u}) {
    for (std::uint32_t r = 0; r <= n; ++r) {
      std::vector<std::vector<std::uint32_t>> seen;
      for_each_subset_colex(n, r, [&](const std::vector<std::uint32_t>& s) {
        REQUIRE(s.size() == r);
        CHECK(std::is_sorted(s.begin(), s.end()));
        if (r > 0) CHECK(s.back() < n);
        seen.push_back(s);
      });
      CHECK(seen.size() == binom(n, r));
      std::set<std::vector<std::uint32_t>> uniq(seen.begin(), seen.end());
      CHECK(uniq.size() == seen.size());
      for (std::size_t i = 1; i < seen.size(); ++i) {
        // Colex: previous subset is smaller when read from the top element.
        std::vector<std::uint32_t> a(seen[i - 1].rbegin(), seen[i - 1].rend());
        std::vector<std::uint32_t> b(seen[i].rbegin(), seen[i].rend());
        CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
      }
      if (r > 0 && !seen.empty()) {
        std::vector<std::uint32_t> first, last;
        for (std::uint32_t i = 0; i < r; ++i) {
          first.push_back(i);
          last.push_back(n - r + i);
        }
        CHECK(seen.front() == first);
        CHECK(seen.back() == last);
      }
    }
  }
}
