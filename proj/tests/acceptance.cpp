// Acceptance harness: eleven end-to-end criteria, one printed verdict line
// each, exit code 0 only when every criterion passes.  Every bound and
// expected count is pinned here as a constant; all comparisons are exact.

#include "trs/charsum.hpp"
#include "trs/code.hpp"
#include "trs/report.hpp"
#include "trs/witness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace trs;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const Field& field_of(std::uint32_t q) {
  auto [p, m] = split_prime_power(q);
  return get_field(p, m);
}

std::uint64_t binom(std::uint32_t n, std::uint32_t r) {
  unsigned long long b = 1;
  for (std::uint32_t i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
  return b;
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Covering radius rho = n - k for every valid parameter tuple at
//    q in {4,5,7,8,9}, both evaluation sets, every eta.  Budget: 300 s.

Outcome criterion1() {
  std::uint64_t cells = 0;
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    const Field& F = field_of(q);
    for (const std::vector<Fe>& A : {unit_eval_set(F), full_eval_set(F)}) {
      std::uint32_t n = std::uint32_t(A.size());
      for (std::uint32_t k = 1; k < n; ++k)
        for (std::uint32_t l = 0; l < k; ++l)
          for (Fe eta = 1; eta < q; ++eta) {
            TrsParams P = make_trs_params(F, A, k, l, eta);
            CosetTable T = coset_weights(trs_code(P));
            if (T.rho != n - k)
              return {false, fmt("rho = %u != %u at q=%u n=%u k=%u l=%u eta=%u",
                                 T.rho, n - k, q, n, k, l, unsigned(eta))};
            ++cells;
          }
    }
  }
  return {true, fmt("rho = n-k on all %llu cells",
                    (unsigned long long)cells)};
}

// ---------------------------------------------------------------------------
// 2. Twenty random one-codimensional subcodes of the dimension-(k+1)
//    Reed-Solomon code over q in {7,8,9}: every word of the big code outside
//    the subcode has exact error distance n - k.  Budget: 300 s.

Outcome criterion2() {
  std::mt19937_64 rng(0xC0FFEE);
  const std::uint32_t per_q[] = {7, 7, 6};  // 20 subcodes total
  std::uint32_t idx = 0;
  std::uint64_t words = 0, subcodes = 0;
  for (std::uint32_t q : {7u, 8u, 9u}) {
    const Field& F = field_of(q);
    const std::vector<Fe> A = full_eval_set(F);
    std::uint32_t n = q;
    for (std::uint32_t t = 0; t < per_q[idx]; ++t) {
      std::uint32_t k = 3 + rng() % 2;  // coset table stays small
      LinearCode outer = code_from_generator(F, rs_generator(F, A, k + 1));
      Mat B(k, k + 1);
      do {
        for (Fe& x : B.a) x = Fe(rng() % q);
      } while (mat_rank(F, B) != k);
      LinearCode inner = code_from_generator(F, mat_mul(F, B, outer.G));
      SubcodeDeepHoleReport rep = subcode_deep_holes(outer, inner);
      if (!rep.all_deep || rep.rho != n - k)
        return {false, fmt("subcode %llu at q=%u k=%u: all_deep=%d rho=%u",
                           (unsigned long long)subcodes, q, k, int(rep.all_deep),
                           rep.rho)};
      words += rep.words_checked;
      ++subcodes;
    }
    ++idx;
  }
  return {true, fmt("%llu subcodes, %llu coset words, all at distance n-k",
                    (unsigned long long)subcodes, (unsigned long long)words)};
}

// ---------------------------------------------------------------------------
// 3. Criterion verdict == coset-leader verdict for every syndrome, over
//    q in {5,7,8,9}, both evaluation sets, all (k, l), eta in {1, 2}.
//    Runs through the report pipeline; the JSON dumps feed criterion 11.
//    Budget: 1800 s.

std::map<std::uint32_t, std::string> g_reports;  // q -> canonical JSON dump

RunConfig syndrome_sweep_config(std::uint32_t q) {
  auto [p, m] = split_prime_power(q);
  RunConfig cfg;
  cfg.p = p;
  cfg.m = m;
  cfg.checks = {"thm3.4"};
  cfg.eval_set = "both";
  cfg.eta = "first2";
  return cfg;
}

Outcome criterion3() {
  g_reports.clear();
  unsetenv("TRS_WORKERS");
  std::uint64_t rows = 0, syndromes = 0;
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    Report rep = run(syndrome_sweep_config(q));
    std::uint64_t expect =
        (std::uint64_t(q - 1) * (q - 2) / 2 + std::uint64_t(q) * (q - 1) / 2) * 2;
    if (rep.rows.size() != expect)
      return {false, fmt("q=%u: %zu rows, expected %llu", q, rep.rows.size(),
                         (unsigned long long)expect)};
    for (const CheckRow& row : rep.rows) {
      if (row.status != "pass")
        return {false, fmt("q=%u row '%s' status %s", q,
                           row.params.dump().c_str(), row.status.c_str())};
      syndromes += row.counts.at("syndromes").get<std::uint64_t>();
      ++rows;
    }
    g_reports[q] = report_json(rep).dump();
  }
  return {true, fmt("%llu grid cells, %llu syndromes, zero mismatches",
                    (unsigned long long)rows, (unsigned long long)syndromes)};
}

// ---------------------------------------------------------------------------
// 4. Reconstruction: 10^4 fuzzed (params, syndrome) instances solve
//    H u^T = a exactly, with a direct parity-matrix recheck every 100th.

Outcome criterion4() {
  std::mt19937_64 rng(0xC0FFEE);
  const std::uint32_t target = 10000;
  std::uint32_t done = 0;
  while (done < target) {
    std::uint32_t qs[] = {5, 7, 8, 9};
    const Field& F = field_of(qs[rng() % 4]);
    std::uint32_t q = F.q();
    const std::vector<Fe> A = rng() % 2 ? unit_eval_set(F) : full_eval_set(F);
    std::uint32_t n = std::uint32_t(A.size());
    std::uint32_t k = 1 + rng() % (n - 1);
    std::uint32_t l = rng() % k;
    Fe eta = Fe(1 + rng() % (q - 1));
    TrsParams P = make_trs_params(F, A, k, l, eta);
    Syndrome a(n - k);
    for (Fe& x : a) x = Fe(rng() % q);
    Word u = reconstruct(P, a);
    if (trs_syndrome(P, u) != a)
      return {false, fmt("syndrome mismatch at instance %u (q=%u k=%u l=%u)",
                         done, q, k, l)};
    if (done % 100 == 0) {
      Mat H = trs_parity(P);
      Mat ut(n, 1);
      for (std::uint32_t i = 0; i < n; ++i) ut.at(i, 0) = u[i];
      Mat s = mat_mul(F, H, ut);
      for (std::uint32_t i = 0; i < n - k; ++i)
        if (s.at(i, 0) != a[i])
          return {false, fmt("parity recheck failed at instance %u", done)};
    }
    ++done;
  }
  return {true, fmt("%u instances, zero failures", done)};
}

// ---------------------------------------------------------------------------
// 5. Family words: every unit-tail syndrome is deep by both criterion and
//    coset oracle on the criterion-3 grid; excluded-value counts match the
//    frozen values on six reference cells, and excluded < q certifies an
//    extended deep tail.

struct TailCell {
  std::uint32_t q, k, l;
  Fe eta;
  bool subset_A;  // first six canonical nonzero indices instead of all units
  std::uint64_t excluded;
};

Outcome criterion5() {
  std::uint64_t families = 0;
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    const Field& F = field_of(q);
    for (const std::vector<Fe>& A : {unit_eval_set(F), full_eval_set(F)}) {
      std::uint32_t n = std::uint32_t(A.size());
      for (std::uint32_t k = 1; k < n; ++k)
        for (std::uint32_t l = 0; l < k; ++l)
          for (Fe eta = 1; eta <= 2; ++eta) {
            TrsParams P = make_trs_params(F, A, k, l, eta);
            CosetTable T = coset_weights(trs_code(P));
            for (Fe v = 1; v < q; ++v) {
              Syndrome a(n - k, 0);
              a[n - k - 1] = v;
              if (!is_deep_hole_syndrome(P, a).deep)
                return {false, fmt("criterion rejects tail %u at q=%u n=%u k=%u "
                                   "l=%u eta=%u",
                                   unsigned(v), q, n, k, l, unsigned(eta))};
              std::uint64_t key = syndrome_key(F, a);
              if (T.weight[key] != n - k)
                return {false, fmt("oracle weight %u != n-k at q=%u n=%u k=%u "
                                   "l=%u eta=%u v=%u",
                                   T.weight[key], q, n, k, l, unsigned(eta),
                                   unsigned(v))};
              ++families;
            }
          }
    }
  }

  const TailCell cells[] = {
      {5, 2, 1, 1, false, 3},  {7, 3, 1, 3, false, 7}, {7, 2, 0, 1, false, 7},
      {8, 4, 2, 2, false, 5},  {9, 5, 4, 2, false, 9}, {11, 3, 1, 1, true, 9},
  };
  for (const TailCell& c : cells) {
    const Field& F = field_of(c.q);
    std::vector<Fe> A;
    if (c.subset_A)
      for (Fe x = 1; x <= 6; ++x) A.push_back(x);
    else
      A = unit_eval_set(F);
    TrsParams P = make_trs_params(F, A, c.k, c.l, c.eta);
    std::uint32_t n = P.n(), R = P.r();
    UnitTailReport rep = unit_tail_deep_search(P);
    if (rep.subset_count != binom(n, R) || rep.excluded_count != c.excluded)
      return {false, fmt("counts %llu/%llu at q=%u k=%u l=%u, expected %llu/%llu",
                         (unsigned long long)rep.excluded_count,
                         (unsigned long long)rep.subset_count, c.q, c.k, c.l,
                         (unsigned long long)c.excluded,
                         (unsigned long long)binom(n, R))};
    if (rep.excluded_count > rep.subset_count)
      return {false, fmt("excluded exceeds subset bound at q=%u k=%u", c.q, c.k)};
    bool want_value = rep.excluded_count < c.q;
    if (want_value != rep.value.has_value())
      return {false, fmt("value presence %d at q=%u k=%u", int(!want_value),
                         c.q, c.k)};
    if (rep.value) {
      Syndrome a(R + 1, 0);
      a[R - 1] = 1;
      a[R] = *rep.value;
      if (!is_deep_hole_syndrome(P, a).deep)
        return {false, fmt("extended tail not deep at q=%u k=%u", c.q, c.k)};
      CosetTable T = coset_weights(trs_code(P));
      if (T.weight[syndrome_key(F, a)] != n - c.k)
        return {false, fmt("extended tail fails oracle at q=%u k=%u", c.q, c.k)};
    }
  }
  return {true, fmt("%llu family words deep by criterion and oracle; "
                    "6 frozen excluded counts match",
                    (unsigned long long)families)};
}

// ---------------------------------------------------------------------------
// 6. Split-form identities: the one-point and two-point quadratic forms
//    equal criterion_lhs + a_r on full completion grids, 100 random
//    syndromes per cell at q in {7,8,9} (the splits self-verify; a run
//    with zero failed rows certifies the identity).

Outcome criterion6() {
  std::uint64_t rows = 0;
  for (std::uint32_t q : {7u, 8u, 9u}) {
    auto [p, m] = split_prime_power(q);
    RunConfig cfg;
    cfg.p = p;
    cfg.m = m;
    cfg.checks = {"eq3.6", "eq4.6"};
    cfg.eta = "all";
    Report rep = run(cfg);
    if (rep.rows.empty()) return {false, fmt("q=%u produced no rows", q)};
    for (const CheckRow& row : rep.rows) {
      if (row.status != "pass")
        return {false, fmt("q=%u row '%s' status %s", q,
                           row.params.dump().c_str(), row.status.c_str())};
      ++rows;
    }
  }
  return {true, fmt("%llu cells, 100 syndromes each, identities exact",
                    (unsigned long long)rows)};
}

// ---------------------------------------------------------------------------
// 7. Even-q small-k classification at q = 16, k in {12,13,14},
//    eta in {1, xi}: closed-form predicate equals the exhaustive coset
//    classification on every syndrome; deep counts match frozen values.
//    Budget: 600 s.

Outcome criterion7() {
  const Field& F = field_of(16);
  const std::map<std::uint32_t, std::uint64_t> frozen{{12, 15}, {13, 135}, {14, 15}};
  std::uint64_t checked = 0;
  for (std::uint32_t k : {12u, 13u, 14u}) {
    for (Fe eta = 1; eta <= 2; ++eta) {
      TrsParams P = make_trs_params(F, unit_eval_set(F), k, k - 1, eta);
      std::uint32_t len = P.n() - k;
      CosetTable T = coset_weights(trs_code(P));
      std::uint64_t deep = 0;
      for (std::uint64_t key = 0; key < T.size; ++key) {
        Syndrome a = key_syndrome(F, key, len);
        bool pred = even_small_k_is_deep(F, k, eta, a);
        bool oracle = T.weight[key] == len;
        if (pred != oracle)
          return {false, fmt("k=%u eta=%u key=%llu: predicate %d oracle %d", k,
                             unsigned(eta), (unsigned long long)key, int(pred),
                             int(oracle))};
        deep += pred;
        ++checked;
      }
      if (deep != frozen.at(k))
        return {false, fmt("k=%u eta=%u: %llu deep, frozen %llu", k,
                           unsigned(eta), (unsigned long long)deep,
                           (unsigned long long)frozen.at(k))};
    }
  }
  return {true, fmt("%llu syndromes, predicate == oracle, deep counts "
                    "15/135/15",
                    (unsigned long long)checked)};
}

// ---------------------------------------------------------------------------
// 8. Character sums, all exact: quadratic Gauss sums have |G|^2 = q;
//    quadratic complete sums match their closed forms on all coefficient
//    triples for q <= 16; Kloosterman sums meet |K|^2 <= 4q exhaustively
//    for q <= 32; conic counts match q + v(b) pi(-a1 a2) for odd q <= 13.

Outcome criterion8() {
  std::uint64_t gauss = 0;
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    const Field& F = field_of(q);
    std::uint32_t qi = quadratic_index(F);
    for (Fe a = 1; a < q; ++a) {
      Abs2 n2 = abs_square(gauss_sum(F, qi, a));
      if (!n2.exact || n2.exact_value != (long long)q)
        return {false, fmt("|G|^2 != q at q=%u a=%u", q, unsigned(a))};
      ++gauss;
    }
  }

  std::uint64_t quads = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const Field& F = field_of(q);
    for (Fe b = 1; b < q; ++b)
      for (Fe a2 = 1; a2 < q; ++a2)
        for (Fe a1 = 0; a1 < q; ++a1)
          for (Fe a0 = 0; a0 < q; ++a0) {
            QuadSumReport rep = quad_complete_sum(F, b, a2, a1, a0);
            if (!rep.match || rep.sum != rep.closed)
              return {false, fmt("quad sum mismatch at q=%u b=%u a2=%u a1=%u "
                                 "a0=%u",
                                 q, unsigned(b), unsigned(a2), unsigned(a1),
                                 unsigned(a0))};
            ++quads;
          }
  }

  std::uint64_t kloos = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u,
                          29u, 31u, 32u}) {
    const Field& F = field_of(q);
    for (Fe a = 1; a < q; ++a)
      for (Fe b = 1; b < q; ++b) {
        KloostermanReport rep = kloosterman(F, a, b);
        if (!rep.bound_ok || !rep.trace_bound_ok)
          return {false, fmt("Kloosterman bound fails at q=%u a=%u b=%u", q,
                             unsigned(a), unsigned(b))};
        ++kloos;
      }
  }

  std::uint64_t conics = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const Field& F = field_of(q);
    for (Fe a1 = 1; a1 < q; ++a1)
      for (Fe a2 = 1; a2 < q; ++a2)
        for (Fe b = 0; b < q; ++b) {
          ConicReport rep = conic_count(F, a1, a2, b);
          if (!rep.match)
            return {false, fmt("conic count mismatch at q=%u a1=%u a2=%u b=%u",
                               q, unsigned(a1), unsigned(a2), unsigned(b))};
          ++conics;
        }
  }
  return {true, fmt("%llu Gauss, %llu quadratic, %llu Kloosterman, %llu conic "
                    "instances exact",
                    (unsigned long long)gauss, (unsigned long long)quads,
                    (unsigned long long)kloos, (unsigned long long)conics)};
}

// ---------------------------------------------------------------------------
// 9. Existence-lemma witness searches: every in-range instance yields a
//    verified witness, zero search exhaustions, q in {7,9,11,13}, all eta.

Outcome criterion9() {
  std::uint64_t rows = 0;
  for (std::uint32_t q : {7u, 9u, 11u, 13u}) {
    auto [p, m] = split_prime_power(q);
    RunConfig cfg;
    cfg.p = p;
    cfg.m = m;
    cfg.checks = {"lem4.7", "lem4.8-t4", "lem4.8-witness",
                  "lem4.10", "lem4.11", "appC"};
    cfg.eta = "all";
    Report rep;
    try {
      rep = run(cfg);
    } catch (const std::exception& e) {
      return {false, fmt("q=%u search exhausted or failed: %s", q, e.what())};
    }
    if (rep.rows.empty()) return {false, fmt("q=%u produced no rows", q)};
    for (const CheckRow& row : rep.rows) {
      if (row.status != "pass")
        return {false, fmt("q=%u check %s row '%s' status %s", q,
                           row.theorem.c_str(), row.params.dump().c_str(),
                           row.status.c_str())};
      ++rows;
    }
  }
  return {true, fmt("%llu witness rows, all verified, zero exhaustions",
                    (unsigned long long)rows)};
}

// ---------------------------------------------------------------------------
// 10. Completeness ranges are vacuous for q <= 25 (verified against inline
//     range arithmetic); at q = 32, k in {25,26,27}, sampled mode with 10^4
//     non-family syndromes per (k, eta) rejects every sample.
//     Budget: 3600 s.

std::vector<std::uint32_t> inline_range(std::uint32_t q, bool even, int c,
                                        bool strict, int mult) {
  // k with t = 4k - 3q + c satisfying t (>|>=) 0 and t^2 (>|>=) mult^2 q.
  std::vector<std::uint32_t> ks;
  if ((even && q < 8) || (!even && q < 7)) return ks;
  for (std::uint32_t k = 1; k + 5 <= q; ++k) {
    long long t = 4ll * k - 3ll * q + c;
    bool pos = strict ? t > 0 : t >= 0;
    bool big = strict ? t * t > (long long)mult * mult * q
                      : t * t >= (long long)mult * mult * q;
    if (pos && big) ks.push_back(k);
  }
  return ks;
}

Outcome criterion10() {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u}) {
    const Field& F = field_of(q);
    TheoremRange r = completeness_range(F);
    std::vector<std::uint32_t> thm, abs, lem;
    if (F.odd()) {
      thm = inline_range(q, false, 5, false, 3);
      abs = thm;
      lem = thm;
    } else {
      thm = inline_range(q, true, 8, true, 2);
      abs = inline_range(q, true, 8, false, 2);
      lem = inline_range(q, true, 10, true, 2);
    }
    if (r.theorem_ks != thm || r.abstract_ks != abs || r.lemma_ks != lem)
      return {false, fmt("range mismatch against inline arithmetic at q=%u", q)};
    if (!r.theorem_ks.empty() || !r.abstract_ks.empty() || !r.lemma_ks.empty())
      return {false, fmt("range not vacuous at q=%u", q)};
  }

  const Field& F32 = field_of(32);
  TheoremRange r32 = completeness_range(F32);
  const std::vector<std::uint32_t> expect32{25, 26, 27};
  if (r32.theorem_ks != expect32 || r32.abstract_ks != expect32 ||
      r32.lemma_ks != expect32)
    return {false, "q=32 range is not {25,26,27}"};

  std::uint64_t samples = 0;
  std::uint64_t seed_used = 0;
  for (std::uint32_t k : {25u, 26u, 27u}) {
    for (Fe eta = 1; eta <= 2; ++eta) {
      TrsParams P = make_trs_params(F32, unit_eval_set(F32), k, k - 1, eta);
      ScanOptions opt;
      opt.mode = "sampled";
      opt.samples = 10000;
      opt.seed = 0xC0FFEE;
      ScanReport rep = completeness_scan(P, opt);
      if (rep.status != "sampled-consistent" || !rep.in_theorem_range)
        return {false, fmt("k=%u eta=%u status %s", k, unsigned(eta),
                           rep.status.c_str())};
      if (rep.samples_run != 10000 || rep.samples_rejected != 10000 ||
          !rep.extra_deep.empty())
        return {false, fmt("k=%u eta=%u: %llu/%llu rejected", k, unsigned(eta),
                           (unsigned long long)rep.samples_rejected,
                           (unsigned long long)rep.samples_run)};
      if (rep.seed != 0xC0FFEE)
        return {false, fmt("k=%u eta=%u: seed %llu not recorded", k,
                           unsigned(eta), (unsigned long long)rep.seed)};
      samples += rep.samples_run;
      seed_used = rep.seed;
    }
  }
  return {true, fmt("ranges vacuous through q=25; q=32 rejected %llu/%llu "
                    "samples (seed 0x%llX)",
                    (unsigned long long)samples, (unsigned long long)samples,
                    (unsigned long long)seed_used)};
}

// ---------------------------------------------------------------------------
// 11. Determinism: the criterion-3 reports are byte-identical across a
//     repeat run and across worker counts 1 and 8.

Outcome criterion11() {
  if (g_reports.size() != 4)
    return {false, "criterion 3 left no baseline reports"};
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    RunConfig cfg = syndrome_sweep_config(q);
    unsetenv("TRS_WORKERS");
    std::string again = report_json(run(cfg)).dump();
    setenv("TRS_WORKERS", "1", 1);
    std::string w1 = report_json(run(cfg)).dump();
    setenv("TRS_WORKERS", "8", 1);
    std::string w8 = report_json(run(cfg)).dump();
    unsetenv("TRS_WORKERS");
    const std::string& base = g_reports.at(q);
    if (again != base) return {false, fmt("repeat run differs at q=%u", q)};
    if (w1 != base) return {false, fmt("worker count 1 differs at q=%u", q)};
    if (w8 != base) return {false, fmt("worker count 8 differs at q=%u", q)};
  }
  return {true, "reports byte-identical across repeats and workers 1/8"};
}

struct Criterion {
  int id;
  double limit_s;  // 0 = no pinned wall-clock bound
  Outcome (*fn)();
};

}  // namespace

int main() {
  const Criterion table[] = {
      {1, 300, criterion1},  {2, 300, criterion2},  {3, 1800, criterion3},
      {4, 0, criterion4},    {5, 0, criterion5},    {6, 0, criterion6},
      {7, 600, criterion7},  {8, 0, criterion8},    {9, 0, criterion9},
      {10, 3600, criterion10}, {11, 0, criterion11},
  };
  bool all = true;
  for (const Criterion& c : table) {
    Clock::time_point t0 = Clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out = {false, fmt("unhandled exception: %s", e.what())};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      out.pass = false;
      out.detail += fmt(" [exceeded %.0f s budget]", c.limit_s);
    }
    std::printf("criterion %2d: %s  %s (%.1f s)\n", c.id,
                out.pass ? "PASS" : "FAIL", out.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && out.pass;
  }
  std::printf("acceptance: %s\n", all ? "ALL PASS" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
