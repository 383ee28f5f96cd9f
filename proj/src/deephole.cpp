#include "trs/deephole.hpp"

#include "trs/code.hpp"
#include "trs/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trs {

void require_full_length_twist(const TrsParams& P) {
  if (P.l + 1 != P.k || P.A != unit_eval_set(*P.F))
    throw std::invalid_argument("operation requires A = F_q^* and l = k-1");
}

std::uint64_t binom_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  if (n - r < r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

// Visits every R-subset of A in colexicographic order.  The stack holds
// the subset with position 0 on top, so a colex step that changes
// positions 0..i costs i+1 pops and pushes.  fn returns false to stop.
template <class Fn>
void colex_scan(const Field& F, const std::vector<Fe>& A, std::uint32_t R, Fn&& fn) {
  const std::uint32_t n = static_cast<std::uint32_t>(A.size());
  if (R > n) return;
  SymStack st(F, R);
  std::vector<std::uint32_t> idx(R);
  for (std::uint32_t i = 0; i < R; ++i) idx[i] = i;
  for (std::uint32_t i = R; i-- > 0;) st.push(A[idx[i]]);
  for (;;) {
    if (!fn(st, idx)) return;
    std::uint32_t i = 0;
    for (; i < R; ++i) {
      const std::uint32_t lim = (i + 1 < R) ? idx[i + 1] : n;
      if (idx[i] + 1 < lim) break;
    }
    if (i == R) return;
    idx[i] += 1;
    for (std::uint32_t j = 0; j < i; ++j) idx[j] = j;
    for (std::uint32_t t = 0; t <= i; ++t) st.pop();
    for (std::uint32_t t = i + 1; t-- > 0;) st.push(A[idx[t]]);
  }
}

void check_syndrome_arg(const TrsParams& P, const Syndrome& a, const char* who) {
  if (a.size() != static_cast<std::size_t>(P.r()) + 1)
    throw std::invalid_argument(std::string(who) + ": syndrome length must be n-k");
  for (Fe x : a) (void)P.F->code_of(x);
}

void check_subset_arg(const TrsParams& P, const std::vector<Fe>& subset, const char* who) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (std::find(P.A.begin(), P.A.end(), subset[i]) == P.A.end())
      throw std::invalid_argument(std::string(who) + ": subset element outside A");
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (subset[i] == subset[j])
        throw std::invalid_argument(std::string(who) + ": repeated subset element");
  }
}

} // namespace

std::vector<Fe> criterion_vector(const TrsParams& P, const std::vector<Fe>& sigma,
                                 SymStack& st) {
  const Field& F = *P.F;
  const std::uint32_t R = P.r();
  if (st.depth() != R) throw std::logic_error("criterion_vector: stack depth != n-k-1");
  const std::uint32_t d = P.k - P.l;
  std::vector<Fe> c(R + 1);
  for (std::uint32_t j = 0; j <= R; ++j) c[j] = st.c_top(j);
  const std::vector<Fe> lam = st.lambda_prime(d);
  std::vector<Fe> L(R);
  for (std::uint32_t j = 0; j < R; ++j) {
    Fe twist = 0;
    for (std::uint32_t t = 0; t <= d; ++t) {
      const Fe s = sigma[d - t];
      if (s == 0) continue;
      Fe inner = 0;
      const std::uint32_t wlo = (j > t) ? j - t : 0;
      for (std::uint32_t w = wlo; w <= j; ++w)
        inner = F.add(inner, F.mul(c[R - w], lam[t + w - j]));
      twist = F.add(twist, F.mul(s, inner));
    }
    L[j] = F.sub(c[R - j], F.mul(P.eta, twist));
  }
  return L;
}

Fe criterion_lhs(const TrsParams& P, const Syndrome& a, const std::vector<Fe>& subset) {
  const Field& F = *P.F;
  const std::uint32_t R = P.r();
  check_syndrome_arg(P, a, "criterion_lhs");
  if (subset.size() != R)
    throw std::invalid_argument("criterion_lhs: subset size must be n-k-1");
  check_subset_arg(P, subset, "criterion_lhs");
  SymStack st(F, R);
  for (Fe x : subset) st.push(x);
  const std::vector<Fe> L = criterion_vector(P, trs_sigma(P), st);
  Fe acc = 0;
  for (std::uint32_t j = 0; j < R; ++j) acc = F.add(acc, F.mul(a[j], L[j]));
  return acc;
}

DeepHoleVerdict is_deep_hole_syndrome(const TrsParams& P, const Syndrome& a,
                                      std::uint64_t subset_budget) {
  const Field& F = *P.F;
  const std::uint32_t R = P.r();
  check_syndrome_arg(P, a, "is_deep_hole_syndrome");
  if (binom_capped(P.n(), R, subset_budget) > subset_budget)
    throw std::runtime_error("is_deep_hole_syndrome: subset budget exceeded");
  const std::vector<Fe> sigma = trs_sigma(P);
  DeepHoleVerdict out;
  out.deep = true;
  colex_scan(F, P.A, R, [&](SymStack& st, const std::vector<std::uint32_t>& idx) {
    const std::vector<Fe> L = criterion_vector(P, sigma, st);
    Fe tot = a[R];
    for (std::uint32_t j = 0; j < R; ++j) tot = F.add(tot, F.mul(a[j], L[j]));
    if (tot == 0) {
      out.deep = false;
      out.witness = idx;
      return false;
    }
    return true;
  });
  return out;
}

std::vector<std::uint8_t> deep_syndrome_set(const TrsParams& P) {
  const Field& F = *P.F;
  const std::uint32_t q = F.q();
  const std::uint32_t R = P.r();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i <= R; ++i) {
    if (total > (1ull << 28)) throw std::runtime_error("deep_syndrome_set: syndrome space too large");
    total *= q;
  }
  std::vector<std::uint8_t> mark(total, 1);
  const std::uint64_t prefix_count = total / q;
  const std::vector<Fe> sigma = trs_sigma(P);
  std::vector<Fe> negt(q);
  for (Fe v = 0; v < q; ++v) negt[v] = F.neg(v);
  colex_scan(F, P.A, R, [&](SymStack& st, const std::vector<std::uint32_t>&) {
    const std::vector<Fe> L = criterion_vector(P, sigma, st);
    std::vector<std::vector<Fe>> val(R, std::vector<Fe>(q)), dec(R, std::vector<Fe>(q));
    for (std::uint32_t i = 0; i < R; ++i)
      for (Fe v = 0; v < q; ++v) {
        val[i][v] = F.mul(v, L[i]);
        dec[i][v] = F.neg(val[i][v]);
      }
    auto walk = [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<Fe> dig(R, 0);
      std::uint64_t t = lo;
      for (std::uint32_t i = 0; i < R; ++i) {
        dig[i] = static_cast<Fe>(t % q);
        t /= q;
      }
      Fe dot = 0;
      for (std::uint32_t i = 0; i < R; ++i) dot = F.add(dot, val[i][dig[i]]);
      for (std::uint64_t x = lo; x < hi; ++x) {
        mark[x + static_cast<std::uint64_t>(negt[dot]) * prefix_count] = 0;
        if (x + 1 == hi) break;
        std::uint32_t i = 0;
        for (;;) {
          const Fe dv = dig[i];
          dot = F.add(dot, dec[i][dv]);
          if (dv + 1 < q) {
            dig[i] = dv + 1;
            dot = F.add(dot, val[i][dv + 1]);
            break;
          }
          dig[i] = 0;
          ++i;
        }
      }
    };
#ifdef _OPENMP
#pragma omp parallel
    {
      const std::uint64_t nth = static_cast<std::uint64_t>(omp_get_num_threads());
      const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
      const std::uint64_t chunk = (prefix_count + nth - 1) / nth;
      const std::uint64_t lo = tid * chunk;
      const std::uint64_t hi = std::min(prefix_count, lo + chunk);
      if (lo < hi) walk(lo, hi);
    }
#else
    walk(0, prefix_count);
#endif
    return true;
  });
  return mark;
}

std::vector<std::uint8_t> deep_syndrome_set_serial(const TrsParams& P) {
  const Field& F = *P.F;
  const std::uint32_t q = F.q();
  const std::uint32_t R = P.r();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i <= R; ++i) {
    if (total > (1ull << 24)) throw std::runtime_error("deep_syndrome_set_serial: syndrome space too large");
    total *= q;
  }
  std::vector<std::uint8_t> mark(total);
  for (std::uint64_t key = 0; key < total; ++key) {
    const Syndrome a = key_syndrome(F, key, R + 1);
    mark[key] = is_deep_hole_syndrome(P, a, ~0ull / 2).deep ? 1 : 0;
  }
  return mark;
}

Word reconstruct(const TrsParams& P, const Syndrome& a) {
  const Field& F = *P.F;
  const std::uint32_t n = P.n();
  const std::uint32_t R = P.r();
  const std::uint32_t d = P.k - P.l;
  check_syndrome_arg(P, a, "reconstruct");
  const std::vector<Fe> sigma = trs_sigma(P);
  const std::vector<Fe> lam = trs_lambda(P, R + d);
  std::vector<Fe> b(R + 1, 0);
  for (std::uint32_t i = 0; i <= R; ++i)
    for (std::uint32_t j = 0; j <= i; ++j)
      b[i] = F.add(b[i], F.mul(sigma[i - j], a[j]));
  Poly h(n, 0);
  for (std::uint32_t i = 0; i <= R; ++i) h[n - 1 - i] = F.add(h[n - 1 - i], b[i]);
  Fe ck = 0;
  for (std::uint32_t i = 0; i < R; ++i) {
    Fe inner = 0;
    for (std::uint32_t w = 0; w <= d; ++w)
      inner = F.add(inner, F.mul(sigma[d - w], lam[R - i + w]));
    ck = F.add(ck, F.mul(b[i], inner));
  }
  h[P.k] = F.add(h[P.k], F.mul(P.eta, ck));
  poly_trim(h);
  Word u(n);
  for (std::uint32_t i = 0; i < n; ++i) u[i] = poly_eval(F, h, P.A[i]);
  if (trs_syndrome(P, u) != a)
    throw std::logic_error("reconstruct: syndrome mismatch");
  return u;
}

Word deep_hole_word(const TrsParams& P, const Syndrome& a, const Word& message) {
  const Field& F = *P.F;
  if (!is_deep_hole_syndrome(P, a).deep)
    throw std::invalid_argument("deep_hole_word: syndrome is not a deep hole");
  const Word u = reconstruct(P, a);
  const Word cw = trs_encode(P, message);
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = F.add(u[i], cw[i]);
  return out;
}

UnitTailReport unit_tail_deep_search(const TrsParams& P, std::uint64_t subset_budget) {
  const Field& F = *P.F;
  const std::uint32_t R = P.r();
  if (R < 1) throw std::invalid_argument("unit_tail_deep_search: needs n-k >= 2");
  if (binom_capped(P.n(), R, subset_budget) > subset_budget)
    throw std::runtime_error("unit_tail_deep_search: subset budget exceeded");
  const std::vector<Fe> sigma = trs_sigma(P);
  UnitTailReport rep;
  rep.excluded.assign(F.q(), 0);
  colex_scan(F, P.A, R, [&](SymStack& st, const std::vector<std::uint32_t>&) {
    const std::vector<Fe> L = criterion_vector(P, sigma, st);
    rep.excluded[F.neg(L[R - 1])] = 1;
    ++rep.subset_count;
    return true;
  });
  for (std::uint32_t v = 0; v < F.q(); ++v)
    if (rep.excluded[v]) ++rep.excluded_count;
  for (std::uint32_t v = 0; v < F.q(); ++v)
    if (!rep.excluded[v]) {
      rep.value = static_cast<Fe>(v);
      break;
    }
  return rep;
}

std::vector<Fe> twist_prefix_sums(const TrsParams& P, const Syndrome& a,
                                  const std::vector<Fe>& prefix, std::uint32_t count) {
  const Field& F = *P.F;
  const std::uint32_t r = P.r();
  check_syndrome_arg(P, a, "twist_prefix_sums");
  SymStack st(F, r + 2);
  for (Fe x : prefix) st.push(x);
  const std::uint32_t len = static_cast<std::uint32_t>(prefix.size());
  std::vector<Fe> out(count, 0);
  for (std::uint32_t t = 1; t <= count; ++t) {
    Fe acc = 0;
    for (std::uint32_t j = 0; j < r; ++j) {
      const int e = static_cast<int>(r) - static_cast<int>(j) + 2 - static_cast<int>(t);
      if (e < 0) continue;
      const Fe s = st.S_at(static_cast<std::uint32_t>(e), len);
      if (s == 0) continue;
      Fe term = F.mul(a[j], s);
      if (e % 2 == 1) term = F.neg(term);
      acc = F.add(acc, term);
    }
    out[t - 1] = F.mul(P.eta, acc);
  }
  return out;
}

Fe last_var_quad(const Field& F, const LastVarSplit& sp, Fe x) {
  return F.add(F.add(F.mul(sp.f3, F.mul(x, x)), F.mul(sp.lin, x)), sp.g);
}

LastVarSplit last_var_split(const TrsParams& P, const Syndrome& a,
                            const std::vector<Fe>& prefix, Fe x_r) {
  require_full_length_twist(P);
  const Field& F = *P.F;
  const std::uint32_t r = P.r();
  if (r < 1) throw std::invalid_argument("last_var_split: needs n-k >= 2");
  check_syndrome_arg(P, a, "last_var_split");
  if (prefix.size() + 1 != r)
    throw std::invalid_argument("last_var_split: prefix length must be r-1");
  std::vector<Fe> subset(prefix);
  subset.push_back(x_r);
  check_subset_arg(P, subset, "last_var_split");

  const std::vector<Fe> f = twist_prefix_sums(P, a, prefix, 3);
  LastVarSplit sp;
  sp.f1 = f[0];
  sp.f2 = f[1];
  sp.f3 = f[2];
  for (Fe x : prefix) sp.s1 = F.add(sp.s1, x);
  const Fe etainv = F.inv(P.eta);
  sp.lin = F.mul(sp.f3, F.sub(sp.s1, etainv));
  sp.g = F.add(F.sub(F.sub(F.mul(etainv, sp.f2), sp.f1), F.mul(sp.s1, sp.f2)), a[r]);

  auto check_at = [&](Fe x) {
    subset.back() = x;
    const Fe want = F.add(criterion_lhs(P, a, subset), a[r]);
    if (last_var_quad(F, sp, x) != want)
      throw std::logic_error("last_var_split: quadratic does not match the criterion");
  };
  if (F.q() <= 16) {
    for (Fe x : unit_eval_set(F))
      if (std::find(prefix.begin(), prefix.end(), x) == prefix.end()) check_at(x);
  } else {
    check_at(x_r);
  }
  return sp;
}

Fe pair_form(const Field& F, const PairSplit& sp, Fe x_rm1, Fe x_r) {
  const Fe gy = F.sub(sp.g3, F.mul(sp.g4, x_r));
  const Fe s = F.add(x_rm1, x_r);
  Fe acc = F.mul(gy, F.mul(s, s));
  acc = F.add(acc, F.mul(F.mul(F.sub(sp.beta0, x_r), gy), s));
  acc = F.add(acc, F.mul(F.add(F.mul(sp.g4, sp.beta0), sp.g3), F.mul(x_r, x_r)));
  acc = F.sub(acc, F.mul(sp.g2, sp.beta0));
  acc = F.sub(acc, sp.g1);
  return F.add(acc, sp.a_r);
}

PairSplit pair_split(const TrsParams& P, const Syndrome& a,
                     const std::vector<Fe>& prefix, Fe x_rm1, Fe x_r) {
  require_full_length_twist(P);
  const Field& F = *P.F;
  const std::uint32_t r = P.r();
  if (r < 2) throw std::invalid_argument("pair_split: needs n-k >= 3");
  check_syndrome_arg(P, a, "pair_split");
  if (prefix.size() + 2 != r)
    throw std::invalid_argument("pair_split: prefix length must be r-2");
  std::vector<Fe> subset(prefix);
  subset.push_back(x_rm1);
  subset.push_back(x_r);
  check_subset_arg(P, subset, "pair_split");

  const std::vector<Fe> g = twist_prefix_sums(P, a, prefix, 4);
  PairSplit sp;
  sp.g1 = g[0];
  sp.g2 = g[1];
  sp.g3 = g[2];
  sp.g4 = g[3];
  Fe s1 = 0;
  for (Fe x : prefix) s1 = F.add(s1, x);
  sp.beta0 = F.sub(s1, F.inv(P.eta));
  sp.a_r = a[r];

  auto check_at = [&](Fe x, Fe y) {
    subset[subset.size() - 2] = x;
    subset.back() = y;
    const Fe want = F.add(criterion_lhs(P, a, subset), a[r]);
    if (pair_form(F, sp, x, y) != want)
      throw std::logic_error("pair_split: bivariate form does not match the criterion");
  };
  if (F.q() <= 16) {
    for (Fe x : unit_eval_set(F)) {
      if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) continue;
      for (Fe y : unit_eval_set(F)) {
        if (y == x) continue;
        if (std::find(prefix.begin(), prefix.end(), y) != prefix.end()) continue;
        check_at(x, y);
      }
    }
  } else {
    check_at(x_rm1, x_r);
  }
  return sp;
}

Fe even_vanishing_product(const TrsParams& P, const Syndrome& a,
                          const std::vector<Fe>& xs) {
  require_full_length_twist(P);
  const Field& F = *P.F;
  if (F.odd()) throw std::invalid_argument("even_vanishing_product: even q only");
  const std::uint32_t r = P.r();
  if (r < 3) throw std::invalid_argument("even_vanishing_product: needs r >= 3");
  check_syndrome_arg(P, a, "even_vanishing_product");
  if (xs.size() + 2 != r)
    throw std::invalid_argument("even_vanishing_product: needs r-2 points");
  for (Fe x : xs)
    if (x == 0 || x >= F.q())
      throw std::invalid_argument("even_vanishing_product: points must be nonzero");

  Fe van = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      van = F.mul(van, F.sub(xs[j], xs[i]));
  Fe s1 = 0;
  for (Fe x : xs) s1 = F.add(s1, x);
  const Fe beta = F.add(F.inv(P.eta), s1);
  std::vector<Fe> pre(xs);
  pre.push_back(beta);
  const std::vector<Fe> f = twist_prefix_sums(P, a, pre, 3);
  const Fe g = F.add(f[0], a[r]);
  Fe acc = van;
  for (Fe x : xs) acc = F.mul(acc, F.add(beta, x));
  acc = F.mul(acc, f[2]);
  acc = F.mul(acc, g);
  acc = F.mul(acc, F.add(F.mul(f[2], F.mul(beta, beta)), g));
  for (Fe x : xs) acc = F.mul(acc, F.add(F.mul(f[2], F.mul(x, x)), g));
  return acc;
}

bool even_small_k_is_deep(const Field& F, std::uint32_t k, Fe eta, const Syndrome& a) {
  const std::uint32_t q = F.q();
  if (F.odd() || q < 16)
    throw std::invalid_argument("even_small_k_is_deep: needs even q >= 16");
  if (eta == 0 || eta >= q) throw std::invalid_argument("even_small_k_is_deep: bad eta");
  if (k != q - 2 && k != q - 3 && k != q - 4)
    throw std::invalid_argument("even_small_k_is_deep: k must be q-2, q-3 or q-4");
  if (a.size() != static_cast<std::size_t>(q - 1 - k))
    throw std::invalid_argument("even_small_k_is_deep: syndrome length must be n-k");
  for (Fe x : a) (void)F.code_of(x);
  if (k == q - 2) return a[0] != 0;
  if (k == q - 3) {
    if (a[0] == 0) return a[1] != 0;
    return F.trace_int(F.div(F.mul(a[1], eta), a[0])) == 1;
  }
  if (a[0] == 0 && a[1] == 0) return a[2] != 0;
  if (a[0] == 0 && a[1] != 0) return F.m() % 2 == 1 && a[2] == F.div(a[1], eta);
  return false;
}

bool in_syndrome_family(const Field& F, std::uint32_t r, Fe eta,
                        const Syndrome& a, SyndromeFamily fam) {
  if (!F.odd()) throw std::invalid_argument("in_syndrome_family: odd q only");
  if (eta == 0 || eta >= F.q()) throw std::invalid_argument("in_syndrome_family: bad eta");
  if (a.size() != static_cast<std::size_t>(r) + 1)
    throw std::invalid_argument("in_syndrome_family: syndrome length must be r+1");
  for (Fe x : a) (void)F.code_of(x);
  switch (fam) {
    case SyndromeFamily::corollary_tail: {
      for (std::uint32_t j = 0; j < r; ++j)
        if (a[j] != 0) return false;
      return a[r] != 0;
    }
    case SyndromeFamily::tail_pair: {
      if (r < 1) throw std::invalid_argument("tail_pair family requires r >= 1");
      for (std::uint32_t j = 0; j + 1 < r; ++j)
        if (a[j] != 0) return false;
      return true;
    }
    case SyndromeFamily::head_only: {
      if (a[0] == 0) return false;
      for (std::uint32_t j = 1; j <= r; ++j)
        if (a[j] != 0) return false;
      return true;
    }
    case SyndromeFamily::quartet: {
      if (r != 3) throw std::invalid_argument("quartet family requires r = 3");
      const Fe b = a[2];
      if (b == 0 || a[0] != 0) return false;
      const Fe two = F.from_code(2 % F.p());
      const Fe four = F.mul(two, two);
      return a[1] == F.mul(two, F.mul(b, eta)) && a[3] == F.div(b, F.mul(four, eta));
    }
    case SyndromeFamily::geometric: {
      if (r < 1) throw std::invalid_argument("geometric family requires r >= 1");
      if (a[0] == 0 || a[1] == 0) return false;
      const Fe M = F.div(a[1], a[0]);
      Fe pw = 1;
      for (std::uint32_t j = 0; j < r; ++j) {
        if (a[j] != F.mul(a[0], pw)) return false;
        pw = F.mul(pw, M);
      }
      const Fe tail = F.mul(a[0], F.sub(pw, F.mul(eta, F.mul(pw, M))));
      return a[r] == tail;
    }
  }
  throw std::invalid_argument("in_syndrome_family: unknown family");
}

namespace {

bool gt_two_sqrt(std::uint64_t q, std::int64_t t) {
  return t > 0 && static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t) > 4 * q;
}
bool ge_two_sqrt(std::uint64_t q, std::int64_t t) {
  return t >= 0 && static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t) >= 4 * q;
}
bool ge_three_sqrt(std::uint64_t q, std::int64_t t) {
  return t >= 0 && static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t) >= 9 * q;
}

} // namespace

TheoremRange completeness_range(const Field& F) {
  TheoremRange out;
  out.q = F.q();
  out.even = !F.odd();
  const std::int64_t q = F.q();
  const std::int64_t qmin = out.even ? 8 : 7;
  if (q < qmin) return out;
  for (std::int64_t k = 1; k <= q - 5; ++k) {
    if (out.even) {
      if (gt_two_sqrt(q, 4 * k - 3 * q + 8)) out.theorem_ks.push_back(k);
      if (ge_two_sqrt(q, 4 * k - 3 * q + 8)) out.abstract_ks.push_back(k);
      if (gt_two_sqrt(q, 4 * k - 3 * q + 10)) out.lemma_ks.push_back(k);
    } else if (ge_three_sqrt(q, 4 * k - 3 * q + 5)) {
      out.theorem_ks.push_back(k);
      out.abstract_ks.push_back(k);
      out.lemma_ks.push_back(k);
    }
  }
  return out;
}

ScanReport completeness_scan(const TrsParams& P, const ScanOptions& opt) {
  require_full_length_twist(P);
  const Field& F = *P.F;
  const std::uint32_t q = F.q();
  const std::uint32_t R = P.r();
  ScanReport rep;
  rep.q = q;
  rep.k = P.k;
  rep.r = R;
  rep.eta = P.eta;
  rep.mode = opt.mode;
  rep.seed = opt.seed;
  rep.family_count = q - 1;
  const TheoremRange tr = completeness_range(F);
  auto has = [&](const std::vector<std::uint32_t>& v) {
    return std::find(v.begin(), v.end(), P.k) != v.end();
  };
  rep.in_theorem_range = has(tr.theorem_ks);
  rep.in_abstract_range = has(tr.abstract_ks);
  rep.in_lemma_range = has(tr.lemma_ks);

  auto is_family = [&](const Syndrome& a) {
    for (std::uint32_t j = 0; j < R; ++j)
      if (a[j] != 0) return false;
    return a[R] != 0;
  };

  if (opt.mode == "exhaustive") {
    unsigned __int128 cost = binom_capped(P.n(), R, opt.budget);
    for (std::uint32_t i = 0; i <= R; ++i) {
      cost *= q;
      if (cost > opt.budget)
        throw std::runtime_error("completeness_scan: exhaustive budget exceeded");
    }
    const std::vector<std::uint8_t> deep = deep_syndrome_set(P);
    rep.total = deep.size();
    std::uint64_t family_deep = 0;
    for (std::uint64_t key = 0; key < deep.size(); ++key) {
      if (!deep[key]) continue;
      ++rep.deep_count;
      const Syndrome a = key_syndrome(F, key, R + 1);
      if (is_family(a)) {
        ++family_deep;
      } else if (rep.extra_deep.size() < 32) {
        rep.extra_deep.push_back(a);
      }
    }
    const bool equal = family_deep == rep.family_count && rep.deep_count == rep.family_count;
    rep.status = !rep.in_theorem_range ? "vacuous" : (equal ? "pass" : "fail");
  } else if (opt.mode == "sampled") {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      Syndrome a(R + 1);
      do {
        for (std::uint32_t i = 0; i <= R; ++i) a[i] = dist(rng);
      } while (is_family(a));
      ++rep.samples_run;
      if (!is_deep_hole_syndrome(P, a, opt.budget).deep) {
        ++rep.samples_rejected;
      } else if (rep.extra_deep.size() < 32) {
        rep.extra_deep.push_back(a);
      }
    }
    if (!rep.in_theorem_range)
      rep.status = "vacuous";
    else
      rep.status = rep.samples_rejected == rep.samples_run ? "sampled-consistent" : "fail";
  } else {
    throw std::invalid_argument("completeness_scan: mode must be exhaustive or sampled");
  }
  return rep;
}

} // namespace trs
