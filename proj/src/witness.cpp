#include "trs/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace trs {

namespace {

void require_odd(const Field& F, const char* who) {
  if (!F.odd()) throw std::invalid_argument(std::string(who) + ": odd q only");
}

bool contains(const std::vector<Fe>& v, Fe x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Fe first_unit_avoiding(const Field& F, const std::vector<Fe>& avoid, const char* who) {
  for (Fe u = 1; u < F.q(); ++u)
    if (!contains(avoid, u)) return u;
  throw std::runtime_error(std::string(who) + ": no admissible unit left");
}

// Visits r-subsets of the units in colexicographic order until fn
// returns true; reports whether any call succeeded.
template <class Fn>
bool colex_unit_subsets(const Field& F, std::uint32_t r, Fn&& fn) {
  const std::uint32_t n = F.q() - 1;
  if (r > n) return false;
  std::vector<std::uint32_t> idx(r);
  for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Fe> xs(r);
  for (;;) {
    for (std::uint32_t i = 0; i < r; ++i) xs[i] = static_cast<Fe>(idx[i] + 1);
    if (fn(xs)) return true;
    std::uint32_t i = 0;
    for (; i < r; ++i) {
      const std::uint32_t lim = (i + 1 < r) ? idx[i + 1] : n;
      if (idx[i] + 1 < lim) break;
    }
    if (i == r) return false;
    idx[i] += 1;
    for (std::uint32_t j = 0; j < i; ++j) idx[j] = j;
  }
}

} // namespace

std::vector<Fe> square_roots(const Field& F, Fe t) {
  require_odd(F, "square_roots");
  (void)F.code_of(t);
  if (t == 0) return {0};
  const std::uint32_t e = t - 1;
  if (e % 2 != 0) return {};
  const std::uint32_t h = e / 2;
  const Fe r1 = static_cast<Fe>(h + 1);
  const Fe r2 = static_cast<Fe>((h + (F.q() - 1) / 2) % (F.q() - 1) + 1);
  std::vector<Fe> out{r1, r2};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Fe> quad_roots(const Field& F, Fe a, Fe b, Fe c) {
  require_odd(F, "quad_roots");
  if (a == 0) {
    if (b == 0) return {};
    return {F.neg(F.div(c, b))};
  }
  const Fe four = F.from_code(4 % F.p());
  const Fe D = F.sub(F.mul(b, b), F.mul(four, F.mul(a, c)));
  const Fe inv2a = F.inv(F.mul(F.from_code(2 % F.p()), a));
  std::vector<Fe> out;
  for (Fe s : square_roots(F, D)) {
    out.push_back(F.mul(F.sub(s, b), inv2a));
    out.push_back(F.mul(F.sub(F.neg(s), b), inv2a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Fe> sum_subset_witness(const Field& F, std::uint32_t r, Fe eta) {
  require_odd(F, "sum_subset_witness");
  if (eta == 0 || eta >= F.q()) throw std::invalid_argument("sum_subset_witness: bad eta");
  if (r < 3 || r > F.q() - 2)
    throw std::invalid_argument("sum_subset_witness: needs 3 <= r <= q-2");
  std::vector<Fe> xs(r);
  for (std::uint32_t i = 0; i < r; ++i) xs[i] = static_cast<Fe>(i + 1);
  Fe s = 0;
  for (Fe x : xs) s = F.add(s, x);
  if (s == 0) {
    std::vector<Fe> bad{F.neg(xs[0])};
    for (std::uint32_t i = 1; i < r; ++i) bad.push_back(F.sub(xs[i], xs[0]));
    const Fe b = first_unit_avoiding(F, bad, "sum_subset_witness");
    xs[0] = F.add(xs[0], b);
    s = b;
  }
  const Fe t = F.inv(F.mul(eta, s));
  for (Fe& x : xs) x = F.mul(x, t);
  return xs;
}

Syndrome quartet_syndrome(const Field& F, Fe b, Fe eta) {
  require_odd(F, "quartet_syndrome");
  const Fe two = F.from_code(2 % F.p());
  const Fe four = F.mul(two, two);
  return {0, F.mul(two, F.mul(b, eta)), b, F.div(b, F.mul(four, eta))};
}

Syndrome geometric_syndrome(const Field& F, Fe a0, Fe a1, std::uint32_t r, Fe eta) {
  if (a0 == 0 || a1 == 0) throw std::invalid_argument("geometric_syndrome: a0, a1 nonzero");
  const Fe M = F.div(a1, a0);
  Syndrome a(r + 1);
  Fe pw = 1;
  for (std::uint32_t j = 0; j < r; ++j) {
    a[j] = F.mul(a0, pw);
    pw = F.mul(pw, M);
  }
  a[r] = F.mul(a0, F.sub(pw, F.mul(eta, F.mul(pw, M))));
  return a;
}

QuartetWitness quartet_witness(const Field& F, Fe eta) {
  require_odd(F, "quartet_witness");
  if (F.q() < 7) throw std::invalid_argument("quartet_witness: needs q >= 7");
  if (eta == 0 || eta >= F.q()) throw std::invalid_argument("quartet_witness: bad eta");
  const Fe two = F.from_code(2 % F.p());
  const Fe inv2e = F.inv(F.mul(two, eta));
  const Fe inv4e = F.inv(F.mul(F.mul(two, two), eta));
  QuartetWitness w;
  w.excluded = {F.neg(inv2e), F.neg(inv4e), F.neg(F.inv(eta)), inv2e};
  w.alpha = first_unit_avoiding(F, w.excluded, "quartet_witness");
  w.subset = {F.add(inv2e, w.alpha), F.neg(w.alpha), F.neg(inv2e)};
  return w;
}

Fe quadric_value(const Field& F, const std::vector<Fe>& xs, Fe eta, Fe b) {
  const std::vector<Fe> c = sigma_seq(F, xs);
  Fe v = F.sub(c[1], F.mul(eta, c[2]));
  v = F.add(v, F.mul(eta, F.mul(c[1], c[1])));
  return F.add(v, b);
}

namespace {

// x_{r-1} = X + Y, x_r = X - Y appended to the prefix when the five
// distinctness constraints hold.
std::optional<std::vector<Fe>> try_pair(const Field& F, const std::vector<Fe>& pre,
                                        Fe X, Fe Y) {
  const Fe xr1 = F.add(X, Y);
  const Fe xr = F.sub(X, Y);
  if (xr1 == 0 || xr == 0 || xr1 == xr || contains(pre, xr1) || contains(pre, xr))
    return std::nullopt;
  std::vector<Fe> out(pre);
  out.push_back(xr1);
  out.push_back(xr);
  return out;
}

std::optional<std::vector<Fe>> guided_quadric_witness(const Field& F, Fe b,
                                                      std::uint32_t r, Fe eta) {
  const Fe three = F.from_code(3 % F.p());
  const Fe two = F.from_code(2 % F.p());
  std::vector<Fe> base(r - 3);
  for (std::uint32_t i = 0; i + 3 < r; ++i) base[i] = static_cast<Fe>(i + 1);
  Fe s13 = 0;
  for (Fe x : base) s13 = F.add(s13, x);
  for (Fe xr2 = 1; xr2 < F.q(); ++xr2) {
    if (contains(base, xr2) || xr2 == F.sub(F.inv(eta), s13)) continue;
    std::vector<Fe> pre(base);
    pre.push_back(xr2);
    Fe S1 = F.add(s13, xr2);
    Fe S2 = 0;
    for (std::size_t i = 0; i < pre.size(); ++i)
      for (std::size_t j = i + 1; j < pre.size(); ++j)
        S2 = F.add(S2, F.mul(pre[i], pre[j]));
    const Fe lin = F.sub(F.mul(eta, S1), 1);
    if (lin == 0) continue;
    Fe f = F.sub(F.neg(S1), F.mul(eta, S2));
    f = F.add(f, F.mul(eta, F.mul(S1, S1)));
    f = F.add(f, b);
    if (F.p() == 3) {
      for (Fe Y = 1; Y < F.q(); ++Y) {
        const Fe X = F.neg(F.div(F.add(F.mul(eta, F.mul(Y, Y)), f), F.mul(two, lin)));
        if (auto cand = try_pair(F, pre, X, Y)) return cand;
      }
    } else {
      const Fe shift = F.div(F.mul(lin, lin), F.mul(three, eta));
      if (F.sub(f, shift) == 0) continue;
      for (Fe X = 0; X < F.q(); ++X) {
        Fe t = F.add(F.mul(three, F.mul(eta, F.mul(X, X))), F.mul(two, F.mul(lin, X)));
        t = F.neg(F.div(F.add(t, f), eta));
        for (Fe Y : square_roots(F, t)) {
          if (Y == 0) continue;
          if (auto cand = try_pair(F, pre, X, Y)) return cand;
        }
      }
    }
    break; // one admissible x_{r-2} gets the single guided attempt
  }
  return std::nullopt;
}

} // namespace

QuadricWitness quadric_witness(const Field& F, Fe b, std::uint32_t r, Fe eta) {
  require_odd(F, "quadric_witness");
  if (eta == 0 || eta >= F.q()) throw std::invalid_argument("quadric_witness: bad eta");
  (void)F.code_of(b);
  if (r < 3 || r > F.q() - 2)
    throw std::invalid_argument("quadric_witness: needs 3 <= r <= q-2");
  QuadricWitness out;
  if (auto w = guided_quadric_witness(F, b, r, eta)) {
    out.subset = *w;
    out.guided = true;
    return out;
  }
  const bool found = colex_unit_subsets(F, r, [&](const std::vector<Fe>& xs) {
    if (quadric_value(F, xs, eta, b) != 0) return false;
    out.subset = xs;
    return true;
  });
  if (!found) throw std::runtime_error("quadric_witness: search exhausted");
  out.guided = false;
  return out;
}

std::vector<Fe> geometric_rejection_subset(const TrsParams& P, const Syndrome& a) {
  require_full_length_twist(P);
  const Field& F = *P.F;
  require_odd(F, "geometric_rejection_subset");
  const std::uint32_t r = P.r();
  if (!in_syndrome_family(F, r, P.eta, a, SyndromeFamily::geometric))
    throw std::invalid_argument("geometric_rejection_subset: syndrome is not geometric");
  const Fe M = F.div(a[1], a[0]);
  std::vector<Fe> subset{M};
  for (Fe u = 1; u < F.q() && subset.size() < r; ++u)
    if (u != M) subset.push_back(u);
  if (subset.size() != r)
    throw std::runtime_error("geometric_rejection_subset: not enough units");
  if (F.add(criterion_lhs(P, a, subset), a[r]) != 0)
    throw std::logic_error("geometric_rejection_subset: subset does not reject");
  return subset;
}

namespace {

void require_greedy_range(const Field& F, std::uint32_t i, std::uint32_t j, const char* who) {
  require_odd(F, who);
  if (j < 1 || j + 1 > i || i > F.q() - 4)
    throw std::invalid_argument(std::string(who) + ": needs 1 <= j <= i-1 <= q-5");
}

Fe S_of(const Field& F, const std::vector<Fe>& xs, std::uint32_t i) {
  const std::vector<Fe> S = elementary_symmetric(F, xs);
  return i < S.size() ? S[i] : 0;
}

} // namespace

std::vector<Fe> greedy_nonzero_pair(const Field& F, std::uint32_t i, std::uint32_t j) {
  require_greedy_range(F, i, j, "greedy_nonzero_pair");
  std::vector<Fe> xs(i - j);
  for (std::uint32_t t = 0; t < i - j; ++t) xs[t] = static_cast<Fe>(t + 1);
  for (std::uint32_t l = 1; l < j; ++l) {
    const std::vector<Fe> S = elementary_symmetric(F, xs);
    const Fe denom = S[l - 1];
    if (denom == 0) throw std::logic_error("greedy_nonzero_pair: vanishing pivot");
    std::vector<Fe> avoid(xs);
    avoid.push_back(F.neg(F.div(l < S.size() ? S[l] : 0, denom)));
    const Fe x = first_unit_avoiding(F, avoid, "greedy_nonzero_pair");
    xs.push_back(x);
    if (S_of(F, xs, l) == 0) throw std::logic_error("greedy_nonzero_pair: step invariant failed");
  }
  const std::vector<Fe> S = elementary_symmetric(F, xs);
  if (xs.size() != i - 1 || S[j - 1] == 0)
    throw std::logic_error("greedy_nonzero_pair: prefix invariant failed");
  auto at = [&](std::uint32_t t) { return t < S.size() ? S[t] : 0; };
  std::vector<Fe> avoid(xs);
  avoid.push_back(F.neg(F.div(at(j), at(j - 1))));
  for (Fe rt : quad_roots(F, at(j - 1), F.mul(at(1), at(j - 1)),
                          F.sub(F.mul(at(1), at(j)), at(j + 1))))
    avoid.push_back(rt);
  xs.push_back(first_unit_avoiding(F, avoid, "greedy_nonzero_pair"));
  return xs;
}

std::vector<Fe> greedy_discriminant(const Field& F, std::uint32_t i, std::uint32_t j) {
  require_greedy_range(F, i, j, "greedy_discriminant");
  std::vector<Fe> xs(i - j);
  for (std::uint32_t t = 0; t < i - j; ++t) xs[t] = static_cast<Fe>(t + 1);
  {
    const std::vector<Fe> S = elementary_symmetric(F, xs);
    auto at = [&](std::uint32_t t) { return t < S.size() ? S[t] : 0; };
    std::vector<Fe> avoid(xs);
    for (Fe rt : quad_roots(F, 1, at(1), F.sub(F.mul(at(1), at(1)), at(2))))
      avoid.push_back(rt);
    xs.push_back(first_unit_avoiding(F, avoid, "greedy_discriminant"));
  }
  for (std::uint32_t l = 2; l <= j; ++l) {
    const std::vector<Fe> S = elementary_symmetric(F, xs);
    auto at = [&](std::uint32_t t) { return t < S.size() ? S[t] : 0; };
    const Fe lead = F.sub(F.mul(at(l - 1), at(l - 1)), F.mul(at(l - 2), at(l)));
    if (lead == 0 || at(l - 2) == 0)
      throw std::logic_error("greedy_discriminant: step invariant failed");
    const Fe mid = F.sub(F.mul(at(l), at(l - 1)), F.mul(at(l - 2), at(l + 1)));
    const Fe cons = F.sub(F.mul(at(l), at(l)), F.mul(at(l - 1), at(l + 1)));
    std::vector<Fe> avoid(xs);
    avoid.push_back(F.neg(F.div(at(l - 1), at(l - 2))));
    for (Fe rt : quad_roots(F, lead, mid, cons)) avoid.push_back(rt);
    xs.push_back(first_unit_avoiding(F, avoid, "greedy_discriminant"));
  }
  return xs;
}

bool in_any_syndrome_family(const Field& F, std::uint32_t r, Fe eta, const Syndrome& a) {
  if (r == 3 && in_syndrome_family(F, r, eta, a, SyndromeFamily::quartet)) return true;
  if (in_syndrome_family(F, r, eta, a, SyndromeFamily::tail_pair)) return true;
  if (in_syndrome_family(F, r, eta, a, SyndromeFamily::head_only)) return true;
  return in_syndrome_family(F, r, eta, a, SyndromeFamily::geometric);
}

std::optional<PrefixGammaWitness> prefix_gamma_witness(const TrsParams& P, const Syndrome& a) {
  require_full_length_twist(P);
  const Field& F = *P.F;
  require_odd(F, "prefix_gamma_witness");
  const std::uint32_t r = P.r();
  if (r < 3) throw std::invalid_argument("prefix_gamma_witness: needs r >= 3");
  if (a.size() != static_cast<std::size_t>(r) + 1)
    throw std::invalid_argument("prefix_gamma_witness: syndrome length must be r+1");
  const Fe etainv = F.inv(P.eta);
  std::optional<PrefixGammaWitness> out;
  colex_unit_subsets(F, r - 2, [&](const std::vector<Fe>& pre) {
    for (Fe gamma = 1; gamma < F.q(); ++gamma) {
      std::vector<Fe> scaled(pre);
      for (Fe& x : scaled) x = F.mul(gamma, x);
      const std::vector<Fe> g = twist_prefix_sums(P, a, scaled, 4);
      if (g[3] == 0) continue;
      Fe s1 = 0;
      for (Fe x : scaled) s1 = F.add(s1, x);
      const Fe b0 = F.sub(s1, etainv);
      const Fe g4s = F.mul(g[3], g[3]);
      Fe v = F.mul(b0, F.mul(g[3], F.mul(g[2], g[2])));
      v = F.add(v, F.mul(g[2], F.mul(g[2], g[2])));
      v = F.sub(v, F.mul(b0, F.mul(g[1], g4s)));
      v = F.sub(v, F.mul(g[0], g4s));
      v = F.add(v, F.mul(a[r], g4s));
      if (v == 0) continue;
      PrefixGammaWitness w;
      w.prefix = pre;
      w.gamma = gamma;
      w.scaled = scaled;
      w.g1 = g[0];
      w.g2 = g[1];
      w.g3 = g[2];
      w.g4 = g[3];
      w.beta0 = b0;
      w.resultant = v;
      out = w;
      return true;
    }
    return false;
  });
  return out;
}

} // namespace trs
