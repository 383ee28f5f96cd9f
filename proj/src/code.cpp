#include "trs/code.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trs/sym.hpp"

namespace trs {
namespace {

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void validate(const LinearCode& C) {
  const Field& F = *C.F;
  if (C.k == 0 || C.k >= C.n) throw std::invalid_argument("code dimension out of range");
  if (mat_rank(F, C.G) != C.k) throw std::invalid_argument("generator matrix is rank deficient");
  if (mat_rank(F, C.H) != C.n - C.k)
    throw std::invalid_argument("parity-check matrix is rank deficient");
  if (!mat_is_zero(mat_mul(F, C.H, mat_transpose(C.G))))
    throw std::invalid_argument("generator and parity check are not dual");
}

}  // namespace

LinearCode code_from_generator(const Field& F, Mat G) {
  LinearCode C;
  C.F = &F;
  C.n = std::uint32_t(G.cols);
  C.k = std::uint32_t(G.rows);
  C.H = nullspace(F, G);
  C.G = std::move(G);
  validate(C);
  return C;
}

LinearCode code_from_parity(const Field& F, Mat H) {
  LinearCode C;
  C.F = &F;
  C.n = std::uint32_t(H.cols);
  C.k = std::uint32_t(H.cols - H.rows);
  C.G = nullspace(F, H);
  C.H = std::move(H);
  validate(C);
  return C;
}

LinearCode make_linear_code(const Field& F, Mat G, Mat H) {
  LinearCode C;
  C.F = &F;
  C.n = std::uint32_t(G.cols);
  C.k = std::uint32_t(G.rows);
  C.G = std::move(G);
  C.H = std::move(H);
  validate(C);
  return C;
}

std::uint32_t hamming_weight(const Word& u) {
  std::uint32_t w = 0;
  for (Fe v : u) w += v != 0;
  return w;
}

std::uint32_t hamming_distance(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw std::invalid_argument("word length mismatch");
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < u.size(); ++i) w += u[i] != v[i];
  return w;
}

Word encode_message(const LinearCode& C, const Word& msg) {
  if (msg.size() != C.k) throw std::invalid_argument("message length mismatch");
  const Field& F = *C.F;
  Word out(C.n, 0);
  for (std::size_t i = 0; i < C.k; ++i) {
    if (msg[i] == 0) continue;
    for (std::size_t j = 0; j < C.n; ++j)
      out[j] = F.add(out[j], F.mul(msg[i], C.G.at(i, j)));
  }
  return out;
}

std::vector<Fe> syndrome_of(const LinearCode& C, const Word& u) {
  if (u.size() != C.n) throw std::invalid_argument("word length mismatch");
  const Field& F = *C.F;
  std::vector<Fe> s(C.n - C.k, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Fe acc = 0;
    for (std::size_t j = 0; j < C.n; ++j) acc = F.add(acc, F.mul(C.H.at(i, j), u[j]));
    s[i] = acc;
  }
  return s;
}

bool code_contains(const LinearCode& C, const Word& u) {
  std::vector<Fe> s = syndrome_of(C, u);
  return std::all_of(s.begin(), s.end(), [](Fe v) { return v == 0; });
}

std::uint64_t syndrome_key(const Field& F, const std::vector<Fe>& s) {
  std::uint64_t key = 0;
  for (std::size_t i = s.size(); i-- > 0;) key = key * F.q() + s[i];
  return key;
}

std::vector<Fe> key_syndrome(const Field& F, std::uint64_t key, std::uint32_t len) {
  std::vector<Fe> s(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    s[i] = Fe(key % F.q());
    key /= F.q();
  }
  return s;
}

std::uint32_t min_distance(const LinearCode& C, std::uint64_t budget) {
  const Field& F = *C.F;
  std::uint64_t total = upow(F.q(), C.k);
  if (total > budget) throw std::runtime_error("minimum-distance enumeration exceeds budget");
  std::uint32_t best = C.n + 1;
  Word msg(C.k, 0), cw(C.n, 0);
  // walk messages in odometer order, updating the codeword by row deltas
  for (std::uint64_t t = 1; t < total; ++t) {
    std::size_t i = 0;
    for (;; ++i) {
      Fe old = msg[i];
      Fe nxt = old + 1 < F.q() ? old + 1 : 0;
      msg[i] = nxt;
      Fe delta = F.sub(nxt, old);
      for (std::size_t j = 0; j < C.n; ++j)
        cw[j] = F.add(cw[j], F.mul(delta, C.G.at(i, j)));
      if (nxt != 0) break;
    }
    best = std::min(best, hamming_weight(cw));
  }
  return best;
}

bool is_mds(const LinearCode& C, std::uint64_t budget) {
  return min_distance(C, budget) == C.n - C.k + 1;
}

CosetTable coset_weights(const LinearCode& C) {
  const Field& F = *C.F;
  std::uint32_t q = F.q();
  std::uint32_t digits = C.n - C.k;
  std::uint64_t size = upow(q, digits);
  CosetTable T;
  T.digits = digits;
  T.size = size;
  T.weight.assign(size, 0xFF);
  T.weight[0] = 0;
  std::vector<std::uint8_t> next(size);

  std::vector<std::uint64_t> pow_q(digits + 1, 1);
  for (std::uint32_t i = 0; i < digits; ++i) pow_q[i + 1] = pow_q[i] * q;

  for (std::uint32_t pos = 0; pos < C.n; ++pos) {
    next = T.weight;  // the v = 0 term of the position minimum
    for (Fe v = 1; v < q; ++v) {
      // con[i][a] = key contribution of digit value a shifted by -v*col_i
      std::vector<std::vector<std::uint64_t>> con(digits);
      for (std::uint32_t i = 0; i < digits; ++i) {
        Fe mv = F.mul(v, C.H.at(i, pos));
        con[i].resize(q);
        for (Fe a = 0; a < q; ++a) con[i][a] = std::uint64_t(F.sub(a, mv)) * pow_q[i];
      }
      const std::uint8_t* old = T.weight.data();
      std::uint8_t* out = next.data();
#pragma omp parallel
      {
        std::uint64_t lo = 0, hi = size;
#ifdef _OPENMP
        {
          int nt = omp_get_num_threads(), id = omp_get_thread_num();
          lo = size * id / nt;
          hi = size * (id + 1) / nt;
        }
#endif
        std::vector<Fe> d(digits, 0);
        {
          std::uint64_t t = lo;
          for (std::uint32_t i = 0; i < digits; ++i) {
            d[i] = Fe(t % q);
            t /= q;
          }
        }
        std::uint64_t shifted = 0;
        for (std::uint32_t i = 0; i < digits; ++i) shifted += con[i][d[i]];
        for (std::uint64_t x = lo; x < hi; ++x) {
          std::uint8_t cand = old[shifted];
          if (cand < 0xFF && std::uint8_t(cand + 1) < out[x]) out[x] = std::uint8_t(cand + 1);
          // odometer step for x+1, keeping the shifted key in sync
          for (std::uint32_t i = 0; i < digits; ++i) {
            Fe a = d[i];
            if (a + 1 < q) {
              d[i] = a + 1;
              shifted += con[i][a + 1] - con[i][a];
              break;
            }
            d[i] = 0;
            shifted += con[i][0] - con[i][a];
          }
        }
      }
    }
    std::swap(T.weight, next);
  }

  std::uint32_t rho = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (T.weight[x] == 0xFF) throw std::logic_error("unreachable syndrome under a full-rank parity check");
    rho = std::max<std::uint32_t>(rho, T.weight[x]);
  }
  T.rho = rho;
  return T;
}

CosetTable coset_weights_serial(const LinearCode& C, std::uint64_t budget) {
  const Field& F = *C.F;
  std::uint32_t q = F.q();
  std::uint32_t digits = C.n - C.k;
  std::uint64_t size = upow(q, digits);
  CosetTable T;
  T.digits = digits;
  T.size = size;
  T.weight.assign(size, 0xFF);
  T.weight[0] = 0;
  std::uint64_t filled = 1, spent = 0;

  // column keys as accumulated syndromes: scaled column key table
  std::vector<std::vector<std::vector<Fe>>> col(C.n);
  for (std::uint32_t j = 0; j < C.n; ++j) {
    col[j].assign(q, std::vector<Fe>(digits, 0));
    for (Fe v = 1; v < q; ++v)
      for (std::uint32_t i = 0; i < digits; ++i) col[j][v][i] = F.mul(v, C.H.at(i, j));
  }

  for (std::uint32_t w = 1; w <= C.n && filled < size; ++w) {
    for_each_subset_colex(C.n, w, [&](const std::vector<std::uint32_t>& support) {
      std::vector<Fe> vals(w, 1);
      for (;;) {
        if (++spent > budget) throw std::runtime_error("coset enumeration exceeds budget");
        std::vector<Fe> s(digits, 0);
        for (std::uint32_t t = 0; t < w; ++t) {
          const std::vector<Fe>& add = col[support[t]][vals[t]];
          for (std::uint32_t i = 0; i < digits; ++i) s[i] = F.add(s[i], add[i]);
        }
        std::uint64_t key = syndrome_key(F, s);
        if (T.weight[key] == 0xFF) {
          T.weight[key] = std::uint8_t(w);
          ++filled;
        }
        // next nonzero value assignment
        std::uint32_t i = 0;
        while (i < w) {
          if (vals[i] + 1 < q) {
            ++vals[i];
            break;
          }
          vals[i] = 1;
          ++i;
        }
        if (i == w) break;
      }
    });
  }
  if (filled != size) throw std::logic_error("unreachable syndrome under a full-rank parity check");
  std::uint32_t rho = 0;
  for (std::uint64_t x = 0; x < size; ++x) rho = std::max<std::uint32_t>(rho, T.weight[x]);
  T.rho = rho;
  return T;
}

std::uint32_t covering_radius(const LinearCode& C) { return coset_weights(C).rho; }

std::uint32_t error_distance(const LinearCode& C, const CosetTable& T, const Word& u) {
  return T.weight[syndrome_key(*C.F, syndrome_of(C, u))];
}

CosetReport coset_report(const LinearCode& C, const CosetTable& T,
                         const std::vector<Fe>& s) {
  const Field& F = *C.F;
  if (s.size() != T.digits) throw std::invalid_argument("syndrome length mismatch");
  CosetReport rep;
  rep.syndrome = s;
  rep.leader_weight = T.weight[syndrome_key(F, s)];
  rep.is_deep_hole = rep.leader_weight == T.rho;

  // Lexicographically smallest word of that weight in the coset: solve the
  // support-restricted system for every support of the leader weight and
  // keep the smallest solution word.
  std::uint32_t w = rep.leader_weight;
  Word best;
  for_each_subset_colex(C.n, w, [&](const std::vector<std::uint32_t>& support) {
    Mat A(T.digits, w);
    for (std::uint32_t i = 0; i < T.digits; ++i)
      for (std::uint32_t t = 0; t < w; ++t) A.at(i, t) = C.H.at(i, support[t]);
    Mat R = A;
    std::size_t rank = rref(F, R).size();
    Mat N = nullspace(F, A);
    std::uint64_t combos = upow(F.q(), w - rank);
    if (combos > 100000) throw std::runtime_error("coset leader search space too large");
    auto base = solve(F, A, s);
    if (!base) return;
    for (std::uint64_t t = 0; t < combos; ++t) {
      std::vector<Fe> x = *base;
      std::uint64_t tt = t;
      for (std::size_t row = 0; row < N.rows; ++row) {
        Fe c = Fe(tt % F.q());
        tt /= F.q();
        if (c == 0) continue;
        for (std::uint32_t col = 0; col < w; ++col)
          x[col] = F.add(x[col], F.mul(c, N.at(row, col)));
      }
      bool full = std::all_of(x.begin(), x.end(), [](Fe v) { return v != 0; });
      if (!full) continue;
      Word cand(C.n, 0);
      for (std::uint32_t col = 0; col < w; ++col) cand[support[col]] = x[col];
      if (best.empty() || cand < best) best = cand;
    }
  });
  rep.leader = std::move(best);
  return rep;
}

SubcodeDeepHoleReport subcode_deep_holes(const LinearCode& outer, const LinearCode& inner,
                                         std::uint64_t budget) {
  if (outer.n != inner.n || outer.k != inner.k + 1)
    throw std::invalid_argument("expected a dimension gap of exactly one");
  const Field& F = *outer.F;
  std::uint64_t total = upow(F.q(), outer.k);
  if (total > budget) throw std::runtime_error("outer-code enumeration exceeds budget");
  CosetTable T = coset_weights(inner);
  SubcodeDeepHoleReport rep;
  rep.rho = T.rho;
  Word msg(outer.k, 0);
  for (std::uint64_t t = 1; t < total; ++t) {
    std::size_t i = 0;
    while (true) {
      msg[i] = msg[i] + 1 < F.q() ? msg[i] + 1 : 0;
      if (msg[i] != 0) break;
      ++i;
    }
    Word u = encode_message(outer, msg);
    if (code_contains(inner, u)) continue;
    ++rep.words_checked;
    if (error_distance(inner, T, u) != inner.n - inner.k) rep.all_deep = false;
  }
  return rep;
}

}  // namespace trs
