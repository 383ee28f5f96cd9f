#include "trs/sym.hpp"

#include <stdexcept>

#include "trs/linalg.hpp"

namespace trs {

std::vector<Fe> elementary_symmetric(const Field& F, const std::vector<Fe>& xs) {
  std::vector<Fe> S(xs.size() + 1, 0);
  S[0] = 1;
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t i = j + 1; i-- > 0;)
      S[i + 1] = F.add(S[i + 1], F.mul(S[i], xs[j]));
  return S;
}

Poly sigma_from_roots(const Field& F, const std::vector<Fe>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) throw std::invalid_argument("roots must be pairwise distinct");
  Poly f{1};
  for (Fe r : roots) f = poly_mul(F, f, Poly{F.neg(r), 1});
  return f;
}

std::vector<Fe> sigma_seq(const Field& F, const std::vector<Fe>& roots) {
  Poly f = sigma_from_roots(F, roots);
  std::size_t n = roots.size();
  std::vector<Fe> sigma(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) sigma[j] = poly_coeff(f, n - j);
  return sigma;
}

std::vector<Fe> lambda_from_sigma(const Field& F, const std::vector<Fe>& sigma,
                                  std::size_t tmax) {
  if (sigma.empty() || sigma[0] != 1)
    throw std::invalid_argument("sigma sequence must start with 1");
  std::vector<Fe> lam(tmax + 1, 0);
  lam[0] = 1;
  for (std::size_t t = 1; t <= tmax; ++t) {
    Fe acc = 0;
    for (std::size_t i = 1; i <= t && i < sigma.size(); ++i)
      acc = F.add(acc, F.mul(sigma[i], lam[t - i]));
    lam[t] = F.neg(acc);
  }
  return lam;
}

std::pair<Fe, Fe> gen_vandermonde_det(const Field& F, const std::vector<Fe>& xs,
                                      const std::vector<std::uint32_t>& exponents) {
  std::size_t s = xs.size();
  if (exponents.size() != s) throw std::invalid_argument("one exponent per element required");
  if (s == 0) throw std::invalid_argument("empty exponent partition");
  for (std::size_t i = 1; i < s; ++i)
    if (exponents[i] <= exponents[i - 1])
      throw std::invalid_argument("exponents must be strictly increasing");
  if (exponents[0] != 0) throw std::invalid_argument("exponent list must start at 0");
  std::uint32_t m = exponents.back() + 1;

  Mat V(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) V.at(i, j) = F.pow(xs[j], exponents[i]);
  Fe lhs = mat_det(F, V);

  Fe vdm = 1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) vdm = F.mul(vdm, F.sub(xs[j], xs[i]));

  // Complement of the exponent set inside {0..m-1}.
  std::vector<std::uint32_t> comp;
  {
    std::vector<bool> used(m, false);
    for (std::uint32_t t : exponents) used[t] = true;
    for (std::uint32_t t = 0; t < m; ++t)
      if (!used[t]) comp.push_back(t);
  }
  std::vector<Fe> S = elementary_symmetric(F, xs);
  auto S_of = [&](long long i) -> Fe {
    if (i < 0 || i > (long long)s) return 0;
    return S[std::size_t(i)];
  };
  std::size_t sp = comp.size();
  Fe minor = 1;
  if (sp > 0) {
    Mat D(sp, sp);
    for (std::size_t u = 0; u < sp; ++u)
      for (std::size_t v = 0; v < sp; ++v)
        D.at(u, v) = S_of((long long)s - (long long)comp[v] + (long long)u);
    minor = mat_det(F, D);
  }
  return {lhs, F.mul(vdm, minor)};
}

Poly lagrange_interpolate(const Field& F,
                          const std::vector<std::pair<Fe, Fe>>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolation nodes must be pairwise distinct");
  Poly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis{1};
    Fe denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(F, basis, Poly{F.neg(points[j].first), 1});
      denom = F.mul(denom, F.sub(points[i].first, points[j].first));
    }
    acc = poly_add(F, acc, poly_scale(F, basis, F.div(points[i].second, denom)));
  }
  return acc;
}

SymStack::SymStack(const Field& F, std::size_t cap) : F_(&F), cap_(cap) {
  cols_.emplace_back(cap_ + 1, 0);
  cols_[0][0] = 1;
}

void SymStack::push(Fe x) {
  const std::vector<Fe>& prev = cols_.back();
  std::vector<Fe> col(cap_ + 1);
  col[0] = 1;
  for (std::size_t i = 1; i <= cap_; ++i)
    col[i] = F_->add(prev[i], F_->mul(prev[i - 1], x));
  cols_.push_back(std::move(col));
  xs_.push_back(x);
}

void SymStack::pop() {
  if (xs_.empty()) throw std::logic_error("pop on empty symmetric stack");
  cols_.pop_back();
  xs_.pop_back();
}

void SymStack::clear() {
  while (!xs_.empty()) pop();
}

Fe SymStack::S_at(std::size_t i, std::size_t j) const {
  if (j >= cols_.size()) throw std::out_of_range("symmetric table column out of range");
  if (i > cap_) return 0;
  return cols_[j][i];
}

Fe SymStack::c_top(std::size_t j) const {
  Fe v = S_top(j);
  return j % 2 == 0 ? v : F_->neg(v);
}

std::vector<Fe> SymStack::lambda_prime(std::size_t tmax) const {
  std::vector<Fe> c(depth() + 1);
  for (std::size_t j = 0; j <= depth(); ++j) c[j] = c_top(j);
  return lambda_from_sigma(*F_, c, tmax);
}

void for_each_subset_colex(std::uint32_t n, std::uint32_t r,
                           const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (r > n) return;
  std::vector<std::uint32_t> idx(r);
  for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
  if (r == 0) {
    fn(idx);
    return;
  }
  for (;;) {
    fn(idx);
    std::uint32_t i = 0;
    while (i < r) {
      std::uint32_t limit = (i + 1 < r) ? idx[i + 1] : n;
      if (idx[i] + 1 < limit) break;
      ++i;
    }
    if (i == r) return;
    ++idx[i];
    for (std::uint32_t j = 0; j < i; ++j) idx[j] = j;
  }
}

}  // namespace trs
