#include "trs/field.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace trs {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over Z/p, low degree first, used only during field
// construction (before any tables exist).
using Zp = std::vector<std::uint32_t>;

void ztrim(Zp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Zp zmulmod(const Zp& a, const Zp& b, const Zp& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Zp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  // mod is monic, so reduction is plain long division without inverses.
  std::size_t dm = mod.size() - 1;
  for (std::size_t i = r.size(); i-- > dm;) {
    std::uint32_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < dm; ++j)
      r[i - dm + j] = (r[i - dm + j] + std::uint64_t(c) * (p - mod[j] % p)) % p;
  }
  r.resize(dm);
  ztrim(r);
  return r;
}

Zp zpowmod(Zp base, std::uint64_t e, const Zp& mod, std::uint32_t p) {
  Zp r{1};
  while (e) {
    if (e & 1) r = zmulmod(r, base, mod, p);
    base = zmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Zp zgcd(Zp a, Zp b, std::uint32_t p) {
  auto inv_mod_p = [p](std::uint32_t x) {
    std::uint32_t r = 1, e = p - 2, b2 = x;
    while (e) {
      if (e & 1) r = std::uint64_t(r) * b2 % p;
      b2 = std::uint64_t(b2) * b2 % p;
      e >>= 1;
    }
    return r;
  };
  ztrim(a);
  ztrim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    std::uint32_t lc_inv = inv_mod_p(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::uint32_t c = std::uint64_t(a.back()) * lc_inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + std::uint64_t(c) * (p - b[j] % p)) % p;
      ztrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// f monic of degree m is irreducible over Z/p iff x^(p^m) == x mod f and
// gcd(x^(p^(m/l)) - x, f) = 1 for every prime l dividing m.
bool is_irreducible(const Zp& f, std::uint32_t p, std::uint32_t m) {
  if (m == 1) return true;
  auto xp_power = [&](std::uint32_t i) {
    // x^(p^i) mod f by repeated p-th powering
    Zp r{0, 1};
    for (std::uint32_t t = 0; t < i; ++t) r = zpowmod(r, p, f, p);
    return r;
  };
  Zp top = xp_power(m);
  // top must equal x
  Zp x{0, 1};
  if (top != x) return false;
  for (std::uint32_t l = 2; l <= m; ++l) {
    if (m % l != 0 || !is_prime(l)) continue;
    Zp g = xp_power(m / l);
    // g - x
    Zp d = g;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    ztrim(d);
    Zp gc = zgcd(d, f, p);
    if (!(gc.size() == 1)) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(std::uint32_t(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(std::uint32_t(n));
  return fs;
}

Zp poly_of_code(std::uint64_t code, std::uint32_t p) {
  Zp f;
  while (code) {
    f.push_back(std::uint32_t(code % p));
    code /= p;
  }
  return f;
}

std::uint64_t code_of_poly(const Zp& f, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = f.size(); i-- > 0;) c = c * p + f[i];
  return c;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_q) throw std::invalid_argument("field size exceeds supported bound");
  }
  q_ = std::uint32_t(q);
  half_ = (q_ - 1) / 2;

  // Lexicographically smallest monic irreducible modulus, coefficients
  // compared from the constant term up.  The odometer below advances the
  // highest-degree coefficient fastest, which enumerates exactly that order.
  {
    std::vector<std::uint32_t> c(m, 0);
    for (;;) {
      Zp f(c.begin(), c.end());
      f.push_back(1);
      if (is_irreducible(f, p, m)) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
      std::size_t i = m;
      while (i-- > 0) {
        if (++c[i] < p) break;
        c[i] = 0;
        if (i == 0) throw std::logic_error("no irreducible modulus found");
      }
    }
  }

  // Smallest-code generator, verified by stripping each prime factor of q-1.
  {
    auto fs = prime_factors(q_ - 1);
    for (std::uint64_t cand = 1; cand < q_; ++cand) {
      Zp g = poly_of_code(cand, p);
      bool ok = true;
      for (std::uint32_t l : fs)
        if (zpowmod(g, (q_ - 1) / l, modulus_, p) == Zp{1}) {
          ok = false;
          break;
        }
      if (ok) {
        gen_code_ = std::uint32_t(cand);
        break;
      }
    }
    if (gen_code_ == 0 && q_ > 2) throw std::logic_error("no generator found");
    if (q_ == 2) gen_code_ = 1;
  }

  // Exponent and log tables: index 1 + j holds xi^j.
  code_.assign(q_, 0);
  index_.assign(q_, 0);
  {
    Zp g = poly_of_code(gen_code_, p);
    Zp cur{1};
    for (std::uint32_t j = 0; j < q_ - 1; ++j) {
      std::uint64_t code = code_of_poly(cur, p);
      code_[1 + j] = std::uint32_t(code);
      index_[code] = 1 + j;
      cur = zmulmod(cur, g, modulus_, p);
    }
    if (cur != Zp{1}) throw std::logic_error("generator order mismatch");
  }

  if (q_ <= add_table_limit) {
    add_tab_.assign(std::size_t(q_) * q_, 0);
    for (Fe a = 0; a < q_; ++a)
      for (Fe b = 0; b < q_; ++b) add_tab_[std::size_t(a) * q_ + b] = add_slow(a, b);
  }

  if (m_ > 1) {
    trace_tab_.assign(q_, 0);
    // Tr(xi^j) accumulated through the Frobenius orbit exponents j*p^i.
    std::vector<std::uint64_t> frob(m_);
    frob[0] = 1;
    for (std::uint32_t i = 1; i < m_; ++i) frob[i] = frob[i - 1] * p_ % (q_ - 1);
    for (Fe a = 1; a < q_; ++a) {
      std::uint64_t j = a - 1;
      Fe acc = 0;
      for (std::uint32_t i = 0; i < m_; ++i) acc = add(acc, Fe(1 + j * frob[i] % (q_ - 1)));
      std::uint32_t v = code_[acc];
      if (v >= p_) throw std::logic_error("trace left the prime subfield");
      trace_tab_[a] = std::uint16_t(v);
    }
  }
}

Fe Field::add_slow(Fe a, Fe b) const {
  if (p_ == 2) return index_[code_[a] ^ code_[b]];
  std::uint32_t ca = code_[a], cb = code_[b], out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += (ca % p_ + cb % p_) % p_ * mult;
    mult *= p_;
    ca /= p_;
    cb /= p_;
  }
  return index_[out];
}

Fe Field::from_code(std::uint64_t code) const {
  if (code >= q_) throw std::invalid_argument("coefficient code out of range");
  return index_[code];
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw std::invalid_argument("division by zero");
  return 1 + (q_ - 1 - (a - 1)) % (q_ - 1);
}

Fe Field::pow(Fe a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::invalid_argument("division by zero");
    return e == 0 ? Fe(1) : Fe(0);
  }
  long long r = (long long)(a - 1) * (e % (long long)(q_ - 1)) % (long long)(q_ - 1);
  if (r < 0) r += q_ - 1;
  return Fe(1 + r);
}

std::uint32_t Field::dlog(Fe a) const {
  if (a == 0) throw std::invalid_argument("discrete log of zero");
  return a - 1;
}

int Field::quadratic_character(Fe a) const {
  if (p_ == 2) throw std::invalid_argument("quadratic character needs odd q");
  if (a == 0) return 0;
  return (a - 1) % 2 == 0 ? 1 : -1;
}

std::string Field::label() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

std::string Field::descriptor_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p_ << ",\"m\":" << m_ << ",\"modulus\":[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "],\"generator\":" << gen_code_ << "}";
  return os.str();
}

const Field& get_field(std::uint32_t p, std::uint32_t m) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, Field(p, m)).first;
  return it->second;
}

}  // namespace trs
