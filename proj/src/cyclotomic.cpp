#include "trs/cyclotomic.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace trs {
namespace {

long long checked_narrow(__int128 v) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
    throw std::overflow_error("cyclotomic coefficient overflow");
  return (long long)v;
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p >= 2 ? p - 1 : 1, 0) {
  if (p < 2) throw std::invalid_argument("cyclotomic order must be a prime >= 2");
}

CycInt CycInt::root_pow(std::uint32_t p, std::uint64_t e) {
  CycInt z(p);
  std::uint64_t r = e % p;
  if (r < p - 1) {
    z.c_[r] = 1;
  } else {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    for (auto& v : z.c_) v = -1;
  }
  return z;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (p_ != o.p_) throw std::invalid_argument("cyclotomic order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (p_ != o.p_) throw std::invalid_argument("cyclotomic order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  CycInt r = *this;
  r -= o;
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  if (p_ != o.p_) throw std::invalid_argument("cyclotomic order mismatch");
  if (p_ == 2) {
    CycInt r(p_);
    r.c_[0] = checked_narrow(__int128(c_[0]) * o.c_[0]);
    return r;
  }
  // Convolve into exponents 0..p-1, then eliminate zeta^(p-1).
  std::vector<__int128> acc(p_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      acc[(i + j) % p_] += __int128(c_[i]) * o.c_[j];
  }
  CycInt r(p_);
  for (std::size_t i = 0; i + 1 < p_; ++i) r.c_[i] = checked_narrow(acc[i] - acc[p_ - 1]);
  return r;
}

CycInt CycInt::scaled(long long s) const {
  CycInt r = *this;
  for (auto& v : r.c_) v = checked_narrow(__int128(v) * s);
  return r;
}

CycInt CycInt::conj() const {
  if (p_ == 2) return *this;
  // Conjugation sends zeta^i to zeta^(-i); re-reduce exponent p-1.
  std::vector<long long> acc(p_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) acc[(p_ - i) % p_] += c_[i];
  CycInt r(p_);
  for (std::size_t i = 0; i + 1 < p_; ++i) r.c_[i] = acc[i] - acc[p_ - 1];
  return r;
}

bool CycInt::is_zero() const {
  for (long long v : c_)
    if (v != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

long long CycInt::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

long long CycInt::galois_trace() const {
  if (p_ == 2) return c_[0];
  // Tr(zeta^i) = -1 for 0 < i < p, Tr(1) = p - 1.
  long long t = checked_narrow(__int128(c_[0]) * (p_ - 1));
  for (std::size_t i = 1; i < c_.size(); ++i) t -= c_[i];
  return t;
}

std::complex<long double> CycInt::to_complex() const {
  if (p_ == 2) return {(long double)c_[0], 0.0L};
  std::complex<long double> z = 0;
  const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long double a = tau * (long double)i / (long double)p_;
    z += std::complex<long double>(std::cos(a), std::sin(a)) * (long double)c_[i];
  }
  return z;
}

bool Abs2::at_most(long long bound) const {
  if (exact) return exact_value <= bound;
  if (approx + err < (long double)bound) return true;
  if (approx - err > (long double)bound) return false;
  throw std::runtime_error("interval straddles the bound");
}

bool Abs2::equals(long long value) const {
  if (exact) return exact_value == value;
  return std::fabs(approx - (long double)value) <= err;
}

Abs2 abs_square(const CycInt& z) {
  Abs2 out;
  CycInt n = z * z.conj();
  if (n.is_rational()) {
    out.exact = true;
    out.exact_value = n.rational_value();
    out.approx = (long double)out.exact_value;
    out.err = 0;
    return out;
  }
  long double mag = 0;
  for (long long v : n.coeffs()) mag += std::fabs((long double)v);
  out.approx = n.to_complex().real();
  out.err = 1e-15L * (mag + 1) * (long double)n.p();
  return out;
}

}  // namespace trs
