#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace trs {

// Element of Z[zeta_p] for prime p, stored on the basis {1, zeta, ...,
// zeta^(p-2)} after reduction by 1 + zeta + ... + zeta^(p-1) = 0.  For p = 2
// this degenerates to a single integer.  All arithmetic is exact; products
// are accumulated in 128-bit and trapped on int64 overflow.
class CycInt {
public:
  explicit CycInt(std::uint32_t p);
  static CycInt root_pow(std::uint32_t p, std::uint64_t e);  // zeta_p^e

  std::uint32_t p() const { return p_; }
  const std::vector<long long>& coeffs() const { return c_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt scaled(long long s) const;
  CycInt conj() const;

  bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  bool is_zero() const;
  // Rational iff all basis coefficients past the constant vanish.
  bool is_rational() const;
  long long rational_value() const;  // throws when not rational

  // Sum over all Galois embeddings; always a rational integer.
  long long galois_trace() const;

  std::complex<long double> to_complex() const;

private:
  std::uint32_t p_;
  std::vector<long long> c_;  // length p-1 (length 1 for p = 2)
};

// |z|^2 of a cyclotomic integer: exact when z * conj(z) is rational,
// otherwise a certified floating interval around the embedding value.
struct Abs2 {
  bool exact = false;
  long long exact_value = 0;
  long double approx = 0;
  long double err = 0;

  // Decides |z|^2 <= bound; requires the interval to clear the bound when
  // inexact (throws on a straddle, which the calibrated error margin rules
  // out for every sum this library evaluates).
  bool at_most(long long bound) const;
  bool equals(long long value) const;
};

Abs2 abs_square(const CycInt& z);

}  // namespace trs
