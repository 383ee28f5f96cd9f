#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trs {

// Field element in canonical index form: 0 is the zero element, and index
// 1 + j is xi^j for the canonical generator xi (so discrete log = index - 1).
using Fe = std::uint32_t;

// GF(p^m) with deterministic tables.  The modulus is the lexicographically
// smallest monic irreducible of degree m (coefficients compared from the
// constant term up) and the generator is the nonzero element with the
// smallest packed coefficient code whose order is q-1.  Identical (p, m)
// therefore always produce identical tables.
class Field {
public:
  static constexpr std::uint64_t max_q = std::uint64_t(1) << 20;

  Field(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  bool odd() const { return p_ != 2; }
  std::string label() const;

  // Modulus coefficients, low degree first, length m+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // Packed base-p coefficient code of the generator.
  std::uint32_t generator_code() const { return gen_code_; }

  // Element <-> packed coefficient code (sum c_i p^i with c_0 least
  // significant).  Codes run over [0, q).
  Fe from_code(std::uint64_t code) const;
  std::uint32_t code_of(Fe a) const { return code_[a]; }

  Fe add(Fe a, Fe b) const {
    return add_tab_.empty() ? add_slow(a, b) : add_tab_[std::size_t(a) * q_ + b];
  }
  Fe neg(Fe a) const {
    if (p_ == 2 || a == 0) return a;
    return 1 + (a - 1 + half_) % (q_ - 1);
  }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    return 1 + (a - 1 + b - 1) % (q_ - 1);
  }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, long long e) const;
  // xi^j for any integer j.
  Fe xi_pow(long long j) const {
    long long r = j % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return Fe(1 + r);
  }
  std::uint32_t dlog(Fe a) const;

  // Trace into the prime subfield, returned as an integer in [0, p).
  std::uint32_t trace_int(Fe a) const { return m_ == 1 ? code_[a] : trace_tab_[a]; }
  // Same trace as a field element.
  Fe trace(Fe a) const { return from_code(trace_int(a)); }

  // Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  // Odd q only.
  int quadratic_character(Fe a) const;

  // Direct row access into the addition table for hot loops; requires
  // has_add_table().
  bool has_add_table() const { return !add_tab_.empty(); }
  const Fe* add_row(Fe a) const { return add_tab_.data() + std::size_t(a) * q_; }

  // JSON descriptor {"p":..,"m":..,"modulus":[..],"generator":..}.
  std::string descriptor_json() const;

private:
  Fe add_slow(Fe a, Fe b) const;

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::uint32_t half_ = 0;  // (q-1)/2 for odd q, dlog of -1
  std::uint32_t gen_code_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> code_;   // index -> packed code
  std::vector<Fe> index_;             // packed code -> index
  std::vector<Fe> add_tab_;           // q*q table when q <= add_table_limit
  std::vector<std::uint16_t> trace_tab_;

  static constexpr std::uint32_t add_table_limit = 1024;
};

// Process-wide cache of canonical fields keyed by (p, m).  Entries live for
// the whole run; references stay valid.
const Field& get_field(std::uint32_t p, std::uint32_t m);

}  // namespace trs
