#pragma once
// Exact arbitrary-precision integers. All coefficient values in this
// library are BigInt; no modular or floating shortcuts in core paths.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bary {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// 2^e as an exact integer.
inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

/// Nonnegative remainder of x modulo m (m >= 2).
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace bary
