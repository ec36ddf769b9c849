#pragma once
// The b-ary binomial and multinomial coefficients, plus classical
// binomials, all exact. binom(n,k)_b is the product over digit positions
// of classical binomials of the digits, digit lists zero-padded to the
// longer expansion.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bary/bigint.hpp"
#include "bary/digits.hpp"

namespace bary {

/// Classical binomial coefficient, exact; 0 when j < 0 or j > m.
inline BigInt classical_binom(std::uint64_t m, std::int64_t j) {
  if (j < 0 || static_cast<std::uint64_t>(j) > m) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), m, static_cast<std::uint64_t>(j));
  return r;
}

namespace detail {

// binom(i, j) for i < 64 as uint64 (binom(62,31) still fits); the digit
// factors of every base <= 64 live here.
inline const std::array<std::array<std::uint64_t, 64>, 64>& small_binom_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 64>, 64> t{};
    for (std::size_t i = 0; i < 64; ++i) {
      t[i][0] = 1;
      for (std::size_t j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Value of binom(n,k)_b as uint64, or nullopt when it would overflow
/// (or when base > 64, where digit factors themselves may not fit).
/// Exact whenever it returns a value; dense sweeps live on this path.
inline std::optional<std::uint64_t> bary_binom_value_u64(std::uint64_t n,
                                                         std::uint64_t k,
                                                         std::uint32_t base) {
  check_base(base);
  if (base > 64) return std::nullopt;
  const auto& tab = detail::small_binom_table();
  std::uint64_t v = 1;
  while (n != 0 || k != 0) {
    const std::uint32_t nd = n % base, kd = k % base;
    if (kd > nd) return 0;
    if (kd != 0 && kd != nd) {
      if (__builtin_mul_overflow(v, tab[nd][kd], &v)) return std::nullopt;
    }
    n /= base;
    k /= base;
  }
  return v;
}

/// Value of binom(n,k)_b. Accepts k > n (gives 0). Early-outs on the
/// first vanishing digit factor, which makes dense sweeps cheap.
inline BigInt bary_binom_value(std::uint64_t n, std::uint64_t k,
                               std::uint32_t base) {
  if (auto v = bary_binom_value_u64(n, k, base)) {
    return BigInt(static_cast<unsigned long>(*v));
  }
  BigInt v(1);
  while (n != 0 || k != 0) {
    const std::uint64_t nd = n % base, kd = k % base;
    if (kd > nd) return BigInt(0);
    if (kd != 0 && kd != nd) v *= classical_binom(nd, static_cast<std::int64_t>(kd));
    n /= base;
    k /= base;
  }
  return v;
}

/// One digit position of a b-ary binomial: (n_l, k_l, binom(n_l, k_l)).
struct DigitFactor {
  std::uint32_t n_digit = 0;
  std::uint32_t k_digit = 0;
  BigInt binom;
};

/// binom(n,k)_b with its full per-digit factorization, positions
/// l = 0..N-1 little-endian, N = max digit length of n and k.
struct BaryBinomial {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint32_t base = 2;
  BigInt value;
  std::vector<DigitFactor> digit_factors;
};

inline BaryBinomial bary_binom(std::uint64_t n, std::uint64_t k,
                               std::uint32_t base) {
  check_base(base);
  BaryBinomial r;
  r.n = n;
  r.k = k;
  r.base = base;
  r.value = 1;
  std::uint64_t nn = n, kk = k;
  do {
    const std::uint32_t nd = nn % base, kd = kk % base;
    BigInt f = classical_binom(nd, kd);
    r.value *= f;
    r.digit_factors.push_back({nd, kd, std::move(f)});
    nn /= base;
    kk /= base;
  } while (nn != 0 || kk != 0);
  return r;
}

/// b-ary multinomial coefficient: product over digit positions of the
/// classical multinomial of the digit parts. 0 unless the parts sum to n
/// digitwise (in particular unless they sum to n).
inline BigInt bary_multinomial(std::uint64_t n,
                               std::span<const std::uint64_t> parts,
                               std::uint32_t base) {
  check_base(base);
  if (parts.empty()) {
    throw std::domain_error("bary_multinomial requires at least one part");
  }
  unsigned __int128 total = 0;
  for (std::uint64_t p : parts) total += p;
  if (total != n) return BigInt(0);

  std::vector<std::uint64_t> rem(parts.begin(), parts.end());
  std::vector<std::uint64_t> pd(rem.size());
  std::uint64_t nn = n;
  BigInt v(1);
  BigInt fact;
  bool more = true;
  while (more) {
    const std::uint64_t nd = nn % base;
    nn /= base;
    more = nn != 0;
    std::uint64_t dsum = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      pd[i] = rem[i] % base;
      rem[i] /= base;
      dsum += pd[i];
      if (rem[i] != 0) more = true;
    }
    // The digit-level multinomial vanishes unless the digit parts sum to
    // nd; only then is nd! / prod pd[i]! an exact division.
    if (dsum != nd) return BigInt(0);
    mpz_fac_ui(fact.get_mpz_t(), nd);
    v *= fact;
    for (std::uint64_t d : pd) {
      if (d > 1) {
        mpz_fac_ui(fact.get_mpz_t(), d);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), fact.get_mpz_t());
      }
    }
  }
  return v;
}

namespace detail {

// Trial-division primality guard. Complete for p < 2^32; for larger p
// only small factors are excluded and primality is the caller's problem.
inline void check_prime(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  if (p % 2 == 0 && p != 2) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  for (std::uint64_t d = 3; d * d <= p && d <= 65536; d += 2) {
    if (p % d == 0) {
      throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
  }
}

}  // namespace detail

/// p-adic valuation of x >= 1: the largest e with p^e | x.
inline std::uint64_t valuation(const BigInt& x, std::uint64_t p) {
  if (sgn(x) <= 0) {
    throw std::domain_error("valuation requires x >= 1");
  }
  detail::check_prime(p);
  BigInt quotient;
  const BigInt pz(static_cast<unsigned long>(p));
  return mpz_remove(quotient.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

}  // namespace bary
