#pragma once
// Test-only oracles, kept independent of the library code paths they
// check: schoolbook digit addition, additive Pascal tables, the
// multiplicative binomial product, brute-force partner scans, and the
// recursive Sierpinski mask.

#include <cstdint>
#include <vector>

#include "bary/bigint.hpp"

namespace oracles {

inline std::vector<std::uint32_t> to_digits(std::uint64_t n,
                                            std::uint32_t base) {
  std::vector<std::uint32_t> d;
  do {
    d.push_back(static_cast<std::uint32_t>(n % base));
    n /= base;
  } while (n != 0);
  return d;
}

inline std::uint64_t eval_digits(const std::vector<std::uint32_t>& digits,
                                 std::uint32_t base) {
  std::uint64_t v = 0, w = 1;
  for (std::size_t l = 0; l < digits.size(); ++l) {
    v += digits[l] * w;
    if (l + 1 < digits.size()) w *= base;
  }
  return v;
}

// Schoolbook addition over materialized digit vectors, counting carry
// operations.
inline std::uint64_t schoolbook_carry_count(std::uint64_t a, std::uint64_t c,
                                            std::uint32_t base) {
  auto da = to_digits(a, base), dc = to_digits(c, base);
  const std::size_t len = std::max(da.size(), dc.size()) + 1;
  da.resize(len, 0);
  dc.resize(len, 0);
  std::uint64_t carries = 0;
  std::uint32_t carry = 0;
  for (std::size_t l = 0; l < len; ++l) {
    const std::uint64_t s = std::uint64_t{da[l]} + dc[l] + carry;
    if (s >= base) {
      carry = 1;
      ++carries;
    } else {
      carry = 0;
    }
  }
  return carries;
}

// Additive Pascal-rule binomial: builds row m by m row updates.
inline bary::BigInt pascal_binom(std::uint64_t m, std::uint64_t j) {
  if (j > m) return bary::BigInt(0);
  std::vector<bary::BigInt> row{bary::BigInt(1)};
  for (std::uint64_t i = 1; i <= m; ++i) {
    row.emplace_back(1);
    for (std::uint64_t k = i - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row[j];
}

// Multiplicative binomial product with exact division at every step.
inline bary::BigInt product_binom(std::uint64_t m, std::uint64_t j) {
  if (j > m) return bary::BigInt(0);
  bary::BigInt r(1);
  for (std::uint64_t i = 0; i < j; ++i) {
    r *= bary::BigInt(static_cast<unsigned long>(m - i));
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i + 1);
  }
  return r;
}

inline bary::BigInt factorial(std::uint64_t n) {
  bary::BigInt r(1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    r *= static_cast<unsigned long>(i);
  }
  return r;
}

// Digit-level multinomial brute force: expands all parts in base b and
// multiplies digit multinomials computed from factorials; zero when digit
// sums mismatch.
inline bary::BigInt digit_multinomial(std::uint64_t n,
                                      const std::vector<std::uint64_t>& parts,
                                      std::uint32_t base) {
  std::vector<std::uint32_t> nd = to_digits(n, base);
  std::vector<std::vector<std::uint32_t>> pd;
  std::size_t len = nd.size();
  for (std::uint64_t p : parts) {
    pd.push_back(to_digits(p, base));
    len = std::max(len, pd.back().size());
  }
  nd.resize(len, 0);
  for (auto& d : pd) d.resize(len, 0);
  bary::BigInt out(1);
  for (std::size_t l = 0; l < len; ++l) {
    std::uint64_t dsum = 0;
    for (const auto& d : pd) dsum += d[l];
    if (dsum != nd[l]) return bary::BigInt(0);
    bary::BigInt factor = factorial(nd[l]);
    for (const auto& d : pd) {
      mpz_divexact(factor.get_mpz_t(), factor.get_mpz_t(),
                   factorial(d[l]).get_mpz_t());
    }
    out *= factor;
  }
  return out;
}

// Brute-force scan for carry-free partners via digit domination.
inline std::vector<std::uint64_t> brute_partners(std::uint64_t n,
                                                 std::uint32_t base) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k <= n; ++k) {
    std::uint64_t kk = k, nn = n;
    bool ok = true;
    while (kk != 0 || nn != 0) {
      if (kk % base > nn % base) {
        ok = false;
        break;
      }
      kk /= base;
      nn /= base;
    }
    if (ok) out.push_back(k);
  }
  return out;
}

// Depth-d Sierpinski mask, 2^d x 2^d: S_0 = [1], S_{d+1} = [[S,0],[S,S]].
inline std::vector<std::vector<bool>> sierpinski_mask(unsigned depth) {
  std::vector<std::vector<bool>> mask{{true}};
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t half = mask.size();
    std::vector<std::vector<bool>> next(2 * half,
                                        std::vector<bool>(2 * half, false));
    for (std::size_t i = 0; i < half; ++i) {
      for (std::size_t j = 0; j < half; ++j) {
        if (!mask[i][j]) continue;
        next[i][j] = true;
        next[half + i][j] = true;
        next[half + i][half + j] = true;
      }
    }
    mask = std::move(next);
  }
  return mask;
}

}  // namespace oracles
