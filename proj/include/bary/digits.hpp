#pragma once
// Base-b positional arithmetic: expansions, digit sums and counts, carry
// analysis. Digits are stored little-endian: digits[l] is the coefficient
// of b^l. Everything here is a pure function of its arguments.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bary {

inline constexpr std::uint32_t kMinBase = 2;
inline constexpr std::uint32_t kMaxBase = 65536;

inline void check_base(std::uint64_t base) {
  if (base < kMinBase || base > kMaxBase) {
    throw std::invalid_argument("base must be in [2, 65536], got " +
                                std::to_string(base));
  }
}

/// Canonical base-b expansion of a nonnegative integer. No trailing
/// high-order zeros; 0 expands to the single digit [0].
struct DigitExpansion {
  std::uint32_t base = 2;
  std::vector<std::uint32_t> digits;  // little-endian
  std::uint64_t value = 0;

  std::size_t length() const { return digits.size(); }
};

inline DigitExpansion expand(std::uint64_t n, std::uint32_t base) {
  check_base(base);
  DigitExpansion e;
  e.base = base;
  e.value = n;
  if (n == 0) {
    e.digits.push_back(0);
    return e;
  }
  while (n != 0) {
    e.digits.push_back(static_cast<std::uint32_t>(n % base));
    n /= base;
  }
  return e;
}

/// S_b(n): sum of the base-b digits of n.
inline std::uint64_t digit_sum(std::uint64_t n, std::uint32_t base) {
  check_base(base);
  std::uint64_t s = 0;
  while (n != 0) {
    s += n % base;
    n /= base;
  }
  return s;
}

/// Number of base-b digits of n equal to d, counted over the canonical
/// expansion (no leading-zero padding; 0 has the one digit 0).
inline std::uint64_t digit_count(std::uint64_t n, std::uint32_t base,
                                 std::uint32_t d) {
  check_base(base);
  if (d >= base) {
    throw std::domain_error("digit " + std::to_string(d) +
                            " out of range for base " + std::to_string(base));
  }
  if (n == 0) return d == 0 ? 1 : 0;
  std::uint64_t c = 0;
  while (n != 0) {
    if (n % base == d) ++c;
    n /= base;
  }
  return c;
}

/// Number of carries when adding a and c in base b by the schoolbook
/// algorithm.
inline std::uint64_t carry_count(std::uint64_t a, std::uint64_t c,
                                 std::uint32_t base) {
  check_base(base);
  std::uint64_t carries = 0;
  std::uint32_t carry = 0;
  while (a != 0 || c != 0 || carry != 0) {
    std::uint64_t s = a % base + c % base + carry;
    carry = s >= base ? 1 : 0;
    carries += carry;
    a /= base;
    c /= base;
  }
  return carries;
}

/// True iff adding k and n-k in base b is carry-free; equivalently
/// S_b(k) + S_b(n-k) = S_b(n), equivalently k_l <= n_l positionwise.
inline bool is_carry_free(std::uint64_t k, std::uint64_t n,
                          std::uint32_t base) {
  check_base(base);
  if (k > n) {
    throw std::domain_error("is_carry_free requires k <= n");
  }
  // Positionwise test; no carry in k + (n-k) iff k_l <= n_l for all l.
  while (k != 0 || n != 0) {
    if (k % base > n % base) return false;
    k /= base;
    n /= base;
  }
  return true;
}

/// All k in [0, n] with carry-free (k, n-k), ascending. The list has
/// exactly prod_l (n_l + 1) elements.
inline std::vector<std::uint64_t> carry_free_partners(std::uint64_t n,
                                                      std::uint32_t base) {
  const DigitExpansion ne = expand(n, base);
  const std::size_t len = ne.length();
  std::vector<std::uint32_t> kd(len, 0);  // odometer over k digits, k_l <= n_l
  std::vector<std::uint64_t> weight(len);
  std::uint64_t w = 1;
  for (std::size_t l = 0; l < len; ++l) {
    weight[l] = w;
    if (l + 1 < len) w *= base;
  }
  std::vector<std::uint64_t> out;
  std::uint64_t k = 0;
  for (;;) {
    out.push_back(k);
    // Increment least-significant first: counts upward in mixed radix, so
    // the emitted k values are ascending.
    std::size_t l = 0;
    while (l < len && kd[l] == ne.digits[l]) {
      k -= static_cast<std::uint64_t>(kd[l]) * weight[l];
      kd[l] = 0;
      ++l;
    }
    if (l == len) break;
    ++kd[l];
    k += weight[l];
  }
  return out;
}

}  // namespace bary
