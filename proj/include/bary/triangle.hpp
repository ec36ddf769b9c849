#pragma once
// b-ary Pascal triangles T_m^(b): direct construction from the digit
// product formula, the tensor composition that assembles T_m from scaled
// copies of T_{m-1}, mod-p reduction, and text/CSV/PBM renderers.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bary/bigint.hpp"
#include "bary/coefficients.hpp"
#include "bary/digits.hpp"

namespace bary {

inline constexpr std::uint64_t kMaxTriangleRows = std::uint64_t{1} << 20;

/// Triangular array with base^levels rows; row n holds n+1 entries.
struct Triangle {
  std::uint32_t base = 2;
  std::uint32_t levels = 1;
  std::vector<std::vector<BigInt>> rows;

  std::uint64_t row_count() const { return rows.size(); }
};

namespace detail {

inline std::uint64_t checked_row_count(std::uint32_t base, std::uint32_t levels) {
  check_base(base);
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < levels; ++i) {
    r *= base;
    if (r > kMaxTriangleRows) {
      throw std::invalid_argument("triangle too large: base^levels exceeds 2^20 rows");
    }
  }
  return r;
}

}  // namespace detail

/// T_m^(b) by the digit product formula: rows[n][k] = binom(n,k)_b.
inline Triangle build_direct(std::uint32_t base, std::uint32_t levels) {
  const std::uint64_t count = detail::checked_row_count(base, levels);
  Triangle t;
  t.base = base;
  t.levels = levels;
  t.rows.resize(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    auto& row = t.rows[n];
    row.reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
      row.push_back(bary_binom_value(n, k, base));
    }
  }
  return t;
}

/// Tensor composition: with R = a.row_count(), entry (n, k) of a (x) b is
/// b[n/R][k/R] * a[n%R][k%R], out-of-triangle positions reading as 0.
/// The block picture (binom-scaled copies of a with zero-triangle
/// fillers) is a consequence of this index rule.
inline Triangle tensor_compose(const Triangle& a, const Triangle& b) {
  if (a.base != b.base) {
    throw std::invalid_argument("tensor_compose requires matching bases");
  }
  const std::uint64_t ra = a.row_count(), rb = b.row_count();
  if (ra == 0 || rb == 0 || ra * rb > kMaxTriangleRows) {
    throw std::invalid_argument("tensor_compose result exceeds 2^20 rows");
  }
  Triangle t;
  t.base = a.base;
  t.levels = a.levels + b.levels;
  const std::uint64_t count = ra * rb;
  t.rows.resize(count);
  const BigInt zero(0);
  for (std::uint64_t n = 0; n < count; ++n) {
    const std::uint64_t i = n / ra, np = n % ra;
    auto& row = t.rows[n];
    row.reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
      const std::uint64_t j = k / ra, kp = k % ra;
      if (j > i || kp > np) {
        row.push_back(zero);
      } else {
        row.push_back(b.rows[i][j] * a.rows[np][kp]);
      }
    }
  }
  return t;
}

/// T_m^(b) as the (m-1)-fold tensor composition of T_1^(b) with itself.
inline Triangle build_tensor(std::uint32_t base, std::uint32_t levels) {
  detail::checked_row_count(base, levels);
  const Triangle t1 = build_direct(base, 1);
  Triangle t = t1;
  for (std::uint32_t i = 1; i < levels; ++i) t = tensor_compose(t, t1);
  return t;
}

/// Every entry reduced into [0, p-1].
inline Triangle reduce_mod(const Triangle& t, const BigInt& p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  Triangle r;
  r.base = t.base;
  r.levels = t.levels;
  r.rows.resize(t.rows.size());
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    r.rows[n].reserve(t.rows[n].size());
    for (const BigInt& e : t.rows[n]) r.rows[n].push_back(mod_floor(e, p));
  }
  return r;
}

/// Centered pyramid; zeros print as ".", other entries in decimal,
/// right-aligned in a fixed cell width taken from the widest entry, two
/// spaces between cells.
inline std::string render_text(const Triangle& t) {
  if (t.rows.empty()) return "";
  std::size_t width = 1;
  for (const auto& row : t.rows) {
    for (const BigInt& e : row) {
      if (e != 0) width = std::max(width, e.get_str().size());
    }
  }
  const std::size_t count = t.rows.size();
  const std::size_t full = count * width + 2 * (count - 1);
  std::string out;
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t line_width = (n + 1) * width + 2 * n;
    std::string line((full - line_width) / 2, ' ');
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) line += "  ";
      const std::string cell = t.rows[n][k] == 0 ? "." : t.rows[n][k].get_str();
      line.append(width - cell.size(), ' ');
      line += cell;
    }
    out += line;
    out += '\n';
  }
  return out;
}

/// One line per row, comma-separated decimal entries, zeros as "0".
inline std::string render_csv(const Triangle& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += row[k].get_str();
    }
    out += '\n';
  }
  return out;
}

/// Plain PBM (P1) bitmap, row_count x row_count, triangle left-aligned:
/// cell 1 iff k <= n and entry (n,k) is nonzero mod p, padding cells 0.
inline std::string render_pbm(const Triangle& t, const BigInt& p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  const std::size_t count = t.rows.size();
  std::ostringstream os;
  os << "P1\n" << count << " " << count << "\n";
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) os << ' ';
      const bool on = k <= n && mod_floor(t.rows[n][k], p) != 0;
      os << (on ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bary
