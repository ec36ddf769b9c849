#pragma once
// Exact sparse multivariate polynomials over BigInt — the substrate every
// polynomial identity is verified on. Canonical form (no zero
// coefficients, graded-lex term order) is restored after every operation,
// so equality is a structural comparison.

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bary/bigint.hpp"

namespace bary {

/// Graded lexicographic order on exponent vectors: total degree first,
/// then lexicographic. Fixed so serialized polynomials are stable.
struct GradedLex {
  bool operator()(const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b) const {
    const std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class SparsePoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, BigInt, GradedLex>;

  static constexpr int kMaxArity = 8;

  explicit SparsePoly(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) {
      throw std::invalid_argument("SparsePoly arity must be in [1, 8]");
    }
  }

  static SparsePoly monomial(int arity, Exponents exponents, BigInt coeff) {
    SparsePoly p(arity);
    if (exponents.size() != static_cast<std::size_t>(arity)) {
      throw std::invalid_argument("exponent vector length must equal arity");
    }
    if (coeff != 0) p.terms_.emplace(std::move(exponents), std::move(coeff));
    return p;
  }

  static SparsePoly constant(int arity, BigInt coeff) {
    return monomial(arity, Exponents(arity, 0), std::move(coeff));
  }

  /// The single variable X<index>.
  static SparsePoly variable(int arity, int index) {
    if (index < 0 || index >= arity) {
      throw std::invalid_argument("variable index out of range");
    }
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(arity, std::move(e), BigInt(1));
  }

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given exponent vector (0 if absent).
  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;  // graded order: last is max
    return static_cast<std::int64_t>(
        std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
  }

  void add_term(Exponents e, const BigInt& c) {
    if (e.size() != static_cast<std::size_t>(arity_)) {
      throw std::invalid_argument("exponent vector length must equal arity");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    a += b;
    return a;
  }

  SparsePoly operator-() const {
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    return a + (-b);
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same_arity(b);
    SparsePoly r(a.arity_);
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Exact evaluation at an integer point.
  BigInt eval(std::span<const BigInt> point) const {
    if (point.size() != static_cast<std::size_t>(arity_)) {
      throw std::invalid_argument("evaluation point length must equal arity");
    }
    BigInt sum(0), term, p;
    for (const auto& [e, c] : terms_) {
      term = c;
      for (int i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), e[i]);
        term *= p;
      }
      sum += term;
    }
    return sum;
  }

  /// Debug form: terms in graded-lex order as coeff*X0^e0*X1^e1, joined
  /// by " + "; the zero polynomial prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      for (int i = 0; i < arity_; ++i) os << "*X" << i << "^" << e[i];
    }
    return os.str();
  }

 private:
  void check_same_arity(const SparsePoly& o) const {
    if (arity_ != o.arity_) {
      throw std::invalid_argument("polynomial arity mismatch");
    }
  }

  int arity_;
  TermMap terms_;
};

inline SparsePoly pow(const SparsePoly& p, unsigned e) {
  SparsePoly r = SparsePoly::constant(p.arity(), BigInt(1));
  SparsePoly base = p;
  while (e != 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return r;
}

/// Rising factorial (v)_m = v (v+1) ... (v+m-1) where v is the sum of the
/// designated variables; (v)_0 = 1. Supports (x)_m, (y)_m, (x+y)_m.
inline SparsePoly rising_factorial(int arity, std::span<const int> vars,
                                   unsigned m) {
  SparsePoly v = SparsePoly::constant(arity, BigInt(0));
  for (int idx : vars) v += SparsePoly::variable(arity, idx);
  SparsePoly r = SparsePoly::constant(arity, BigInt(1));
  for (unsigned i = 0; i < m; ++i) {
    r *= v + SparsePoly::constant(arity, BigInt(i));
  }
  return r;
}

}  // namespace bary
