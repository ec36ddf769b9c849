#include "bary/triangle.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "oracles.hpp"

using namespace bary;

namespace {

bool same_entries(const Triangle& a, const Triangle& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t n = 0; n < a.rows.size(); ++n) {
    if (a.rows[n] != b.rows[n]) return false;
  }
  return true;
}

std::vector<BigInt> row_of(const std::vector<long>& v) {
  std::vector<BigInt> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

// Collapses whitespace runs so text-layout comparisons are value-exact.
std::string normalized(const std::string& line) {
  std::istringstream in(line);
  std::string token, out;
  while (in >> token) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("build_direct reproduces the small triangles") {
  const Triangle t31 = build_direct(3, 1);
  REQUIRE(t31.row_count() == 3);
  CHECK(t31.rows[0] == row_of({1}));
  CHECK(t31.rows[1] == row_of({1, 1}));
  CHECK(t31.rows[2] == row_of({1, 2, 1}));

  const Triangle t32 = build_direct(3, 2);
  REQUIRE(t32.row_count() == 9);
  CHECK(t32.rows[8] == row_of({1, 2, 1, 2, 4, 2, 1, 2, 1}));

  const Triangle t42 = build_direct(4, 2);
  REQUIRE(t42.row_count() == 16);
  CHECK(t42.rows[15] ==
        row_of({1, 3, 3, 1, 3, 9, 9, 3, 3, 9, 9, 3, 1, 3, 3, 1}));
}

TEST_CASE("triangle invariants") {
  for (auto [b, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 3}, {3, 2}, {5, 2}}) {
    const Triangle t = build_direct(b, m);
    std::uint64_t rows = 1;
    for (std::uint32_t i = 0; i < m; ++i) rows *= b;
    REQUIRE(t.row_count() == rows);
    CHECK(t.rows.back().size() == rows);
    for (std::uint64_t n = 0; n < rows; ++n) {
      REQUIRE(t.rows[n].size() == n + 1);
      for (std::uint64_t k = 0; k <= n; ++k) {
        CHECK(t.rows[n][k] == bary_binom_value(n, k, b));
        CHECK(t.rows[n][k] == t.rows[n][n - k]);  // palindromic rows
      }
    }
    // Top b rows coincide with the classical Pascal triangle.
    for (std::uint64_t n = 0; n < b; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        CHECK(t.rows[n][k] == oracles::pascal_binom(n, k));
      }
    }
  }
}

TEST_CASE("size guard refuses oversized triangles") {
  CHECK_THROWS_AS(build_direct(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(build_direct(1024, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_direct(2, 0), std::invalid_argument);
}

TEST_CASE("tensor composition equals direct construction") {
  const Triangle t31 = build_direct(3, 1);
  CHECK(same_entries(tensor_compose(t31, t31), build_direct(3, 2)));

  const Triangle t41 = build_direct(4, 1);
  CHECK(same_entries(tensor_compose(t41, t41), build_direct(4, 2)));

  const Triangle t21 = build_direct(2, 1);
  const Triangle left = tensor_compose(tensor_compose(t21, t21), t21);
  const Triangle right = tensor_compose(t21, tensor_compose(t21, t21));
  CHECK(same_entries(left, right));  // associativity, base 2

  const Triangle t51 = build_direct(5, 1);
  CHECK_THROWS_AS(tensor_compose(t31, t51), std::invalid_argument);
}

TEST_CASE("build_tensor equals build_direct") {
  CHECK(same_entries(build_tensor(3, 1), build_direct(3, 1)));
  CHECK(build_tensor(3, 2).rows[8] == row_of({1, 2, 1, 2, 4, 2, 1, 2, 1}));
  for (std::uint32_t m = 1; m <= 6; ++m) {
    CHECK(same_entries(build_tensor(2, m), build_direct(2, m)));
  }
  for (std::uint32_t m = 1; m <= 4; ++m) {
    CHECK(same_entries(build_tensor(3, m), build_direct(3, m)));
  }
  for (std::uint32_t m = 1; m <= 3; ++m) {
    CHECK(same_entries(build_tensor(4, m), build_direct(4, m)));
    CHECK(same_entries(build_tensor(5, m), build_direct(5, m)));
  }
}

TEST_CASE("reduce_mod") {
  const Triangle t = build_direct(2, 3);
  const Triangle parity = reduce_mod(t, BigInt(2));
  for (std::uint64_t n = 0; n < 8; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      CHECK(parity.rows[n][k] == mod_floor(oracles::pascal_binom(n, k), BigInt(2)));
    }
  }

  const Triangle t32 = build_direct(3, 2);
  CHECK(reduce_mod(t32, BigInt(3)).rows[8][4] == 1);  // 4 mod 3
  const Triangle big = reduce_mod(t32, BigInt(1000));
  CHECK(same_entries(big, t32));  // modulus above the max entry

  CHECK_THROWS_AS(reduce_mod(t32, BigInt(1)), std::invalid_argument);
}

TEST_CASE("reduced rows match classical binomial residues for prime moduli") {
  for (std::uint32_t p : {2, 3, 5}) {
    const Triangle t = reduce_mod(build_direct(p, 2), BigInt(static_cast<unsigned long>(p)));
    for (std::uint64_t n = 0; n < t.row_count(); ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        CHECK(t.rows[n][k] ==
              mod_floor(oracles::pascal_binom(n, k), BigInt(static_cast<unsigned long>(p))));
      }
    }
  }
}

TEST_CASE("render_csv golden output") {
  CHECK(render_csv(build_direct(3, 1)) == "1\n1,1\n1,2,1\n");
  const std::string twice = render_csv(build_direct(3, 2));
  CHECK(render_csv(build_direct(3, 2)) == twice);  // byte-deterministic
  CHECK(twice ==
        "1\n"
        "1,1\n"
        "1,2,1\n"
        "1,0,0,1\n"
        "1,1,0,1,1\n"
        "1,2,1,1,2,1\n"
        "1,0,0,2,0,0,1\n"
        "1,1,0,2,2,0,1,1\n"
        "1,2,1,2,4,2,1,2,1\n");
}

TEST_CASE("render_text shows dots for zeros and centers rows") {
  const std::string text = render_text(build_direct(3, 2));
  const auto lines = split_lines(text);
  REQUIRE(lines.size() == 9);
  CHECK(normalized(lines[6]) == "1 . . 2 . . 1");
  CHECK(normalized(lines[0]) == "1");
  CHECK(normalized(lines[8]) == "1 2 1 2 4 2 1 2 1");
  // The apex is padded; the bottom row starts flush left.
  CHECK(lines[0][0] == ' ');
  CHECK(lines[8][0] == '1');
}

TEST_CASE("render_pbm matches the recursive Sierpinski mask") {
  const Triangle t = build_direct(2, 3);
  const auto mask = oracles::sierpinski_mask(3);
  std::ostringstream expected;
  expected << "P1\n8 8\n";
  for (const auto& row : mask) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) expected << ' ';
      expected << (row[k] ? '1' : '0');
    }
    expected << '\n';
  }
  CHECK(render_pbm(t, BigInt(2)) == expected.str());
}
