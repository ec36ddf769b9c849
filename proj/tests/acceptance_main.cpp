// Acceptance suite: every criterion is exact (golden bytes or exhaustive
// exact sweeps) and carries a wall-clock budget. Prints one line per
// criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bary/coefficients.hpp"
#include "bary/digits.hpp"
#include "bary/identities.hpp"
#include "bary/triangle.hpp"
#include "oracles.hpp"

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

void require_report(const bary::VerificationReport& rep) {
  require(rep.passed, rep.line());
}

const char* kGoldenT2Base3 =
    "1\n"
    "1,1\n"
    "1,2,1\n"
    "1,0,0,1\n"
    "1,1,0,1,1\n"
    "1,2,1,1,2,1\n"
    "1,0,0,2,0,0,1\n"
    "1,1,0,2,2,0,1,1\n"
    "1,2,1,2,4,2,1,2,1\n";

const char* kGoldenT2Base4 =
    "1\n"
    "1,1\n"
    "1,2,1\n"
    "1,3,3,1\n"
    "1,0,0,0,1\n"
    "1,1,0,0,1,1\n"
    "1,2,1,0,1,2,1\n"
    "1,3,3,1,1,3,3,1\n"
    "1,0,0,0,2,0,0,0,1\n"
    "1,1,0,0,2,2,0,0,1,1\n"
    "1,2,1,0,2,4,2,0,1,2,1\n"
    "1,3,3,1,2,6,6,2,1,3,3,1\n"
    "1,0,0,0,3,0,0,0,3,0,0,0,1\n"
    "1,1,0,0,3,3,0,0,3,3,0,0,1,1\n"
    "1,2,1,0,3,6,3,0,3,6,3,0,1,2,1\n"
    "1,3,3,1,3,9,9,3,3,9,9,3,1,3,3,1\n";

void check_golden_base3() {
  require(bary::render_csv(bary::build_direct(3, 2)) == kGoldenT2Base3,
          "CSV of the 9-row base-3 triangle diverged from the golden bytes");
}

void check_golden_base4() {
  require(bary::render_csv(bary::build_direct(4, 2)) == kGoldenT2Base4,
          "CSV of the 16-row base-4 triangle diverged from the golden bytes");
}

void check_tensor_equivalence() {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{
      {2, 6}, {3, 4}, {4, 3}, {5, 3}};
  for (const auto& [b, m] : cases) {
    const bary::Triangle direct = bary::build_direct(b, m);
    const bary::Triangle tensor = bary::build_tensor(b, m);
    require(direct.rows.size() == tensor.rows.size(),
            "tensor row count mismatch");
    for (std::size_t n = 0; n < direct.rows.size(); ++n) {
      require(direct.rows[n] == tensor.rows[n],
              "tensor/direct entry mismatch at base " + std::to_string(b) +
                  " levels " + std::to_string(m) + " row " + std::to_string(n));
    }
  }
}

void check_binomial_identity() {
  for (std::uint32_t b : {2, 3, 4, 5, 10}) {
    require_report(bary::verify_binomial_identity(b, 2000));
  }
}

void check_genfun() {
  for (std::uint32_t b : {2, 3, 4, 5, 10}) {
    require_report(bary::verify_genfun(b, 1000));
  }
}

void check_orthogonality() {
  for (std::uint32_t b : {2, 3, 5}) {
    require_report(bary::verify_orthogonality(b, 500));
  }
}

void check_lucas_kummer() {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    require_report(bary::verify_lucas(p, 600));
    require_report(bary::verify_kummer(p, 600));
  }
}

void check_symmetry_recurrence() {
  for (std::uint32_t b : {2, 3, 4, 5, 7, 10}) {
    require_report(bary::verify_symmetry(b, 3000));
    require_report(bary::verify_recurrence(b, 3000));
  }
}

void check_base3_weighted() {
  require_report(bary::verify_base3_weighted(2000));
}

void check_pochhammer_chu() {
  for (std::uint32_t b : {2, 3, 4}) {
    require_report(bary::verify_pochhammer_identity(b, 500));
  }
  require_report(bary::verify_chu_vandermonde(30));
}

void check_convolution_inverse() {
  for (std::uint32_t b : {2, 3, 4}) {
    require_report(bary::verify_convolution_lift(b, 300, 20, 0));
    require_report(bary::verify_inverse_relations(b, 300, 20, 0));
  }
}

void check_multinomial() {
  for (std::uint32_t b : {2, 3}) {
    require_report(bary::verify_multinomial(b, 3, 100));
  }
}

void check_sierpinski_bitmap() {
  const auto mask = oracles::sierpinski_mask(5);
  std::ostringstream expected;
  expected << "P1\n32 32\n";
  for (const auto& row : mask) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) expected << ' ';
      expected << (row[k] ? '1' : '0');
    }
    expected << '\n';
  }
  const std::string got =
      bary::render_pbm(bary::build_direct(2, 5), bary::BigInt(2));
  require(got == expected.str(),
          "depth-5 Sierpinski bitmap diverged from the recursive mask");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden triangle, base 3, 9 rows", 1.0, check_golden_base3},
      {2, "golden triangle, base 4, 16 rows", 1.0, check_golden_base4},
      {3, "tensor equivalence (2,6) (3,4) (4,3) (5,3)", 10.0,
       check_tensor_equivalence},
      {4, "binomial identity, n <= 2000, b in {2,3,4,5,10}", 60.0,
       check_binomial_identity},
      {5, "generating function, n <= 1000, b in {2,3,4,5,10}", 30.0,
       check_genfun},
      {6, "orthogonality, n <= 500, b in {2,3,5}", 60.0, check_orthogonality},
      {7, "lucas and kummer, n <= 600, p in {2,3,5,7,11}", 60.0,
       check_lucas_kummer},
      {8, "symmetry and recurrence, n <= 3000, b in {2,3,4,5,7,10}", 30.0,
       check_symmetry_recurrence},
      {9, "base-3 weighted form, n <= 2000", 10.0, check_base3_weighted},
      {10, "rising-factorial and chu-vandermonde identities", 60.0,
       check_pochhammer_chu},
      {11, "convolution lift and inverse relations, 20 seeds", 30.0,
       check_convolution_inverse},
      {12, "trinomial identity, n <= 100, b in {2,3}", 60.0,
       check_multinomial},
      {13, "sierpinski bitmap, depth 5", 1.0, check_sierpinski_bitmap},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && secs >= c.limit_seconds) {
      ok = false;
      detail = "runtime over budget";
    }
    std::ostringstream line;
    line << "[" << std::setw(2) << c.id << "] " << c.name << ": "
         << (ok ? "PASS" : "FAIL") << " (" << std::fixed
         << std::setprecision(2) << secs << "s < " << c.limit_seconds << "s)";
    if (!ok && !detail.empty()) line << "\n     " << detail;
    std::cout << line.str() << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
