// Command-line surface: digit queries, coefficient queries, triangle
// rendering, identity verification sweeps. Exit codes: 0 success/PASS,
// 1 verification FAIL, 2 usage or argument errors.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bary/coefficients.hpp"
#include "bary/digits.hpp"
#include "bary/identities.hpp"
#include "bary/triangle.hpp"

namespace {

struct Options {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint32_t base = 2;
  std::uint32_t levels = 1;
  std::string format = "text";
  std::uint64_t mod_p = 0;  // 0 = not given
  std::string identity;
  std::uint64_t n_max = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  int trials = 1;
  int vars = 3;
};

void run_digits(const Options& o) {
  const bary::DigitExpansion e = bary::expand(o.n, o.base);
  std::cout << "expansion:";
  for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) {
    std::cout << ' ' << *it;
  }
  std::cout << '\n';
  std::cout << "digit_sum: " << bary::digit_sum(o.n, o.base) << '\n';
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::uint32_t d : e.digits) ++counts[d];
  for (const auto& [d, c] : counts) {
    std::cout << "count[" << d << "]: " << c << '\n';
  }
}

void run_binom(const Options& o) {
  const bary::BaryBinomial b = bary::bary_binom(o.n, o.k, o.base);
  std::cout << b.value.get_str() << '\n';
  // Factors are stored little-endian; print most-significant first.
  std::string line;
  for (auto it = b.digit_factors.rbegin(); it != b.digit_factors.rend(); ++it) {
    if (!line.empty()) line += "·";
    line += "(" + std::to_string(it->n_digit) + " choose " +
            std::to_string(it->k_digit) + ")";
  }
  std::cout << line << '\n';
}

void run_row(const Options& o) {
  for (std::uint64_t k = 0; k <= o.n; ++k) {
    if (k > 0) std::cout << ',';
    std::cout << bary::bary_binom_value(o.n, k, o.base).get_str();
  }
  std::cout << '\n';
}

void run_carryfree(const Options& o) {
  const auto partners = bary::carry_free_partners(o.n, o.base);
  for (std::size_t i = 0; i < partners.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << partners[i];
  }
  std::cout << '\n';
}

int run_triangle(const Options& o) {
  const bary::Triangle t = bary::build_direct(o.base, o.levels);
  if (o.format == "pbm") {
    if (o.mod_p == 0) {
      std::cerr << "error: --format pbm requires --mod\n";
      return 2;
    }
    std::cout << bary::render_pbm(t, bary::BigInt(static_cast<unsigned long>(o.mod_p)));
    return 0;
  }
  const bary::Triangle shown =
      o.mod_p != 0
          ? bary::reduce_mod(t, bary::BigInt(static_cast<unsigned long>(o.mod_p)))
          : t;
  std::cout << (o.format == "csv" ? bary::render_csv(shown)
                                  : bary::render_text(shown));
  return 0;
}

bary::VerificationReport run_one_identity(const std::string& name,
                                          const Options& o) {
  if (name == "binomial") {
    return bary::verify_binomial_identity(o.base, o.n_max, o.jobs);
  }
  if (name == "genfun") return bary::verify_genfun(o.base, o.n_max, o.jobs);
  if (name == "multinomial") {
    return bary::verify_multinomial(o.base, o.vars, o.n_max, o.jobs);
  }
  if (name == "symmetry") return bary::verify_symmetry(o.base, o.n_max, o.jobs);
  if (name == "recurrence") {
    return bary::verify_recurrence(o.base, o.n_max, o.jobs);
  }
  if (name == "lucas") return bary::verify_lucas(o.base, o.n_max, o.jobs);
  if (name == "kummer") return bary::verify_kummer(o.base, o.n_max, o.jobs);
  if (name == "orthogonality") {
    return bary::verify_orthogonality(o.base, o.n_max, o.jobs);
  }
  if (name == "inverse") {
    return bary::verify_inverse_relations(o.base, o.n_max, o.trials, o.seed,
                                          o.jobs);
  }
  if (name == "convolution") {
    return bary::verify_convolution_lift(o.base, o.n_max, o.trials, o.seed,
                                         o.jobs);
  }
  if (name == "chu-vandermonde") {
    return bary::verify_chu_vandermonde(o.n_max, o.jobs);
  }
  if (name == "pochhammer") {
    return bary::verify_pochhammer_identity(o.base, o.n_max, o.jobs);
  }
  if (name == "base3-weighted") {
    return bary::verify_base3_weighted(o.n_max, o.jobs);
  }
  throw std::invalid_argument("unknown identity: " + name);
}

// Default ranges of `verify all`: the full sweep the acceptance suite
// runs, one report line per (identity, base).
int run_verify_all(const Options& o) {
  bool all_pass = true;
  auto run = [&](const std::string& name, std::uint32_t base,
                 std::uint64_t n_max, int trials = 1) {
    Options local = o;
    local.base = base;
    local.n_max = n_max;
    local.trials = trials;
    const auto rep = run_one_identity(name, local);
    std::cout << rep.line() << '\n';
    all_pass = all_pass && rep.passed;
  };
  for (std::uint32_t b : {2, 3, 4, 5, 10}) run("binomial", b, 2000);
  for (std::uint32_t b : {2, 3, 4, 5, 10}) run("genfun", b, 1000);
  for (std::uint32_t b : {2, 3, 5}) run("orthogonality", b, 500);
  for (std::uint32_t p : {2, 3, 5, 7, 11}) run("lucas", p, 600);
  for (std::uint32_t p : {2, 3, 5, 7, 11}) run("kummer", p, 600);
  for (std::uint32_t b : {2, 3, 4, 5, 7, 10}) run("symmetry", b, 3000);
  for (std::uint32_t b : {2, 3, 4, 5, 7, 10}) run("recurrence", b, 3000);
  run("base3-weighted", 3, 2000);
  for (std::uint32_t b : {2, 3, 4}) run("pochhammer", b, 500);
  run("chu-vandermonde", 2, 30);
  for (std::uint32_t b : {2, 3, 4}) run("convolution", b, 300, 20);
  for (std::uint32_t b : {2, 3, 4}) run("inverse", b, 300, 20);
  for (std::uint32_t b : {2, 3}) {
    Options local = o;
    local.base = b;
    local.n_max = 100;
    local.vars = 3;
    const auto rep = run_one_identity("multinomial", local);
    std::cout << rep.line() << '\n';
    all_pass = all_pass && rep.passed;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact b-ary binomial coefficients, digital identities and "
               "generalized Pascal triangles"};
  app.require_subcommand(1);
  Options o;

  auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--base", o.base, "base b (2..65536)")
        ->default_val(2)
        ->check(CLI::Range(2, 65536));
  };

  auto* digits_cmd =
      app.add_subcommand("digits", "base-b expansion and digit statistics");
  digits_cmd->add_option("n", o.n, "nonnegative integer")->required();
  add_base(digits_cmd);

  auto* binom_cmd = app.add_subcommand(
      "binom", "b-ary binomial coefficient with its digit factorization");
  binom_cmd->add_option("n", o.n, "upper argument")->required();
  binom_cmd->add_option("k", o.k, "lower argument")->required();
  add_base(binom_cmd);

  auto* row_cmd =
      app.add_subcommand("row", "row n of the b-ary Pascal triangle as CSV");
  row_cmd->add_option("n", o.n, "row index")->required();
  add_base(row_cmd);

  auto* carry_cmd = app.add_subcommand(
      "carryfree", "all k in [0,n] with carry-free (k, n-k) in base b");
  carry_cmd->add_option("n", o.n, "nonnegative integer")->required();
  add_base(carry_cmd);

  auto* tri_cmd =
      app.add_subcommand("triangle", "render the triangle T_m^(b)");
  add_base(tri_cmd);
  tri_cmd->add_option("--levels", o.levels, "levels m (b^m rows)")
      ->required()
      ->check(CLI::Range(1, 64));
  tri_cmd->add_option("--format", o.format, "text, csv or pbm")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "csv", "pbm"}));
  tri_cmd->add_option("--mod", o.mod_p, "reduce entries mod p")
      ->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));

  auto* verify_cmd = app.add_subcommand(
      "verify", "sweep an identity and print a verification report line");
  verify_cmd->add_option("identity", o.identity, "identity name or 'all'")
      ->required()
      ->check(CLI::IsMember({"binomial", "genfun", "multinomial", "symmetry",
                             "recurrence", "lucas", "kummer", "orthogonality",
                             "inverse", "convolution", "chu-vandermonde",
                             "pochhammer", "base3-weighted", "all"}));
  add_base(verify_cmd);
  verify_cmd->add_option("--n-max", o.n_max, "sweep bound");
  verify_cmd->add_option("--seed", o.seed, "seed for randomized checks")
      ->default_val(0);
  verify_cmd->add_option("--jobs", o.jobs, "worker threads")
      ->default_val(1)
      ->check(CLI::Range(1, 256));
  verify_cmd->add_option("--trials", o.trials,
                         "random trials (convolution, inverse)")
      ->default_val(1)
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--vars", o.vars, "variables (multinomial)")
      ->default_val(3)
      ->check(CLI::Range(2, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (digits_cmd->parsed()) {
      run_digits(o);
    } else if (binom_cmd->parsed()) {
      run_binom(o);
    } else if (row_cmd->parsed()) {
      run_row(o);
    } else if (carry_cmd->parsed()) {
      run_carryfree(o);
    } else if (tri_cmd->parsed()) {
      return run_triangle(o);
    } else if (verify_cmd->parsed()) {
      if (o.identity == "all") return run_verify_all(o);
      if (verify_cmd->count("--n-max") == 0) {
        std::cerr << "error: verify " << o.identity << " requires --n-max\n";
        return 2;
      }
      const auto rep = run_one_identity(o.identity, o);
      std::cout << rep.line() << '\n';
      return rep.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
