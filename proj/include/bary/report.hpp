#pragma once
// Verification reports and the sweep runner behind every identity
// checker. Sweeps partition an outer index range across workers; each
// worker scans its share in ascending order and stops at its first
// failure; reports merge by taking the lexicographically smallest
// counterexample, so a run is byte-identical for any worker count.

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace bary {

/// First failing instance of a sweep. `outer` and `within` locate it in
/// canonical sweep order; tuple/lhs/rhs are human-readable renderings.
struct Counterexample {
  std::uint64_t outer = 0;
  std::uint64_t within = 0;  // passing instances before it in its step
  std::string tuple;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity;
  std::string base_label;  // decimal base, or "-" for base-free checks
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::uint64_t checked = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;

  std::string line() const {
    std::ostringstream os;
    os << "IDENTITY " << identity << " base=" << base_label << " range="
       << range_lo << ".." << range_hi << " checked=" << checked
       << " result=" << (passed ? "PASS" : "FAIL");
    if (counterexample) os << " counterexample=" << counterexample->tuple;
    return os.str();
  }
};

struct SweepOutcome {
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
};

namespace detail {

/// check(outer) -> optional<Counterexample> (fields within/tuple/lhs/rhs
/// set by the callee; outer is filled in here). instance_count(outer)
/// must return exactly the number of instances check() verifies for that
/// step when it succeeds.
template <typename CheckFn, typename CountFn>
SweepOutcome run_sweep(std::uint64_t outer_count, int jobs, CheckFn&& check,
                       CountFn&& instance_count) {
  std::optional<Counterexample> best;
  if (jobs <= 1 || outer_count <= 1) {
    for (std::uint64_t o = 0; o < outer_count; ++o) {
      if (auto ce = check(o)) {
        ce->outer = o;
        best = std::move(ce);
        break;
      }
    }
  } else {
    if (static_cast<std::uint64_t>(jobs) > outer_count) {
      jobs = static_cast<int>(outer_count);
    }
    std::atomic<std::uint64_t> fail_bound{~std::uint64_t{0}};
    std::vector<std::optional<Counterexample>> found(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](int w) {
      try {
        for (std::uint64_t o = w; o < outer_count;
             o += static_cast<std::uint64_t>(jobs)) {
          if (o > fail_bound.load(std::memory_order_relaxed)) break;
          if (auto ce = check(o)) {
            ce->outer = o;
            found[w] = std::move(ce);
            std::uint64_t cur = fail_bound.load();
            while (o < cur && !fail_bound.compare_exchange_weak(cur, o)) {
            }
            break;
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& ce : found) {
      if (!ce) continue;
      if (!best || ce->outer < best->outer ||
          (ce->outer == best->outer && ce->within < best->within)) {
        best = std::move(ce);
      }
    }
  }
  SweepOutcome out;
  if (best) {
    out.checked = best->within;
    for (std::uint64_t o = 0; o < best->outer; ++o) {
      out.checked += instance_count(o);
    }
    out.counterexample = std::move(best);
  } else {
    for (std::uint64_t o = 0; o < outer_count; ++o) {
      out.checked += instance_count(o);
    }
  }
  return out;
}

template <typename... Parts>
std::string tuple_str(Parts&&... parts) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  auto emit = [&](const auto& p) {
    if (!first) os << ",";
    first = false;
    os << p;
  };
  (emit(parts), ...);
  os << ")";
  return os.str();
}

}  // namespace detail
}  // namespace bary
