// Acceptance suite: every release-gating check, one line of output per
// criterion, nonzero exit when anything fails. Bounds and tolerances are
// pinned here, in code; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "heckoid/heckoid.hpp"
#include "heckoid/verify.hpp"

using namespace heckoid;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double ms) {
  std::printf("[%s] %d. %s: %s (%.1f ms)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str(), ms);
  if (!pass) ++failures;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::vector<std::pair<Slope, int>>& scan_pairs() {
  static const std::vector<std::pair<Slope, int>> pairs = {
      {Slope(1, 3), 2}, {Slope(2, 5), 2}, {Slope(3, 10), 2},
      {Slope(3, 10), 3}, {Slope(5, 7), 2}};
  return pairs;
}

void criterion_intervals() {
  interval_endpoints(Slope(3, 10), 2);  // warm-up outside the timed window
  auto start = Clock::now();
  FundamentalIntervals fi = interval_endpoints(Slope(3, 10), 2);
  double ms = ms_since(start);
  bool pass = fi.r1 == Slope(5, 17) && fi.r2 == Slope(7, 23) && fi.i1_closed_at_r1 &&
              !fi.i2_closed_at_r2 && ms < 1.0;
  report(1, "boundary intervals of (3/10, 2)",
         pass, "r1 = " + fi.r1.str() + ", r2 = " + fi.r2.str(), ms);
}

void criterion_word_lemmas() {
  auto start = Clock::now();
  WordLemmaReport rep = verify_word_lemmas(60);
  double ms = ms_since(start);
  bool in_time = ms < 5000.0;
  report(2, "S-sequence shape, all q/p with p <= 60",
         rep.shape_failures.empty() && in_time,
         std::to_string(rep.checked) + " slopes, " +
             std::to_string(rep.shape_failures.size()) + " failures",
         ms);
  report(3, "T-sequence induction and closed forms",
         rep.induction_failures.empty() && in_time,
         std::to_string(rep.induction_failures.size()) + " failures", ms);
  report(4, "(S1,S2,S1,S2) decomposition suite", rep.decomposition_failures.empty(),
         std::to_string(rep.decomposition_failures.size()) + " failures", ms);
}

void criterion_small_cancellation() {
  auto start = Clock::now();
  SmallCancellationReport rep = verify_small_cancellation(12, {2, 3});
  double ms = ms_since(start);
  bool pass = rep.pass() && ms < 600000.0;
  std::string detail = std::to_string(rep.checked) + " (r, n) cases, " +
                       std::to_string(rep.failures.size()) + " failures";
  if (!rep.failures.empty()) detail += "; first: " + rep.failures.front();
  report(5, "C(4n), T(4) and minimal piece counts, p <= 12, n in {2,3}", pass, detail, ms);
}

void criterion_interval_patterns() {
  auto start = Clock::now();
  long long scanned = 0, violations = 0;
  for (const auto& [r, n] : scan_pairs()) {
    Prop51Report rep = verify_prop51(make_context(r, n), 100);
    scanned += rep.scanned;
    violations += static_cast<long long>(rep.violations.size());
  }
  double ms = ms_since(start);
  bool pass = violations == 0 && ms < 60000.0;
  report(6, "interval slopes free of forbidden patterns, denominators <= 100", pass,
         std::to_string(scanned) + " slopes scanned, " + std::to_string(violations) +
             " violations",
         ms);
}

void criterion_cross_check() {
  auto start = Clock::now();
  long long orbit = 0, interval = 0, issues = 0;
  std::string first;
  for (const auto& [r, n] : scan_pairs()) {
    CrossCheckReport rep = cross_check(make_context(r, n), 40, 6, 200);
    orbit += rep.orbit_checked;
    interval += rep.interval_checked;
    issues += static_cast<long long>(rep.inconsistencies.size());
    if (first.empty() && !rep.inconsistencies.empty()) first = rep.inconsistencies.front();
  }
  double ms = ms_since(start);
  std::string detail = std::to_string(orbit) + " orbit + " + std::to_string(interval) +
                       " interval slopes, " + std::to_string(issues) + " inconsistencies";
  if (!first.empty()) detail += "; first: " + first;
  report(7, "orbit/interval agreement of reduction and pattern certificate", issues == 0,
         detail, ms);
}

void criterion_pairing() {
  auto start = Clock::now();
  long long checked = 0, bad = 0;
  for (long long p = 2; p <= 60; ++p)
    for (long long q = 1; q < p; ++q) {
      if (gcd(Int(q), Int(p)) != 1) continue;
      for (int n : {2, 3, 4}) {
        Slope r(q, p);
        FundamentalIntervals fi = interval_endpoints(r, n);
        if (!(parabolic_generator(r, n)(fi.r1) == fi.r2)) ++bad;
        ++checked;
      }
    }
  bool instance = parabolic_generator(Slope(3, 10), 2)(Slope(5, 17)) == Slope(7, 23);
  double ms = ms_since(start);
  report(8, "parabolic pairing r1 -> r2, p <= 60, n in {2,3,4}", bad == 0 && instance,
         std::to_string(checked) + " cases, " + std::to_string(bad) + " mismatches", ms);
}

void criterion_reduction_soundness() {
  auto start = Clock::now();
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<long long> num_dist(-20000, 20000);
  std::uniform_int_distribution<long long> den_dist(1, 4000);
  long long checked = 0, bad = 0;
  for (const auto& [r, n] : scan_pairs()) {
    FareyContext ctx(r, n);
    for (int i = 0; i < 200; ++i) {
      Slope s = (i % 50 == 49) ? Slope::infinity() : Slope(num_dist(rng), den_dist(rng));
      Reduction red = ctx.reduce(s);
      if (!(ctx.apply_witness(red.witness, s) == red.canonical)) ++bad;
      Reduction again = ctx.reduce(red.canonical);
      if (!(again.canonical == red.canonical) || !again.witness.empty()) ++bad;
      ++checked;
    }
  }
  double ms = ms_since(start);
  report(9, "witness soundness and idempotence on 1000 pseudorandom slopes", bad == 0,
         std::to_string(checked) + " reductions, " + std::to_string(bad) + " failures", ms);
}

}  // namespace

int main() {
  criterion_intervals();
  criterion_word_lemmas();
  criterion_small_cancellation();
  criterion_interval_patterns();
  criterion_cross_check();
  criterion_pairing();
  criterion_reduction_soundness();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
