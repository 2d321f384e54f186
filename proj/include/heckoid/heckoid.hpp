#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckoid/cancellation.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/moebius.hpp"
#include "heckoid/slope.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

/*
 * Everything needed to answer questions about the group <a, b | u_r^n>: the
 * normalized slope, its continued fraction, the fundamental-domain intervals
 * and oriented parabolic, the (S1, S2) decomposition and the forbidden
 * patterns. Immutable after construction and shareable across threads.
 */
class HeckoidContext {
 public:
  HeckoidContext(const Slope& r, int n);

  const Slope& r() const { return farey_.r(); }
  int n() const { return farey_.n(); }
  const Slope& input_r() const { return input_r_; }
  const Int& translation() const { return translation_; }  // r() = input_r - translation

  const FareyContext& farey() const { return farey_; }
  const ContinuedFraction& cf() const { return farey_.cf(); }
  const FundamentalIntervals& intervals() const { return farey_.intervals(); }
  const SDecomposition& s_parts() const { return s_parts_; }
  const PiecePattern& patterns() const { return patterns_; }

 private:
  Slope input_r_;
  Int translation_;
  FareyContext farey_;
  SDecomposition s_parts_;
  PiecePattern patterns_;
};

// Validates n >= 2 and r non-integral, then normalizes r into (0, 1) by an
// integer translation (recorded in the context).
HeckoidContext make_context(const Slope& r, int n);

enum class DecisionMethod { FareyReduction, PatternCertificate, Both };
std::string decision_method_str(DecisionMethod m);

/*
 * Outcome of a single decision. The orbit reduction is always the verdict;
 * when the slope word u_s is defined (unit representative not 0, 1 or inf)
 * the forbidden-pattern certificate runs alongside it. A true verdict with a
 * false certificate would contradict the necessary condition and is flagged
 * as inconsistent; a false verdict with a true certificate is merely an
 * inconclusive certificate.
 */
struct DecisionReport {
  bool verdict = false;
  Slope canonical;
  GeneratorWord witness;
  DecisionMethod method = DecisionMethod::FareyReduction;
  std::optional<bool> certificate;
  bool consistent = true;
};

// Is the simple loop of slope s null-homotopic, i.e. is s in the orbit of inf?
DecisionReport is_null_homotopic(const HeckoidContext& ctx, const Slope& s);

// The canonical representative of s in I1 ∪ I2 ∪ {inf, r}.
Slope canonical_class(const HeckoidContext& ctx, const Slope& s);

/*
 * Existence of an upper-meridian-pair-preserving epimorphism from the
 * 2-bridge link group of slope s onto the group of the context: s or s + 1
 * must reduce to inf. Records which disjunct fired.
 */
struct EpimorphismReport {
  bool verdict = false;
  int disjunct = 0;  // 0 = none, 1 = s, 2 = s + 1
  Slope canonical_s;
  Slope canonical_s_plus_one;
  GeneratorWord witness;  // witness of the firing disjunct
};
EpimorphismReport epimorphism_exists(const HeckoidContext& ctx, const Slope& s);

// All s in [0, 1) with denominator <= max_denominator admitting an
// epimorphism, ascending. Deterministic regardless of the worker count.
std::vector<Slope> enumerate_epimorphism_slopes(const HeckoidContext& ctx,
                                                const Int& max_denominator, int jobs = 0);

/*
 * Exhaustive scan of the boundary intervals: every reduced s != 0 in I1 ∪ I2
 * with denominator <= max_denominator must have CS(s) free of the forbidden
 * patterns. Violations would contradict the interval/pattern dichotomy the
 * decision procedure rests on, so the expected list is empty.
 */
struct Prop51Report {
  long long scanned = 0;
  std::vector<Slope> violations;
  bool pass() const { return violations.empty(); }
};
Prop51Report verify_prop51(const HeckoidContext& ctx, const Int& max_denominator,
                           int jobs = 0);

/*
 * Two-sided consistency harness. (i) Every slope the brute-force orbit
 * search certifies must reduce to inf and carry the forbidden pattern.
 * (ii) Every slope in I1 ∪ I2 ∪ {r} with denominator <= max_denominator must
 * not reduce to inf, and away from 0 the interval slopes must be free of the
 * pattern. (The word test is skipped at s = 0, where the slope word
 * degenerates, and at s = r, which the pattern dichotomy does not cover.)
 */
struct CrossCheckReport {
  long long orbit_checked = 0;
  long long interval_checked = 0;
  std::vector<std::string> inconsistencies;
  bool pass() const { return inconsistencies.empty(); }
};
CrossCheckReport cross_check(const HeckoidContext& ctx, const Int& max_denominator,
                             int bfs_depth, const Int& bfs_max_denominator, int jobs = 0);

}  // namespace heckoid
