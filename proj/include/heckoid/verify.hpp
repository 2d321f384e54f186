#pragma once

#include <string>
#include <vector>

#include "heckoid/slope.hpp"

namespace heckoid {

/*
 * Exhaustive structural checks of the relator words over all reduced q/p
 * with 2 <= p <= max_p, bucketed by what failed:
 *   shape            - run-length shape of S(r) (values, ends, adjacency,
 *                      template parse) and the length bookkeeping 2p;
 *   induction        - CS(r~) = CT(r) and the closed forms tying the
 *                      (S1, S2) decomposition of r to the one of r~;
 *   decomposition    - symmetry, end values, the exact (S1,S2,S1,S2) tiling,
 *                      the twice-occurrence count, and the forced adjacent
 *                      pairs (m+1,m+1) in S1 / (m,m) in S2.
 */
struct WordLemmaReport {
  long long checked = 0;
  std::vector<std::string> shape_failures;
  std::vector<std::string> induction_failures;
  std::vector<std::string> decomposition_failures;
  bool pass() const {
    return shape_failures.empty() && induction_failures.empty() &&
           decomposition_failures.empty();
  }
};
WordLemmaReport verify_word_lemmas(long long max_p);

/*
 * Brute-force small cancellation sweep: for every reduced q/p with p <= max_p
 * and every index n in `indices`, the symmetrized set of u_r^n must satisfy
 * C(4n) and T(4), with the minimum piece decomposition of each full relator
 * rotation at least 4n long.
 */
struct SmallCancellationReport {
  long long checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
SmallCancellationReport verify_small_cancellation(long long max_p,
                                                  const std::vector<int>& indices,
                                                  int jobs = 0);

}  // namespace heckoid
