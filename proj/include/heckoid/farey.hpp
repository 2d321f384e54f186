#pragma once

#include <set>
#include <string>

#include "heckoid/moebius.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

/*
 * Boundary data of the fundamental domain of the group generated by the
 * reflections s -> 2k - s and the distinguished parabolic fixing r. The
 * boundary trace inside [0, 1] is I1 ∪ I2 with I1 = [0, r1) or [0, r1] and
 * I2 = [r2, 1] or (r2, 1]; exactly one of the inner endpoints is included,
 * and the parabolic carries r1 to r2.
 */
struct FundamentalIntervals {
  Slope r1;
  Slope r2;
  bool i1_closed_at_r1;
  bool i2_closed_at_r2;
  // Marks the special residue classes r ≡ ±1/p (mod 1), where other choices
  // of the domain edges can pinch one boundary interval to a point. The
  // endpoint formulas used here never do, so r1, r2 stay strictly inside
  // (0, 1) even when this flag is set.
  bool degenerate;
};

// Endpoint formulas for r = [m1,...,mk] in (0, 1), indexed by the parity of
// k: the excluded endpoint is [m1,...,mk,2n-2] and the included one is
// [m1,...,m_{k-1},mk-1,2].
FundamentalIntervals interval_endpoints(const Slope& r, int n);

// The parabolic fixing r that translates the Farey fan at r by 2n sectors,
// oriented so that it maps r1 onto r2. Matrix (1 + 2npq, -2nq^2; 2np^2,
// 1 - 2npq) for r = q/p, up to that orientation choice.
ExtendedMoebius parabolic_generator(const Slope& r, int n);

enum class SlopeClass { InI1, InI2, IsR, IsInfinity, Gap, OutsideUnit };

std::string slope_class_str(SlopeClass c);

// Exact membership of s relative to the boundary intervals of (r, n): Gap is
// the open stretch (r1, r2) minus r plus the excluded endpoint.
SlopeClass classify_slope(const Slope& s, const Slope& r, int n);

struct Reduction {
  Slope canonical;
  GeneratorWord witness;
};

/*
 * Precomputed reduction machinery for one pair (r, n): the intervals, the
 * oriented parabolic, and a conjugating matrix sending r to inf (under which
 * the parabolic becomes an integer translation by ±2n). Immutable and safe
 * to share across threads.
 */
class FareyContext {
 public:
  FareyContext(Slope r, int n);

  const Slope& r() const { return r_; }
  int n() const { return n_; }
  const ContinuedFraction& cf() const { return cf_; }
  const FundamentalIntervals& intervals() const { return intervals_; }
  const ExtendedMoebius& parabolic() const { return parabolic_; }

  SlopeClass classify(const Slope& s) const;

  // g^e(s) for the oriented parabolic g, computed from the closed form of
  // the matrix power (the parabolic is I + t N with N nilpotent).
  Slope parabolic_power(const Slope& s, const Int& e) const;

  /*
   * Deterministic reduction of s to the unique canonical representative in
   * I1 ∪ I2 ∪ {inf, r}: alternately fold s into [0, 1] with reflections and,
   * while s sits in the gap around r, push it back into the parabolic's
   * fundamental strip with the power that lands in the strip aligned at the
   * included endpoint. The returned witness replays the journey exactly.
   */
  Reduction reduce(const Slope& s) const;

  bool in_orbit_of_infinity(const Slope& s) const {
    return reduce(s).canonical.is_infinity();
  }

  Slope apply_witness(const GeneratorWord& w, Slope s) const;

 private:
  Slope r_;
  int n_;
  ContinuedFraction cf_;
  FundamentalIntervals intervals_;
  ExtendedMoebius parabolic_;
  Int parabolic_t_;  // parabolic_ = I + parabolic_t_ * N(r), |t| = 2n
  ExtendedMoebius conj_;  // conj_(r) = inf, integral, det -1
  Slope strip_included_;  // conj_ image of the included endpoint
  Slope strip_excluded_;  // conj_ image of the excluded endpoint
  int sigma_;             // parabolic_ conjugates to translation by sigma_ * 2n
};

// Free-function spellings; each builds the context on the fly.
Reduction reduce_slope(const Slope& s, const Slope& r, int n);
bool in_orbit_of_infinity(const Slope& s, const Slope& r, int n);
Slope apply_witness(const GeneratorWord& w, const Slope& s, const Slope& r, int n);

/*
 * Brute-force orbit enumeration, independent of reduce(): breadth-first
 * closure of the seed under the reflections and the parabolic, with every
 * state folded into [0, 1] ∪ {inf} (the reflections alone never leave that
 * set of representatives). From each state the parabolic is applied to the
 * state and to its reflected/translated copies in a small window around the
 * unit interval. The search expands states up to a loosened internal
 * denominator bound (intermediates may overshoot and come back down); the
 * returned set is filtered to denominator <= max_denominator. The result is
 * a deterministic set of certified orbit members.
 */
std::set<Slope> orbit_bfs_from(const FareyContext& ctx, const Slope& seed, int depth,
                               const Int& max_denominator);
std::set<Slope> orbit_bfs_oracle(const Slope& r, int n, int depth,
                                 const Int& max_denominator);

}  // namespace heckoid
