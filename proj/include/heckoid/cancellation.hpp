#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heckoid/slope.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

/*
 * The symmetrized closure of a cyclically reduced word: all cyclic
 * permutations of the word and of its inverse, deduplicated. A nonempty word
 * is a piece when it is a common prefix of two distinct elements; since the
 * set is rotation-closed, every subword of an element is the prefix of some
 * element, which makes the piece predicate a constant-time table lookup.
 */
class SymmetrizedSet {
 public:
  static SymmetrizedSet from_word(const CyclicWord& base);

  const CyclicWord& base() const { return base_; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t element_length() const { return elements_.empty() ? 0 : elements_[0].size(); }

  // Longest piece that is a prefix of the given element (0 when even its
  // first letter is not a piece).
  std::size_t max_piece_prefix(std::size_t element) const { return max_lcp_[element]; }

  // Piece status of the length `len` subword of an element starting at
  // `offset` (wrapping around the element cyclically).
  bool subword_is_piece(std::size_t element, std::size_t offset, std::size_t len) const;

  // First (element, offset) whose linear substring equals w, if any.
  std::optional<std::pair<std::size_t, std::size_t>> locate(const std::string& w) const;

  std::size_t rotation_index(std::size_t element, std::size_t shift) const {
    const auto& row = rotation_[element];
    return row[shift % row.size()];
  }

 private:
  CyclicWord base_;
  std::vector<std::string> elements_;              // sorted, deduplicated
  std::vector<std::size_t> max_lcp_;               // per element
  std::vector<std::vector<std::size_t>> rotation_;  // element x shift -> element index

  explicit SymmetrizedSet(CyclicWord base);
};

// Symmetrized closure of the relator u_r^n.
SymmetrizedSet symmetrize(const Slope& r, int n);

// Common-prefix scan over the whole set; b must be nonempty.
bool is_piece(const Word& b, const SymmetrizedSet& R);

/*
 * Minimum number of pieces multiplying to w, for w a subword of some element
 * (dynamic programming over cut positions). Throws std::invalid_argument when
 * w is not a subword of any element and std::domain_error when w admits no
 * piece decomposition at all. The empty word counts as 0 pieces.
 */
long long min_piece_count(const Word& w, const SymmetrizedSet& R);

// Greedy longest-match variant, kept as an independent route for testing
// against the dynamic program (the piece dictionary is prefix-closed).
long long min_piece_count_greedy(const Word& w, const SymmetrizedSet& R);

// C(p): every element is a product of pieces, and never of fewer than p.
// Elements with no piece decomposition at all fail the check.
bool verify_C(const SymmetrizedSet& R, int p);

// T(4): for every cyclically admissible triple (no adjacent inverse pair),
// at least one of the three junction products is reduced without
// cancellation. Smaller tuple lengths are vacuous for cyclically reduced
// elements under the adjacency condition.
bool verify_T4(const SymmetrizedSet& R);

/*
 * The cyclic run-length patterns that the cyclic S-sequence of a trivial
 * cyclically alternating word must contain: for k = 1 the single pattern of
 * 2n-2 copies of m, for k >= 2 the two patterns (2n-1)<S1,S2> and
 * (2n-1)<S2,S1>.
 */
struct PiecePattern {
  std::vector<SSeq> patterns;
};
PiecePattern forbidden_patterns(const Slope& r, int n);

// Contiguous containment in a cyclic sequence: some rotation of the haystack
// starts with the needle, and the needle is at most one full period long.
bool cyclic_contains_contiguous(const CyclicSSeq& haystack, const SSeq& needle);

// Number of rotations of the haystack that start with the needle.
long long count_cyclic_occurrences(const CyclicSSeq& haystack, const SSeq& needle);

/*
 * Necessary condition for v = 1 in the group <a, b | u_r^n>: true when CS(v)
 * contains a forbidden pattern (inconclusive), false certifies that v is not
 * trivial. v must be nonempty, cyclically reduced and cyclically alternating.
 */
bool necessary_condition_trivial(const Word& v, const Slope& r, int n);

// Length of the longest word occurring both as a subword of the cyclic word
// (v) and as a subword of the cyclic word (u_r^n) or its inverse.
long long longest_common_cyclic_subword(const CyclicWord& v, const Slope& r, int n);

}  // namespace heckoid
