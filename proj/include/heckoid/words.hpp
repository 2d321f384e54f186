#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heckoid/slope.hpp"

namespace heckoid {

/*
 * Words in the free group F(a, b), stored as strings over the alphabet
 * {a, b, A, B} where an upper-case letter is the inverse of the lower-case
 * one. Words are always freely reduced; equality is visual (letter by
 * letter), never equality in the free group.
 */
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);
  static Word from_string(std::string_view text) { return Word(std::string(text)); }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  static char inverse_letter(char c);
  static bool positive(char c);  // lower case = exponent +1
  static bool same_generator(char x, char y);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

// A cyclic word: a cyclically reduced word considered up to rotation.
class CyclicWord {
 public:
  explicit CyclicWord(Word w);

  const Word& representative() const { return word_; }
  std::size_t size() const { return word_.size(); }
  char at(std::size_t i) const { return word_[i % word_.size()]; }

  // Least rotation; two cyclic words are equal iff these agree.
  const std::string& canonical_rotation() const { return canonical_; }

  friend bool operator==(const CyclicWord& x, const CyclicWord& y) {
    return x.canonical_ == y.canonical_;
  }

 private:
  Word word_;
  std::string canonical_;
};

// Run-length sequences of maximal constant-sign blocks.
using SSeq = std::vector<long long>;

std::string sseq_str(const SSeq& s);  // "(3,2,3,2)"
long long sseq_sum(const SSeq& s);
bool sseq_symmetric(const SSeq& s);

// A run-length sequence up to rotation.
class CyclicSSeq {
 public:
  CyclicSSeq() = default;
  explicit CyclicSSeq(SSeq entries);

  const SSeq& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::string str() const;  // "((3,2,3,2))"

  friend bool operator==(const CyclicSSeq& x, const CyclicSSeq& y) {
    return x.canonical_ == y.canonical_;
  }

 private:
  SSeq entries_;
  SSeq canonical_;
};

// Sign of the i-th letter of the standard slope word: (-1)^floor(i q / p).
int epsilon(const Int& i, const Int& q, const Int& p);

/*
 * The canonical relator word u_{q/p} of a slope in (0, 1]: length 2p,
 * cyclically reduced and cyclically alternating, built from the sign pattern
 * epsilon(i, q, p). For p odd u = a û b^{±1} û^{-1}, for p even
 * u = a û a^{-1} û^{-1}, where û alternates b, a, ... through the epsilons.
 */
Word relator_word(const Slope& r);

// Run lengths of maximal constant-sign blocks, read linearly: the first and
// last runs stay separate even when they carry the same sign.
SSeq s_sequence(const Word& v);

// Cyclic version: the wrap-around runs merge.
CyclicSSeq cyclic_s_sequence(const CyclicWord& v);

// True when a and b alternate around the whole cycle, i.e. neither a^{±2}
// nor b^{±2} occurs, wrap-around included.
bool is_cyclically_alternating(const Word& v);

// S(r) and CS(r): the (cyclic) S-sequence of the relator word of slope r.
SSeq s_sequence_of_slope(const Slope& r);
CyclicSSeq cyclic_s_sequence_of_slope(const Slope& r);

/*
 * For r = [m1,...,mk] with k >= 2, S(r) consists of m = m1 and m+1 only, and
 * one of the two values occurs in maximal runs separated by single copies of
 * the other (which one depends on whether m2 = 1). The T-sequence lists those
 * run lengths in order. Requires k >= 2.
 */
SSeq t_sequence(const Slope& r);

// The shortened slope r~ = [m3,...,mk] (m2 = 1) or [m2 - 1, m3,...,mk]
// (m2 >= 2); satisfies CS(r~) = CT(r). Requires k >= 2.
Slope reduced_fraction_tilde(const Slope& r);

/*
 * The decomposition S(r) = (S1, S2, S1, S2): S1 and S2 are symmetric, S1
 * begins and ends with m+1 (empty exactly when k = 1), S2 begins and ends
 * with m, and each occurs exactly twice in CS(r). Computed by recursion on
 * the shortened fraction and validated against S(r).
 */
struct SDecomposition {
  SSeq s1;
  SSeq s2;
};
SDecomposition s_decomposition(const Slope& r);

}  // namespace heckoid
