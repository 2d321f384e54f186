#include "heckoid/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace heckoid {

namespace {

constexpr long long kMaxMaterializedDenominator = 4'000'000;

long long to_longlong(const Int& v, const char* what) {
  if (v > kMaxMaterializedDenominator)
    throw std::length_error(std::string(what) + " too large to materialize: " + v.str());
  return v.convert_to<long long>();
}

// Least rotation by plain quadratic scan; words here are short.
std::string least_rotation(const std::string& s) {
  std::string best = s;
  std::string cur = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

SSeq least_rotation(const SSeq& s) {
  SSeq best = s;
  SSeq cur = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
      throw std::invalid_argument(std::string("invalid letter '") + c +
                                  "' (alphabet is a, A, b, B)");
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == inverse_letter(letters_[i - 1]))
      throw std::invalid_argument("word is not freely reduced: '" + letters_ + "'");
}

Word Word::inverse() const {
  std::string out(letters_.rbegin(), letters_.rend());
  for (char& c : out) c = inverse_letter(c);
  Word w;
  w.letters_ = std::move(out);  // reduced iff the original was
  return w;
}

char Word::inverse_letter(char c) {
  return std::isupper(static_cast<unsigned char>(c))
             ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
             : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

bool Word::positive(char c) { return std::islower(static_cast<unsigned char>(c)); }

bool Word::same_generator(char x, char y) {
  return std::tolower(static_cast<unsigned char>(x)) ==
         std::tolower(static_cast<unsigned char>(y));
}

CyclicWord::CyclicWord(Word w) : word_(std::move(w)) {
  if (word_.empty())
    throw std::invalid_argument("cyclic word must be nonempty");
  if (word_.size() > 1 &&
      word_[word_.size() - 1] == Word::inverse_letter(word_[0]))
    throw std::invalid_argument("word is not cyclically reduced: '" +
                                word_.letters() + "'");
  canonical_ = least_rotation(word_.letters());
}

std::string sseq_str(const SSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += ")";
  return out;
}

long long sseq_sum(const SSeq& s) {
  long long total = 0;
  for (long long v : s) total += v;
  return total;
}

bool sseq_symmetric(const SSeq& s) {
  return std::equal(s.begin(), s.end(), s.rbegin());
}

CyclicSSeq::CyclicSSeq(SSeq entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("cyclic sequence must be nonempty");
  canonical_ = least_rotation(entries_);
}

std::string CyclicSSeq::str() const { return "(" + sseq_str(entries_) + ")"; }

int epsilon(const Int& i, const Int& q, const Int& p) {
  if (i < 1 || i > p - 1)
    throw std::invalid_argument("epsilon index out of range [1, p-1]: i = " + i.str() +
                                ", p = " + p.str());
  if (gcd(q, p) != 1)
    throw std::invalid_argument("epsilon requires gcd(q, p) = 1, got q = " + q.str() +
                                ", p = " + p.str());
  Int f = (i * q) / p;  // operands positive, so this is the floor
  return (f % 2 == 0) ? +1 : -1;
}

Word relator_word(const Slope& r) {
  if (r.is_infinity() || r <= Slope(0, 1) || r > Slope(1, 1))
    throw std::domain_error("relator word requires a slope in (0, 1], got " + r.str());
  long long p = to_longlong(r.den(), "denominator");
  long long q = to_longlong(r.num(), "numerator");

  std::string hat;
  hat.reserve(static_cast<std::size_t>(p - 1));
  for (long long i = 1; i <= p - 1; ++i) {
    long long f = (i * q) / p;
    bool pos = (f % 2 == 0);
    char gen = (i % 2 == 1) ? 'b' : 'a';
    hat += pos ? gen : Word::inverse_letter(gen);
  }

  std::string u;
  u.reserve(static_cast<std::size_t>(2 * p));
  u += 'a';
  u += hat;
  if (p % 2 == 1)
    u += (q % 2 == 0) ? 'b' : 'B';
  else
    u += 'A';
  for (auto it = hat.rbegin(); it != hat.rend(); ++it)
    u += Word::inverse_letter(*it);
  return Word(std::move(u));
}

SSeq s_sequence(const Word& v) {
  if (v.empty()) throw std::domain_error("S-sequence of the empty word");
  SSeq runs;
  std::size_t i = 0;
  while (i < v.size()) {
    bool sign = Word::positive(v[i]);
    std::size_t j = i;
    while (j < v.size() && Word::positive(v[j]) == sign) ++j;
    runs.push_back(static_cast<long long>(j - i));
    i = j;
  }
  return runs;
}

CyclicSSeq cyclic_s_sequence(const CyclicWord& v) {
  SSeq runs = s_sequence(v.representative());
  const Word& w = v.representative();
  if (runs.size() > 1 && Word::positive(w[0]) == Word::positive(w[w.size() - 1])) {
    // The wrap-around run spans the seam: fold the first run into the last.
    long long first = runs.front();
    runs.erase(runs.begin());
    runs.back() += first;
  }
  return CyclicSSeq(std::move(runs));
}

bool is_cyclically_alternating(const Word& v) {
  if (v.empty()) return true;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (Word::same_generator(v[i], v[(i + 1) % v.size()])) return false;
  return true;
}

SSeq s_sequence_of_slope(const Slope& r) { return s_sequence(relator_word(r)); }

CyclicSSeq cyclic_s_sequence_of_slope(const Slope& r) {
  return cyclic_s_sequence(CyclicWord(relator_word(r)));
}

SSeq t_sequence(const Slope& r) {
  ContinuedFraction cf = cf_from_slope(r);
  if (cf.size() < 2)
    throw std::domain_error("T-sequence requires a continued fraction of length >= 2, got " +
                            cf.str());
  long long m = to_longlong(cf[0], "coefficient");
  bool m2_is_one = cf[1] == 1;
  SSeq s = s_sequence_of_slope(r);

  // Either S(r) = (t1<m+1>, m, t2<m+1>, m, ..., ts<m+1>, m) when m2 = 1, or
  // S(r) = (m+1, t1<m>, m+1, t2<m>, ..., m+1, ts<m>) when m2 >= 2. The run
  // value is m+1 in the first case and m in the second.
  long long run_value = m2_is_one ? m + 1 : m;
  long long sep_value = m2_is_one ? m : m + 1;
  SSeq t;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!m2_is_one) {
      if (s[i] != sep_value)
        throw std::logic_error("unexpected S-sequence shape for " + r.str() + ": " +
                               sseq_str(s));
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] == run_value) ++j;
    if (j == i)
      throw std::logic_error("unexpected S-sequence shape for " + r.str() + ": " +
                             sseq_str(s));
    t.push_back(static_cast<long long>(j - i));
    i = j;
    if (m2_is_one) {
      if (i >= s.size() || s[i] != sep_value)
        throw std::logic_error("unexpected S-sequence shape for " + r.str() + ": " +
                               sseq_str(s));
      ++i;
    }
  }
  return t;
}

Slope reduced_fraction_tilde(const Slope& r) {
  ContinuedFraction cf = cf_from_slope(r);
  if (cf.size() < 2)
    throw std::domain_error("shortened fraction requires a continued fraction of length >= 2, got " +
                            cf.str());
  std::vector<Int> coeffs;
  if (cf[1] == 1) {
    // Normal form forces k >= 3 here.
    coeffs.assign(cf.coefficients().begin() + 2, cf.coefficients().end());
  } else {
    coeffs.push_back(cf[1] - 1);
    coeffs.insert(coeffs.end(), cf.coefficients().begin() + 2, cf.coefficients().end());
  }
  return cf_value(ContinuedFraction(std::move(coeffs)));
}

namespace {

void append_run(SSeq& out, long long count, long long value) {
  out.insert(out.end(), static_cast<std::size_t>(count), value);
}

// Blocks of `block` of the given lengths, joined by single copies of `sep`.
SSeq joined_blocks(const SSeq& lengths, long long block, long long sep) {
  SSeq out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) out.push_back(sep);
    append_run(out, lengths[i], block);
  }
  return out;
}

void decompose_coeffs(const std::vector<long long>& c, SSeq& s1, SSeq& s2) {
  long long m = c[0];
  if (c.size() == 1) {
    s1.clear();
    s2 = {m};
    return;
  }
  long long m2 = c[1];
  if (m2 >= 2 && c.size() == 2) {
    s1 = {m + 1};
    s2.assign(static_cast<std::size_t>(m2 - 1), m);
    return;
  }
  if (m2 == 1 && c.size() == 3) {
    s1.assign(static_cast<std::size_t>(c[2]), m + 1);
    s2 = {m};
    return;
  }

  std::vector<long long> shortened;
  if (m2 == 1)
    shortened.assign(c.begin() + 2, c.end());
  else {
    shortened.push_back(m2 - 1);
    shortened.insert(shortened.end(), c.begin() + 2, c.end());
  }
  SSeq t1, t2;
  decompose_coeffs(shortened, t1, t2);

  if (m2 == 1) {
    s1 = joined_blocks(t1, m + 1, m);
    s2 = {m};
    for (long long t : t2) {
      append_run(s2, t, m + 1);
      s2.push_back(m);
    }
  } else {
    s1 = {m + 1};
    for (long long t : t2) {
      append_run(s1, t, m);
      s1.push_back(m + 1);
    }
    s2 = joined_blocks(t1, m, m + 1);
  }
}

}  // namespace

SDecomposition s_decomposition(const Slope& r) {
  ContinuedFraction cf = cf_from_slope(r);
  std::vector<long long> coeffs;
  coeffs.reserve(cf.size());
  for (const Int& m : cf.coefficients()) coeffs.push_back(to_longlong(m, "coefficient"));

  SDecomposition dec;
  decompose_coeffs(coeffs, dec.s1, dec.s2);

  // The construction must tile S(r) exactly.
  SSeq rebuilt;
  for (int rep = 0; rep < 2; ++rep) {
    rebuilt.insert(rebuilt.end(), dec.s1.begin(), dec.s1.end());
    rebuilt.insert(rebuilt.end(), dec.s2.begin(), dec.s2.end());
  }
  if (rebuilt != s_sequence_of_slope(r))
    throw std::logic_error("S-sequence decomposition failed to reconstruct S(" + r.str() +
                           ")");
  return dec;
}

}  // namespace heckoid
