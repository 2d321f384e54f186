#include "heckoid/cancellation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace heckoid {

namespace {

std::size_t common_prefix_length(const std::string& x, const std::string& y) {
  std::size_t n = std::min(x.size(), y.size());
  std::size_t i = 0;
  while (i < n && x[i] == y[i]) ++i;
  return i;
}

std::string rotate_string(const std::string& s, std::size_t shift) {
  return s.substr(shift) + s.substr(0, shift);
}

}  // namespace

SymmetrizedSet::SymmetrizedSet(CyclicWord base) : base_(std::move(base)) {
  const std::string& w = base_.representative().letters();
  std::string inv = base_.representative().inverse().letters();

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < w.size(); ++i) {
    index.emplace(rotate_string(w, i), 0);
    index.emplace(rotate_string(inv, i), 0);
  }
  elements_.reserve(index.size());
  for (auto& [word, idx] : index) {
    idx = elements_.size();
    elements_.push_back(word);
  }

  max_lcp_.assign(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      std::size_t l = common_prefix_length(elements_[i], elements_[j]);
      max_lcp_[i] = std::max(max_lcp_[i], l);
      max_lcp_[j] = std::max(max_lcp_[j], l);
    }

  rotation_.assign(elements_.size(), std::vector<std::size_t>(w.size()));
  for (std::size_t e = 0; e < elements_.size(); ++e)
    for (std::size_t shift = 0; shift < w.size(); ++shift)
      rotation_[e][shift] = index.at(rotate_string(elements_[e], shift));
}

SymmetrizedSet SymmetrizedSet::from_word(const CyclicWord& base) {
  return SymmetrizedSet(base);
}

bool SymmetrizedSet::subword_is_piece(std::size_t element, std::size_t offset,
                                      std::size_t len) const {
  if (len == 0 || len > element_length()) return false;
  return len <= max_lcp_[rotation_index(element, offset)];
}

std::optional<std::pair<std::size_t, std::size_t>> SymmetrizedSet::locate(
    const std::string& w) const {
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    std::size_t pos = elements_[e].find(w);
    if (pos != std::string::npos) return std::make_pair(e, pos);
  }
  return std::nullopt;
}

SymmetrizedSet symmetrize(const Slope& r, int n) {
  if (r.is_infinity() || r <= Slope(0, 1) || r >= Slope(1, 1))
    throw std::domain_error("symmetrized relator set requires a slope in (0, 1), got " +
                            r.str());
  if (n < 2) throw std::domain_error("index n must be an integer >= 2");
  std::string u = relator_word(r).letters();
  std::string power;
  power.reserve(u.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) power += u;
  return SymmetrizedSet::from_word(CyclicWord(Word(std::move(power))));
}

bool is_piece(const Word& b, const SymmetrizedSet& R) {
  if (b.empty()) throw std::domain_error("the empty word is not a candidate piece");
  int holders = 0;
  for (const std::string& w : R.elements())
    if (w.compare(0, b.size(), b.letters()) == 0 && ++holders >= 2) return true;
  return false;
}

namespace {

constexpr long long kUnreachable = std::numeric_limits<long long>::max();

// DP over cut positions; empty result when some prefix has no decomposition.
std::optional<long long> min_pieces_located(const SymmetrizedSet& R, std::size_t element,
                                            std::size_t offset, std::size_t len) {
  std::vector<long long> best(len + 1, kUnreachable);
  best[0] = 0;
  for (std::size_t j = 1; j <= len; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i] == kUnreachable) continue;
      if (!R.subword_is_piece(element, offset + i, j - i)) continue;
      best[j] = std::min(best[j], best[i] + 1);
    }
  if (best[len] == kUnreachable) return std::nullopt;
  return best[len];
}

std::pair<std::size_t, std::size_t> locate_or_throw(const Word& w, const SymmetrizedSet& R) {
  auto loc = R.locate(w.letters());
  if (!loc)
    throw std::invalid_argument("word is not a subword of the symmetrized set: '" +
                                w.letters() + "'");
  return *loc;
}

}  // namespace

long long min_piece_count(const Word& w, const SymmetrizedSet& R) {
  if (w.empty()) return 0;
  auto [element, offset] = locate_or_throw(w, R);
  auto result = min_pieces_located(R, element, offset, w.size());
  if (!result)
    throw std::domain_error("word is not a product of pieces: '" + w.letters() + "'");
  return *result;
}

long long min_piece_count_greedy(const Word& w, const SymmetrizedSet& R) {
  if (w.empty()) return 0;
  auto [element, offset] = locate_or_throw(w, R);
  std::size_t pos = 0;
  long long count = 0;
  while (pos < w.size()) {
    std::size_t longest =
        std::min<std::size_t>(R.max_piece_prefix(R.rotation_index(element, offset + pos)),
                              w.size() - pos);
    if (longest == 0)
      throw std::domain_error("word is not a product of pieces: '" + w.letters() + "'");
    pos += longest;
    ++count;
  }
  return count;
}

bool verify_C(const SymmetrizedSet& R, int p) {
  for (std::size_t e = 0; e < R.size(); ++e) {
    auto count = min_pieces_located(R, e, 0, R.element_length());
    if (!count || *count < p) return false;
  }
  return true;
}

bool verify_T4(const SymmetrizedSet& R) {
  const std::size_t m = R.size();
  std::vector<std::size_t> inverse_of(m);
  std::vector<char> first(m), last(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string& w = R.elements()[i];
    first[i] = w.front();
    last[i] = w.back();
    Word inv = Word(w).inverse();
    auto loc = R.locate(inv.letters());
    if (!loc || loc->second != 0 || R.elements()[loc->first] != inv.letters())
      throw std::logic_error("symmetrized set is not closed under inversion");
    inverse_of[i] = loc->first;
  }

  auto cancels = [&](std::size_t x, std::size_t y) {
    return last[x] == Word::inverse_letter(first[y]);
  };

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (j == inverse_of[i]) continue;
      if (!cancels(i, j)) continue;  // the product w_i w_j is already reduced
      for (std::size_t k = 0; k < m; ++k) {
        if (k == inverse_of[j] || i == inverse_of[k]) continue;
        if (cancels(j, k) && cancels(k, i)) return false;
      }
    }
  return true;
}

PiecePattern forbidden_patterns(const Slope& r, int n) {
  if (n < 2) throw std::domain_error("index n must be an integer >= 2");
  SDecomposition dec = s_decomposition(r);
  PiecePattern out;
  if (dec.s1.empty()) {
    // k = 1: 2n-2 copies of the single run value m.
    out.patterns.push_back(SSeq(static_cast<std::size_t>(2 * n - 2), dec.s2.front()));
    return out;
  }
  SSeq s12 = dec.s1;
  s12.insert(s12.end(), dec.s2.begin(), dec.s2.end());
  SSeq s21 = dec.s2;
  s21.insert(s21.end(), dec.s1.begin(), dec.s1.end());
  for (const SSeq& unit : {s12, s21}) {
    SSeq pattern;
    for (int i = 0; i < 2 * n - 1; ++i)
      pattern.insert(pattern.end(), unit.begin(), unit.end());
    out.patterns.push_back(std::move(pattern));
  }
  return out;
}

bool cyclic_contains_contiguous(const CyclicSSeq& haystack, const SSeq& needle) {
  if (needle.empty()) throw std::domain_error("needle must be nonempty");
  const SSeq& h = haystack.entries();
  if (needle.size() > h.size()) return false;
  for (std::size_t start = 0; start < h.size(); ++start) {
    bool match = true;
    for (std::size_t i = 0; i < needle.size(); ++i)
      if (h[(start + i) % h.size()] != needle[i]) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

long long count_cyclic_occurrences(const CyclicSSeq& haystack, const SSeq& needle) {
  if (needle.empty()) throw std::domain_error("needle must be nonempty");
  const SSeq& h = haystack.entries();
  if (needle.size() > h.size()) return 0;
  long long count = 0;
  for (std::size_t start = 0; start < h.size(); ++start) {
    bool match = true;
    for (std::size_t i = 0; i < needle.size(); ++i)
      if (h[(start + i) % h.size()] != needle[i]) {
        match = false;
        break;
      }
    if (match) ++count;
  }
  return count;
}

bool necessary_condition_trivial(const Word& v, const Slope& r, int n) {
  if (v.empty()) throw std::domain_error("trivially-null test requires a nonempty word");
  if (!is_cyclically_alternating(v))
    throw std::domain_error("trivially-null test requires a cyclically alternating word: '" +
                            v.letters() + "'");
  CyclicSSeq cs = [&] {
    try {
      return cyclic_s_sequence(CyclicWord(v));
    } catch (const std::invalid_argument& e) {
      throw std::domain_error(e.what());
    }
  }();
  PiecePattern forbidden = forbidden_patterns(r, n);
  for (const SSeq& pattern : forbidden.patterns)
    if (cyclic_contains_contiguous(cs, pattern)) return true;
  return false;
}

long long longest_common_cyclic_subword(const CyclicWord& v, const Slope& r, int n) {
  SymmetrizedSet R = symmetrize(r, n);
  const std::string& s = v.representative().letters();
  std::size_t best = 0;
  for (std::size_t start = 0; start < s.size(); ++start) {
    for (const std::string& w : R.elements()) {
      std::size_t limit = std::min(s.size(), w.size());
      std::size_t len = 0;
      while (len < limit && s[(start + len) % s.size()] == w[len]) ++len;
      best = std::max(best, len);
    }
  }
  return static_cast<long long>(best);
}

}  // namespace heckoid
