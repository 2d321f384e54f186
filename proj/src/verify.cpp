#include "heckoid/verify.hpp"

#include <algorithm>
#include <optional>

#include "heckoid/cancellation.hpp"
#include "heckoid/parallel.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

namespace {

bool has_adjacent_pair(const SSeq& s, long long x, long long y) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == x && s[i + 1] == y) return true;
  return false;
}

// Parses (block^{x1}, sep, block^{x2}, sep, ..., block^{xj}) and returns the
// run lengths x_i; nullopt when the sequence does not have that shape.
std::optional<SSeq> parse_joined_blocks(const SSeq& s, long long block, long long sep) {
  SSeq lengths;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == block) ++j;
    if (j == i) return std::nullopt;
    lengths.push_back(static_cast<long long>(j - i));
    i = j;
    if (i == s.size()) break;
    if (s[i] != sep) return std::nullopt;
    ++i;
    if (i == s.size()) return std::nullopt;  // trailing separator
  }
  if (lengths.empty()) return std::nullopt;
  return lengths;
}

// Parses (sep, block^{x1}, sep, block^{x2}, ..., block^{xj}, sep): the dual
// bracketed shape, separators outside.
std::optional<SSeq> parse_bracketed_blocks(const SSeq& s, long long block, long long sep) {
  if (s.empty() || s.front() != sep) return std::nullopt;
  SSeq lengths;
  std::size_t i = 1;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == block) ++j;
    if (j == i) return std::nullopt;
    lengths.push_back(static_cast<long long>(j - i));
    i = j;
    if (i == s.size() || s[i] != sep) return std::nullopt;
    ++i;
  }
  if (lengths.empty()) return std::nullopt;
  return lengths;
}

std::string tag(const Slope& r, const std::string& what) {
  return "r = " + r.str() + ": " + what;
}

void check_one_slope(const Slope& r, WordLemmaReport& report) {
  ContinuedFraction cf = cf_from_slope(r);
  std::size_t k = cf.size();
  long long m = cf[0].convert_to<long long>();
  long long p = r.den().convert_to<long long>();
  SSeq s = s_sequence_of_slope(r);

  // --- run-length shape of S(r) ---
  if (sseq_sum(s) != 2 * p)
    report.shape_failures.push_back(tag(r, "S(r) does not sum to 2p"));
  if (k == 1) {
    if (s != SSeq{m, m})
      report.shape_failures.push_back(tag(r, "expected S(r) = (m, m), got " + sseq_str(s)));
  } else {
    long long m2 = cf[1].convert_to<long long>();
    bool ok = s.front() == m + 1 && s.back() == m &&
              std::all_of(s.begin(), s.end(),
                          [&](long long v) { return v == m || v == m + 1; });
    if (m2 == 1 && has_adjacent_pair(s, m, m)) ok = false;
    if (m2 >= 2 && has_adjacent_pair(s, m + 1, m + 1)) ok = false;
    if (ok) {
      try {
        t_sequence(r);  // template parse must succeed
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok)
      report.shape_failures.push_back(tag(r, "S(r) shape violation: " + sseq_str(s)));
  }

  SDecomposition dec;
  try {
    dec = s_decomposition(r);  // throws when (S1,S2,S1,S2) fails to tile S(r)
  } catch (const std::exception& e) {
    report.decomposition_failures.push_back(tag(r, e.what()));
    return;
  }

  // --- decomposition structure ---
  if (!sseq_symmetric(dec.s1) || !sseq_symmetric(dec.s2))
    report.decomposition_failures.push_back(tag(r, "S1 or S2 not symmetric"));
  if ((k == 1) != dec.s1.empty())
    report.decomposition_failures.push_back(tag(r, "S1 emptiness does not match k"));
  if (!dec.s1.empty() && (dec.s1.front() != m + 1 || dec.s1.back() != m + 1))
    report.decomposition_failures.push_back(tag(r, "S1 does not begin and end with m+1"));
  if (dec.s2.empty() || dec.s2.front() != m || dec.s2.back() != m)
    report.decomposition_failures.push_back(tag(r, "S2 does not begin and end with m"));
  CyclicSSeq cs = cyclic_s_sequence_of_slope(r);
  if (!dec.s1.empty() && count_cyclic_occurrences(cs, dec.s1) != 2)
    report.decomposition_failures.push_back(tag(r, "S1 does not occur exactly twice in CS(r)"));
  if (count_cyclic_occurrences(cs, dec.s2) != 2)
    report.decomposition_failures.push_back(tag(r, "S2 does not occur exactly twice in CS(r)"));

  if (k >= 2) {
    long long m2 = cf[1].convert_to<long long>();
    bool is_m_2_form = (k == 2 && m2 == 2);  // r = [m, 2]
    if (m2 == 1 && !has_adjacent_pair(dec.s1, m + 1, m + 1))
      report.decomposition_failures.push_back(tag(r, "(m+1, m+1) missing from S1"));
    if (m2 >= 2 && !is_m_2_form && !has_adjacent_pair(dec.s2, m, m))
      report.decomposition_failures.push_back(tag(r, "(m, m) missing from S2"));
  }

  // --- induction identities (k >= 2 only) ---
  if (k < 2) return;
  long long m2 = cf[1].convert_to<long long>();
  Slope tilde = reduced_fraction_tilde(r);
  SSeq t = t_sequence(r);
  if (!(cyclic_s_sequence_of_slope(tilde) == CyclicSSeq(t))) {
    report.induction_failures.push_back(tag(r, "CS(r~) != CT(r)"));
    return;
  }

  if (m2 >= 2 && k == 2) {
    if (dec.s1 != SSeq{m + 1} || dec.s2 != SSeq(static_cast<std::size_t>(m2 - 1), m))
      report.induction_failures.push_back(tag(r, "closed form for k = 2 violated"));
  } else if (m2 == 1 && k == 3) {
    long long m3 = cf[2].convert_to<long long>();
    if (dec.s1 != SSeq(static_cast<std::size_t>(m3), m + 1) || dec.s2 != SSeq{m})
      report.induction_failures.push_back(tag(r, "closed form for k = 3, m2 = 1 violated"));
  } else {
    SDecomposition dec_tilde = s_decomposition(tilde);
    if (m2 == 1) {
      auto x = parse_joined_blocks(dec.s1, m + 1, m);
      auto y = parse_bracketed_blocks(dec.s2, m + 1, m);
      if (!x || *x != dec_tilde.s1 || !y || *y != dec_tilde.s2)
        report.induction_failures.push_back(
            tag(r, "S1/S2 do not refine the decomposition of r~ (m2 = 1 case)"));
    } else {
      auto x = parse_bracketed_blocks(dec.s1, m, m + 1);
      auto y = parse_joined_blocks(dec.s2, m, m + 1);
      if (!x || *x != dec_tilde.s2 || !y || *y != dec_tilde.s1)
        report.induction_failures.push_back(
            tag(r, "S1/S2 do not refine the decomposition of r~ (m2 >= 2 case)"));
    }
  }
}

}  // namespace

WordLemmaReport verify_word_lemmas(long long max_p) {
  WordLemmaReport report;
  for (long long p = 2; p <= max_p; ++p)
    for (long long q = 1; q < p; ++q) {
      if (gcd(Int(q), Int(p)) != 1) continue;
      check_one_slope(Slope(q, p), report);
      ++report.checked;
    }
  return report;
}

SmallCancellationReport verify_small_cancellation(long long max_p,
                                                  const std::vector<int>& indices,
                                                  int jobs) {
  std::vector<std::pair<Slope, int>> cases;
  for (long long p = 2; p <= max_p; ++p)
    for (long long q = 1; q < p; ++q) {
      if (gcd(Int(q), Int(p)) != 1) continue;
      for (int n : indices) cases.emplace_back(Slope(q, p), n);
    }

  std::vector<std::string> issues(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    const auto& [r, n] = cases[i];
    SymmetrizedSet R = symmetrize(r, n);
    std::size_t expected = 4 * static_cast<std::size_t>(r.den().convert_to<long long>());
    if (R.size() != expected) {
      issues[i] = "r = " + r.str() + ", n = " + std::to_string(n) +
                  ": symmetrized set has " + std::to_string(R.size()) + " elements, expected " +
                  std::to_string(expected);
      return;
    }
    long long worst = -1;
    for (const std::string& w : R.elements()) {
      long long count;
      try {
        count = min_piece_count(Word(w), R);
      } catch (const std::exception&) {
        issues[i] = "r = " + r.str() + ", n = " + std::to_string(n) +
                    ": relator rotation admits no piece decomposition";
        return;
      }
      worst = worst < 0 ? count : std::min(worst, count);
    }
    if (worst < 4 * n) {
      issues[i] = "r = " + r.str() + ", n = " + std::to_string(n) +
                  ": C(4n) fails, minimum piece count " + std::to_string(worst);
      return;
    }
    if (!verify_T4(R))
      issues[i] = "r = " + r.str() + ", n = " + std::to_string(n) + ": T(4) fails";
  });

  SmallCancellationReport report;
  report.checked = static_cast<long long>(cases.size());
  for (const std::string& issue : issues)
    if (!issue.empty()) report.failures.push_back(issue);
  return report;
}

}  // namespace heckoid
