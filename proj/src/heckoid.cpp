#include "heckoid/heckoid.hpp"

#include <stdexcept>

#include "heckoid/parallel.hpp"

namespace heckoid {

namespace {

Slope normalize_r(const Slope& r, Int& translation) {
  if (r.is_infinity())
    throw std::domain_error("slope r must be rational, got inf");
  if (r.is_integral())
    throw std::domain_error("integral slope r = " + r.str() +
                            " is not supported (the group degenerates to the integral case)");
  translation = r.floor();
  return r + (-translation);
}

}  // namespace

HeckoidContext::HeckoidContext(const Slope& r, int n)
    : input_r_(r),
      translation_(0),
      farey_(normalize_r(r, translation_), n),
      s_parts_(s_decomposition(farey_.r())),
      patterns_(forbidden_patterns(farey_.r(), n)) {}

HeckoidContext make_context(const Slope& r, int n) { return HeckoidContext(r, n); }

std::string decision_method_str(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::FareyReduction: return "FareyReduction";
    case DecisionMethod::PatternCertificate: return "PatternCertificate";
    case DecisionMethod::Both: return "Both";
  }
  return "?";
}

namespace {

// The forbidden-pattern certificate for the loop of slope s, when the slope
// word is defined: the unit representative must avoid 0 and 1, where the
// word degenerates.
std::optional<bool> certificate_for(const HeckoidContext& ctx, const Slope& s) {
  Slope unit = normalize_into_unit(s).value;
  if (unit.is_infinity() || unit.is_zero() || unit == Slope(1, 1)) return std::nullopt;
  CyclicSSeq cs = cyclic_s_sequence_of_slope(unit);
  for (const SSeq& pattern : ctx.patterns().patterns)
    if (cyclic_contains_contiguous(cs, pattern)) return true;
  return false;
}

}  // namespace

DecisionReport is_null_homotopic(const HeckoidContext& ctx, const Slope& s) {
  Reduction red = ctx.farey().reduce(s);
  DecisionReport out;
  out.verdict = red.canonical.is_infinity();
  out.canonical = red.canonical;
  out.witness = std::move(red.witness);
  out.certificate = certificate_for(ctx, s);
  out.method = out.certificate ? DecisionMethod::Both : DecisionMethod::FareyReduction;
  out.consistent = !(out.verdict && out.certificate && !*out.certificate);
  return out;
}

Slope canonical_class(const HeckoidContext& ctx, const Slope& s) {
  return ctx.farey().reduce(s).canonical;
}

EpimorphismReport epimorphism_exists(const HeckoidContext& ctx, const Slope& s) {
  if (s.is_infinity())
    throw std::domain_error("epimorphism source requires a rational slope, got inf");
  Reduction first = ctx.farey().reduce(s);
  Reduction second = ctx.farey().reduce(s + Int(1));
  EpimorphismReport out;
  out.canonical_s = first.canonical;
  out.canonical_s_plus_one = second.canonical;
  if (first.canonical.is_infinity()) {
    out.verdict = true;
    out.disjunct = 1;
    out.witness = std::move(first.witness);
  } else if (second.canonical.is_infinity()) {
    out.verdict = true;
    out.disjunct = 2;
    out.witness = std::move(second.witness);
  }
  return out;
}

std::vector<Slope> enumerate_epimorphism_slopes(const HeckoidContext& ctx,
                                                const Int& max_denominator, int jobs) {
  if (max_denominator < 1)
    throw std::domain_error("max_denominator must be >= 1");
  std::vector<Slope> candidates =
      reduced_slopes_in_unit(max_denominator, /*include_zero=*/true, /*include_one=*/false);
  std::vector<char> admits(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    admits[i] = epimorphism_exists(ctx, candidates[i]).verdict ? 1 : 0;
  });
  std::vector<Slope> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (admits[i]) out.push_back(candidates[i]);
  return out;
}

Prop51Report verify_prop51(const HeckoidContext& ctx, const Int& max_denominator,
                           int jobs) {
  if (max_denominator < 2)
    throw std::domain_error("max_denominator must be >= 2");
  std::vector<Slope> candidates =
      reduced_slopes_in_unit(max_denominator, /*include_zero=*/false, /*include_one=*/true);
  std::vector<Slope> in_intervals;
  for (const Slope& s : candidates) {
    SlopeClass c = ctx.farey().classify(s);
    if (c == SlopeClass::InI1 || c == SlopeClass::InI2) in_intervals.push_back(s);
  }

  Prop51Report report;
  report.scanned = static_cast<long long>(in_intervals.size());
  std::vector<char> violates(in_intervals.size(), 0);
  parallel_for(in_intervals.size(), jobs, [&](std::size_t i) {
    CyclicSSeq cs = cyclic_s_sequence_of_slope(in_intervals[i]);
    for (const SSeq& pattern : ctx.patterns().patterns)
      if (cyclic_contains_contiguous(cs, pattern)) {
        violates[i] = 1;
        return;
      }
  });
  for (std::size_t i = 0; i < in_intervals.size(); ++i)
    if (violates[i]) report.violations.push_back(in_intervals[i]);
  return report;
}

CrossCheckReport cross_check(const HeckoidContext& ctx, const Int& max_denominator,
                             int bfs_depth, const Int& bfs_max_denominator, int jobs) {
  CrossCheckReport report;

  // (i) Orbit members must reduce to inf and carry the pattern.
  std::set<Slope> orbit =
      orbit_bfs_from(ctx.farey(), Slope::infinity(), bfs_depth, bfs_max_denominator);
  std::vector<Slope> orbit_list(orbit.begin(), orbit.end());
  std::vector<std::string> orbit_issue(orbit_list.size());
  parallel_for(orbit_list.size(), jobs, [&](std::size_t i) {
    const Slope& s = orbit_list[i];
    DecisionReport rep = is_null_homotopic(ctx, s);
    if (!rep.verdict) {
      orbit_issue[i] = "orbit slope " + s.str() + " does not reduce to inf (canonical " +
                       rep.canonical.str() + ")";
      return;
    }
    if (rep.certificate && !*rep.certificate)
      orbit_issue[i] = "orbit slope " + s.str() + " lacks the forbidden pattern";
  });
  report.orbit_checked = static_cast<long long>(orbit_list.size());
  for (const std::string& issue : orbit_issue)
    if (!issue.empty()) report.inconsistencies.push_back(issue);

  // (ii) Interval slopes and r itself must not reduce to inf; away from 0
  // the interval slopes must be pattern-free.
  std::vector<Slope> candidates =
      reduced_slopes_in_unit(max_denominator, /*include_zero=*/true, /*include_one=*/true);
  std::vector<Slope> to_check;
  for (const Slope& s : candidates) {
    SlopeClass c = ctx.farey().classify(s);
    if (c == SlopeClass::InI1 || c == SlopeClass::InI2 || c == SlopeClass::IsR)
      to_check.push_back(s);
  }
  std::vector<std::string> interval_issue(to_check.size());
  parallel_for(to_check.size(), jobs, [&](std::size_t i) {
    const Slope& s = to_check[i];
    DecisionReport rep = is_null_homotopic(ctx, s);
    if (rep.verdict) {
      interval_issue[i] = "interval slope " + s.str() + " reduces to inf";
      return;
    }
    bool in_interval = ctx.farey().classify(s) != SlopeClass::IsR;
    if (in_interval && !s.is_zero() && rep.certificate && *rep.certificate)
      interval_issue[i] = "interval slope " + s.str() + " contains the forbidden pattern";
  });
  report.interval_checked = static_cast<long long>(to_check.size());
  for (const std::string& issue : interval_issue)
    if (!issue.empty()) report.inconsistencies.push_back(issue);

  return report;
}

}  // namespace heckoid
