#include "heckoid/farey.hpp"

#include <stdexcept>
#include <utility>

namespace heckoid {

namespace {

void require_context_domain(const Slope& r, int n) {
  if (n < 2) throw std::domain_error("index n must be an integer >= 2");
  if (r.is_infinity() || r.is_integral())
    throw std::domain_error("slope r must be a non-integral rational, got " + r.str());
  if (r < Slope(0, 1) || r > Slope(1, 1))
    throw std::domain_error("slope r must be normalized into (0, 1), got " + r.str());
}

// Any integral matrix of determinant -1 sending q/p to inf.
ExtendedMoebius conjugate_to_infinity(const Slope& r) {
  // Extended Euclid: A q + B p = 1, then (A B; p -q) works.
  Int q = r.num(), p = r.den();
  Int old_r = q, rr = p;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (rr != 0) {
    Int quot = old_r / rr;
    Int tmp = old_r - quot * rr; old_r = rr; rr = tmp;
    tmp = old_s - quot * s; old_s = s; s = tmp;
    tmp = old_t - quot * t; old_t = t; t = tmp;
  }
  // old_r = gcd = 1 = old_s * q + old_t * p
  return ExtendedMoebius(old_s, old_t, p, -q);
}

}  // namespace

FundamentalIntervals interval_endpoints(const Slope& r, int n) {
  require_context_domain(r, n);
  ContinuedFraction cf = cf_from_slope(r);
  const auto& m = cf.coefficients();
  std::size_t k = m.size();

  std::vector<Int> excluded_coeffs = m;
  excluded_coeffs.push_back(Int(2 * n - 2));
  Slope excluded = cf_value(ContinuedFraction(std::move(excluded_coeffs)));

  std::vector<Int> included_coeffs = m;
  included_coeffs.back() -= 1;  // mk >= 2 whenever r is non-integral
  included_coeffs.push_back(2);
  Slope included = cf_value(ContinuedFraction(std::move(included_coeffs)));

  FundamentalIntervals out;
  if (k % 2 == 1) {
    out.r1 = excluded;
    out.r2 = included;
    out.i1_closed_at_r1 = false;
    out.i2_closed_at_r2 = true;
  } else {
    out.r1 = included;
    out.r2 = excluded;
    out.i1_closed_at_r1 = true;
    out.i2_closed_at_r2 = false;
  }
  out.degenerate = (r.num() == 1 || r.den() - r.num() == 1);

  if (!(Slope(0, 1) < out.r1 && out.r1 < r && r < out.r2 && out.r2 < Slope(1, 1)))
    throw std::logic_error("interval endpoints out of order for r = " + r.str());
  return out;
}

ExtendedMoebius parabolic_generator(const Slope& r, int n) {
  require_context_domain(r, n);
  FundamentalIntervals fi = interval_endpoints(r, n);
  const Int& q = r.num();
  const Int& p = r.den();
  for (Int t : {Int(2 * n), Int(-2 * n)}) {
    ExtendedMoebius g(1 + t * q * p, -t * q * q, t * p * p, 1 - t * q * p);
    if (g(fi.r1) == fi.r2) return g;
  }
  throw std::logic_error("no parabolic orientation pairs the interval endpoints of " +
                         r.str());
}

std::string slope_class_str(SlopeClass c) {
  switch (c) {
    case SlopeClass::InI1: return "InI1";
    case SlopeClass::InI2: return "InI2";
    case SlopeClass::IsR: return "IsR";
    case SlopeClass::IsInfinity: return "IsInfinity";
    case SlopeClass::Gap: return "Gap";
    case SlopeClass::OutsideUnit: return "OutsideUnit";
  }
  return "?";
}

namespace {

SlopeClass classify_with(const FundamentalIntervals& fi, const Slope& s, const Slope& r) {
  if (s.is_infinity()) return SlopeClass::IsInfinity;
  if (s == r) return SlopeClass::IsR;
  if (s < Slope(0, 1) || s > Slope(1, 1)) return SlopeClass::OutsideUnit;
  if (s < fi.r1 || (s == fi.r1 && fi.i1_closed_at_r1)) return SlopeClass::InI1;
  if (s > fi.r2 || (s == fi.r2 && fi.i2_closed_at_r2)) return SlopeClass::InI2;
  return SlopeClass::Gap;
}

}  // namespace

SlopeClass classify_slope(const Slope& s, const Slope& r, int n) {
  return classify_with(interval_endpoints(r, n), s, r);
}

FareyContext::FareyContext(Slope r, int n)
    : r_((require_context_domain(r, n), std::move(r))),
      n_(n),
      cf_(cf_from_slope(r_)),
      intervals_(interval_endpoints(r_, n_)),
      parabolic_(parabolic_generator(r_, n_)),
      parabolic_t_(0),
      conj_(conjugate_to_infinity(r_)),
      sigma_(0) {
  // Recover the oriented parameter t from the matrix: the c entry is t p^2 up
  // to the canonical sign of the matrix, so compare against both candidates.
  {
    const Int& q = r_.num();
    const Int& p = r_.den();
    ExtendedMoebius plus(1 + Int(2 * n_) * q * p, -Int(2 * n_) * q * q,
                         Int(2 * n_) * p * p, 1 - Int(2 * n_) * q * p);
    parabolic_t_ = (parabolic_ == plus) ? Int(2 * n_) : Int(-2 * n_);
  }

  Slope included = intervals_.i1_closed_at_r1 ? intervals_.r1 : intervals_.r2;
  Slope excluded = intervals_.i1_closed_at_r1 ? intervals_.r2 : intervals_.r1;
  strip_included_ = conj_(included);
  strip_excluded_ = conj_(excluded);
  {
    Slope gap(strip_included_.num() * strip_excluded_.den() -
                  strip_excluded_.num() * strip_included_.den(),
              strip_included_.den() * strip_excluded_.den());
    if (gap.den() != 1 || abs(gap.num()) != 2 * n_)
      throw std::logic_error("paired endpoints are not 2n apart in conjugated coordinates");
  }

  // In conjugated coordinates the parabolic is x -> x + sigma * 2n.
  ExtendedMoebius translated = conj_.compose(parabolic_).compose(conj_.inverse());
  if (translated.c() != 0 || translated.a() != translated.d())
    throw std::logic_error("conjugated parabolic is not a translation");
  Int shift = translated.b();  // diagonal is canonically +1, so b is the shift
  if (abs(shift) != 2 * n_)
    throw std::logic_error("conjugated parabolic translates by " + shift.str() +
                           ", expected ±" + std::to_string(2 * n_));
  sigma_ = shift > 0 ? +1 : -1;
}

SlopeClass FareyContext::classify(const Slope& s) const {
  return classify_with(intervals_, s, r_);
}

Slope FareyContext::parabolic_power(const Slope& s, const Int& e) const {
  const Int& q = r_.num();
  const Int& p = r_.den();
  Int t = parabolic_t_ * e;
  ExtendedMoebius ge(1 + t * q * p, -t * q * q, t * p * p, 1 - t * q * p);
  return ge(s);
}

namespace {

Int reduction_iteration_cap(const Slope& s) {
  // Ten times the Stern-Brocot depth of the input (sum of the continued
  // fraction coefficients of its unit representative), plus slack for the
  // shallow cases. The loop never comes close on valid input.
  Int depth = 0;
  if (!s.is_infinity()) {
    Slope unit = normalize_into_unit(s).value;
    if (!unit.is_zero()) {
      ContinuedFraction cf = cf_from_slope(unit);
      for (const Int& m : cf.coefficients()) depth += m;
    }
  }
  return 10 * depth + 64;
}

}  // namespace

Reduction FareyContext::reduce(const Slope& s) const {
  GeneratorWord witness;
  Slope cur = s;
  Int cap = reduction_iteration_cap(s);
  Int iterations = 0;
  Int span(2 * n_);

  for (;;) {
    UnitNormalization un = normalize_into_unit(cur);
    if (un.sign == -1) {
      witness.push_back(GeneratorStep::reflect(un.translation));
    } else if (un.translation != 0) {
      witness.push_back(GeneratorStep::reflect(0));
      witness.push_back(GeneratorStep::reflect(un.translation));
    }
    cur = un.value;

    SlopeClass cls = classify(cur);
    if (cls != SlopeClass::Gap) return {cur, witness};

    // cur lies strictly between the interval endpoints (or on the excluded
    // one) and differs from r, so its conjugated image is finite and outside
    // the half-open fundamental strip anchored at the included endpoint.
    Slope y = conj_(cur);
    Slope offset(y.num() * strip_included_.den() - strip_included_.num() * y.den(),
                 y.den() * strip_included_.den());
    Int e_strip;
    if (strip_included_ < strip_excluded_) {
      // strip [included, included + 2n)
      e_strip = floor_div(offset.num(), offset.den() * span);
    } else {
      // strip (included - 2n, included]
      e_strip = -floor_div(-offset.num(), offset.den() * span);
    }
    if (e_strip == 0)
      throw std::logic_error("gap slope already inside the fundamental strip: s = " +
                             s.str() + ", r = " + r_.str());

    Int e_applied = -Int(sigma_) * e_strip;
    witness.push_back(GeneratorStep::parabolic(e_applied));
    cur = parabolic_power(cur, e_applied);

    if (++iterations > cap) {
      std::string trace = "reduction iteration cap exceeded: s = " + s.str() +
                          ", r = " + r_.str() + ", n = " + std::to_string(n_) +
                          ", witness so far = " + witness_str(witness);
      throw std::runtime_error(trace);
    }
  }
}

Slope FareyContext::apply_witness(const GeneratorWord& w, Slope s) const {
  for (const GeneratorStep& step : w) {
    if (step.kind == GeneratorStep::Kind::ReflectAt)
      s = reflect_at(step.value)(s);
    else
      s = parabolic_power(s, step.value);
  }
  return s;
}

Reduction reduce_slope(const Slope& s, const Slope& r, int n) {
  return FareyContext(r, n).reduce(s);
}

bool in_orbit_of_infinity(const Slope& s, const Slope& r, int n) {
  return FareyContext(r, n).in_orbit_of_infinity(s);
}

Slope apply_witness(const GeneratorWord& w, const Slope& s, const Slope& r, int n) {
  return FareyContext(r, n).apply_witness(w, s);
}

std::set<Slope> orbit_bfs_from(const FareyContext& ctx, const Slope& seed, int depth,
                               const Int& max_denominator) {
  // Intermediate states may overshoot the requested bound and come back
  // down, so the search itself runs with a looser bound (always loose enough
  // for the parabolic translates of inf) and only the output is filtered.
  Int expansion_bound =
      4 * max_denominator + 2 * Int(ctx.n()) * ctx.r().den() * ctx.r().den();

  Slope start = normalize_into_unit(seed).value;
  std::set<Slope> visited{start};
  std::vector<Slope> frontier{start};

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Slope> next;
    for (const Slope& s : frontier) {
      // Reflected/translated copies of s near the unit interval; anything
      // further out only yields parabolic images beyond the expansion
      // bound. Reflections themselves fix the normalized class.
      std::vector<Slope> preimages;
      if (s.is_infinity()) {
        preimages.push_back(s);
      } else {
        preimages = {s,          -s,           s + Int(2),
                     s + Int(-2), (-s) + Int(-2), (-s) + Int(2),
                     (-s) + Int(4)};
      }
      for (const Slope& y : preimages) {
        for (int e : {+1, -1}) {
          Slope image = normalize_into_unit(ctx.parabolic_power(y, Int(e))).value;
          if (!image.is_infinity() && image.den() > expansion_bound) continue;
          if (visited.insert(image).second) next.push_back(image);
        }
      }
    }
    frontier = std::move(next);
  }

  std::set<Slope> out;
  for (const Slope& s : visited)
    if (s.is_infinity() || s.den() <= max_denominator) out.insert(s);
  return out;
}

std::set<Slope> orbit_bfs_oracle(const Slope& r, int n, int depth,
                                 const Int& max_denominator) {
  if (depth < 0) throw std::domain_error("orbit search depth must be >= 0");
  FareyContext ctx(r, n);
  return orbit_bfs_from(ctx, Slope::infinity(), depth, max_denominator);
}

}  // namespace heckoid
