#include "heckoid/moebius.hpp"

#include <stdexcept>

namespace heckoid {

ExtendedMoebius::ExtendedMoebius(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Int det = determinant();
  if (det != 1 && det != -1)
    throw std::invalid_argument("slope action requires determinant ±1, got " + det.str());
  canonicalize();
}

void ExtendedMoebius::canonicalize() {
  for (const Int* e : {&a_, &b_, &c_, &d_}) {
    if (*e == 0) continue;
    if (*e < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    return;
  }
}

Slope ExtendedMoebius::operator()(const Slope& s) const {
  // s as a projective pair (x : y); inf is (1 : 0).
  const Int& x = s.num();
  const Int& y = s.den();
  Int num = a_ * x + b_ * y;
  Int den = c_ * x + d_ * y;
  if (num == 0 && den == 0)
    throw std::logic_error("projective action sent a point to (0 : 0)");
  return Slope(std::move(num), std::move(den));
}

ExtendedMoebius ExtendedMoebius::compose(const ExtendedMoebius& rhs) const {
  return ExtendedMoebius(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                         c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

ExtendedMoebius ExtendedMoebius::inverse() const {
  // adj(M) inverts M projectively for det ±1.
  return ExtendedMoebius(d_, -b_, -c_, a_);
}

std::string ExtendedMoebius::str() const {
  return "(" + a_.str() + " " + b_.str() + "; " + c_.str() + " " + d_.str() + ")";
}

ExtendedMoebius reflect_at(const Int& k) {
  return ExtendedMoebius(-1, 2 * k, 0, 1);
}

Slope apply(const ExtendedMoebius& g, const Slope& s) { return g(s); }

std::string witness_str(const GeneratorWord& w) {
  std::string out;
  for (const GeneratorStep& step : w) {
    if (!out.empty()) out += " ";
    out += step.kind == GeneratorStep::Kind::ReflectAt ? "R(" : "P(";
    out += step.value.str();
    out += ")";
  }
  return out;
}

}  // namespace heckoid
