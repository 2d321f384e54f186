#pragma once

#include <string>
#include <vector>

#include "heckoid/slope.hpp"

namespace heckoid {

/*
 * Integer matrix (a b; c d) of determinant ±1 acting on slopes by
 * s -> (a s + b)/(c s + d), with inf handled projectively. Matrices are kept
 * in a canonical projective form (first nonzero entry positive), so equality
 * of objects is equality of the induced maps.
 */
class ExtendedMoebius {
 public:
  ExtendedMoebius() : a_(1), b_(0), c_(0), d_(1) {}
  ExtendedMoebius(Int a, Int b, Int c, Int d);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  Int determinant() const { return a_ * d_ - b_ * c_; }

  Slope operator()(const Slope& s) const;

  // Composition acting left to right on points: (f.compose(g))(s) = f(g(s)).
  ExtendedMoebius compose(const ExtendedMoebius& rhs) const;
  ExtendedMoebius inverse() const;

  std::string str() const;

  friend bool operator==(const ExtendedMoebius&, const ExtendedMoebius&) = default;

 private:
  Int a_, b_, c_, d_;
  void canonicalize();
};

// Reflection in the Farey edge from inf to the integer k: s -> 2k - s.
ExtendedMoebius reflect_at(const Int& k);

// Fractional-linear action; free-function spelling of g(s).
Slope apply(const ExtendedMoebius& g, const Slope& s);

/*
 * Witness alphabet for orbit membership: a reflection s -> 2k - s, or a power
 * of the distinguished parabolic of the current (r, n) context. A witness is
 * applied left to right.
 */
struct GeneratorStep {
  enum class Kind { ReflectAt, ParabolicPower };
  Kind kind;
  Int value;

  static GeneratorStep reflect(Int k) { return {Kind::ReflectAt, std::move(k)}; }
  static GeneratorStep parabolic(Int e) { return {Kind::ParabolicPower, std::move(e)}; }

  friend bool operator==(const GeneratorStep&, const GeneratorStep&) = default;
};

using GeneratorWord = std::vector<GeneratorStep>;

// "R(0) P(-1) R(1)"; the empty witness serializes as the empty string.
std::string witness_str(const GeneratorWord& w);

}  // namespace heckoid
