#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace heckoid {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Floor division for exact integers, b > 0.
Int floor_div(const Int& a, const Int& b);

/*
 * A slope is a point of Q ∪ {inf}, stored as a reduced fraction with
 * non-negative denominator. The point at infinity is the unique slope with
 * denominator 0 and is canonically (1, 0). All arithmetic is exact; there is
 * deliberately no floating-point conversion.
 */
class Slope {
 public:
  Slope() : num_(0), den_(1) {}
  Slope(Int num, Int den);

  static Slope infinity() { return Slope(1, 0); }

  // Accepts "q/p", a plain integer, "inf", or a continued fraction "[m1,m2,...]".
  static Slope from_string(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_infinity() const { return den_ == 0; }
  bool is_integral() const { return den_ == 1; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }

  // Greatest integer <= value; finite slopes only.
  Int floor() const;
  // Smallest integer >= |value|; finite slopes only.
  Int ceil_abs() const;

  Slope operator-() const;
  // Translation by an integer; infinity is fixed.
  Slope operator+(const Int& t) const;

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;

  // Total order for containers: finite slopes by rational value, infinity
  // after every finite slope. Only the finite-vs-finite case is meaningful as
  // an order on Q.
  friend bool operator<(const Slope& x, const Slope& y) {
    if (x.is_infinity()) return false;
    if (y.is_infinity()) return true;
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Slope& x, const Slope& y) { return y < x; }
  friend bool operator<=(const Slope& x, const Slope& y) { return !(y < x); }
  friend bool operator>=(const Slope& x, const Slope& y) { return !(x < y); }

 private:
  Int num_;
  Int den_;
};

/*
 * Continued fraction [m1,...,mk] with value 1/(m1 + 1/(m2 + ... + 1/mk)).
 * Normal form: every coefficient is >= 1 and mk >= 2 unless k = 1, so every
 * rational in (0, 1] has exactly one expansion ([1] being the expansion of 1).
 */
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<Int> coefficients);

  static ContinuedFraction from_string(std::string_view text);

  const std::vector<Int>& coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  const Int& operator[](std::size_t i) const { return coefficients_[i]; }

  std::string str() const;  // "[m1,m2,...]"

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Int> coefficients_;
};

// Expansion of a finite slope in (0, 1]; the result is the unique normal form.
ContinuedFraction cf_from_slope(const Slope& s);

// Exact value of a continued fraction; inverse of cf_from_slope.
Slope cf_value(const ContinuedFraction& cf);

// Canonical representative of s under the maps x -> ±x + 2k, chosen in
// [0, 1] ∪ {inf}: value = sign*s + 2*translation. Slopes already in [0, 1]
// (and inf) come back unchanged; when both signs would land in [0, 1] the
// positive one is preferred.
struct UnitNormalization {
  Slope value;
  Int translation;
  int sign;  // +1 or -1
};
UnitNormalization normalize_into_unit(const Slope& s);

// All reduced fractions q/p with 0 <= q/p <= 1 and p <= max_denominator,
// ascending; the endpoints 0 and 1 are optional.
std::vector<Slope> reduced_slopes_in_unit(const Int& max_denominator,
                                          bool include_zero, bool include_one);

}  // namespace heckoid
