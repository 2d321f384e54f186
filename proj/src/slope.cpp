#include "heckoid/slope.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace heckoid {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

Int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  if (text.empty())
    throw std::invalid_argument("empty " + std::string(what));
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size())
    throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                std::string(text) + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                  std::string(text) + "'");
  return Int(std::string(text));
}

}  // namespace

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && r < 0) --q;
  return q;
}

Slope::Slope(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) throw std::invalid_argument("slope 0/0 is undefined");
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Slope Slope::from_string(std::string_view text) {
  text = trim(text);
  if (text == "inf") return infinity();
  if (!text.empty() && text.front() == '[')
    return cf_value(ContinuedFraction::from_string(text));
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return Slope(parse_int(text, "slope"), 1);
  return Slope(parse_int(text.substr(0, slash), "slope numerator"),
               parse_int(text.substr(slash + 1), "slope denominator"));
}

Int Slope::floor() const {
  if (is_infinity()) throw std::domain_error("floor of the slope inf");
  return floor_div(num_, den_);
}

Int Slope::ceil_abs() const {
  if (is_infinity()) throw std::domain_error("ceil_abs of the slope inf");
  Int a = abs(num_);
  return floor_div(a + den_ - 1, den_);
}

Slope Slope::operator-() const {
  if (is_infinity()) return *this;
  Slope out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Slope Slope::operator+(const Int& t) const {
  if (is_infinity()) return *this;
  Slope out;
  out.num_ = num_ + t * den_;
  out.den_ = den_;
  return out;
}

std::string Slope::str() const {
  if (is_infinity()) return "inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ContinuedFraction::ContinuedFraction(std::vector<Int> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw std::invalid_argument("continued fraction must be nonempty");
  for (const Int& m : coefficients_)
    if (m < 1)
      throw std::invalid_argument("continued fraction coefficients must be >= 1");
  if (coefficients_.size() > 1 && coefficients_.back() < 2)
    throw std::invalid_argument(
        "continued fraction not in normal form: last coefficient must be >= 2 "
        "unless the expansion is [1]");
}

ContinuedFraction ContinuedFraction::from_string(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("malformed continued fraction: '" +
                                std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    coeffs.push_back(parse_int(item, "continued fraction coefficient"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ContinuedFraction(std::move(coeffs));
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ",";
    out += coefficients_[i].str();
  }
  out += "]";
  return out;
}

ContinuedFraction cf_from_slope(const Slope& s) {
  if (s.is_infinity() || s <= Slope(0, 1) || s > Slope(1, 1))
    throw std::domain_error("continued fraction expansion requires a slope in (0, 1], got " +
                            s.str());
  // Euclidean expansion of p/q; the final quotient is >= 2 automatically,
  // except for s = 1 which expands as [1].
  Int q = s.num();
  Int p = s.den();
  std::vector<Int> coeffs;
  for (;;) {
    Int m = p / q;
    Int rem = p - m * q;
    coeffs.push_back(m);
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  return ContinuedFraction(std::move(coeffs));
}

Slope cf_value(const ContinuedFraction& cf) {
  const auto& m = cf.coefficients();
  // Evaluate the tower back to front: v = 1/(m_i + v').
  Int num = 1;
  Int den = m.back();
  for (std::size_t i = m.size() - 1; i-- > 0;) {
    Int next_den = m[i] * den + num;
    num = den;
    den = next_den;
  }
  return Slope(num, den);
}

UnitNormalization normalize_into_unit(const Slope& s) {
  if (s.is_infinity()) return {s, 0, +1};
  Int m = floor_div(s.num(), 2 * s.den());
  Slope t(s.num() - 2 * m * s.den(), s.den());  // t = s - 2m in [0, 2)
  if (t <= Slope(1, 1)) return {t, -m, +1};
  return {Slope(2 * t.den() - t.num(), t.den()), m + 1, -1};
}

std::vector<Slope> reduced_slopes_in_unit(const Int& max_denominator,
                                          bool include_zero, bool include_one) {
  std::vector<Slope> out;
  if (include_zero) out.emplace_back(0, 1);
  if (include_one && max_denominator >= 1) out.emplace_back(1, 1);
  for (Int p = 2; p <= max_denominator; ++p)
    for (Int q = 1; q < p; ++q)
      if (gcd(q, p) == 1) out.emplace_back(q, p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace heckoid
