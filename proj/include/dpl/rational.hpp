#ifndef DPL_RATIONAL_HPP
#define DPL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dpl {

/// Exact rational with unbounded numerator and denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading '-'); rejects zero denominators,
/// decimals and whitespace.
Rational parse_rational(std::string_view text);

/// Canonical fraction string: "3/4", "-1/2", "5".
std::string to_string(const Rational& value);

std::int64_t floor_int(const Rational& value);
std::int64_t ceil_int(const Rational& value);

/// value - floor(value), in [0,1).
Rational frac(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// A point of the circle R/Z, stored by its representative in [0,1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& any) : value_(frac(any)) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

}  // namespace dpl

#endif  // DPL_RATIONAL_HPP
