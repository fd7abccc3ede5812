#pragma once
// ============================================================================
// rational.hpp
//
// Exact rational arithmetic for satisfaction values, thresholds and weights.
// Everything the checker computes lives in [0,1], but intermediate thresholds
// are produced by repeated division by discount factors and their numerators
// and denominators grow quickly; floating point would drift and break the
// exact comparisons the transition tables depend on.  Values are therefore
// arbitrary-precision fractions, kept canonical (reduced, positive
// denominator) at all times.  GMP's mpq does the heavy lifting.
// ============================================================================

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dltl {

class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design, lets 0/1 literals flow
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value) : value_(value) { canonicalize(); }

  // Accepts "a" or "a/b" with optional leading '-'; b must be nonzero.
  static std::optional<Rational> parse(std::string_view text);

  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool in_unit_interval() const { return value_ >= 0 && value_ <= 1; }

  // value_^exponent; exact, exponent >= 0.
  Rational pow(std::uint64_t exponent) const;

  // Canonical "a/b", or just "a" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  std::size_t hash() const;

  const mpq_class& raw() const { return value_; }

 private:
  void canonicalize() { value_.canonicalize(); }

  mpq_class value_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace dltl
