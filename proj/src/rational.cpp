#include "dltl/rational.hpp"

#include <cctype>

#include "dltl/errors.hpp"

namespace dltl {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw ParseError("rational with zero denominator");
  canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw ModelError("division by zero rational");
  return Rational(mpq_class(value_ / o.value_));
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    return pos > start;
  };
  std::string num;
  std::string den;
  if (!digits(num)) return std::nullopt;
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    if (!digits(den) || pos != text.size()) return std::nullopt;
    if (mpz_class(den) == 0) return std::nullopt;
  } else {
    den = "1";
  }
  mpq_class value{mpz_class(num), mpz_class(den)};
  if (negative) value = -value;
  return Rational(value);
}

Rational Rational::pow(std::uint64_t exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

std::size_t Rational::hash() const {
  // Fold the limbs of the canonical numerator and denominator.
  auto fold = [](std::size_t seed, const mpz_class& z) {
    std::size_t h = seed ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ull);
    std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  };
  return fold(fold(0x51ed2701u, value_.get_num()), value_.get_den());
}

}  // namespace dltl
