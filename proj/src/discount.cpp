#include "dltl/discount.hpp"

#include "dltl/errors.hpp"

namespace dltl {

DiscountFunction exponential(const Rational& factor) {
  if (!(factor > 0) || !(factor < 1)) {
    throw ModelError("exponential discount factor must lie strictly between 0 and 1, got " +
                     factor.str());
  }
  return DiscountFunction{DiscountFunction::Family::Exponential, factor, 0};
}

DiscountFunction reciprocal() {
  return DiscountFunction{DiscountFunction::Family::Reciprocal, Rational(0), 0};
}

DiscountFunction shift_discount(const DiscountFunction& f, std::uint32_t k) {
  if (k == 0) return f;
  DiscountFunction shifted = f;
  shifted.shift += k;
  return shifted;
}

Rational eval_discount(const DiscountFunction& f, std::uint64_t i) {
  const std::uint64_t step = i + f.shift;
  switch (f.family) {
    case DiscountFunction::Family::Exponential:
      return f.factor.pow(step);
    case DiscountFunction::Family::Reciprocal:
      return Rational(1) / Rational(static_cast<long>(step + 1));
  }
  throw ModelError("unknown discount family");
}

std::uint64_t index_below(const DiscountFunction& f, const Rational& t) {
  if (!(t > 0)) throw ModelError("index_below requires a positive bound, got " + t.str());
  switch (f.family) {
    case DiscountFunction::Family::Exponential: {
      // Scan; the iteration count is proportional to log(t)/log(factor).
      std::uint64_t i = 0;
      Rational value = eval_discount(f, 0);
      while (value >= t) {
        value = value * f.factor;
        ++i;
      }
      return i;
    }
    case DiscountFunction::Family::Reciprocal: {
      // 1/(i+shift+1) < t  iff  i+shift+1 > 1/t; the least such integer is
      // floor(1/t)+1, which stays correct when 1/t is itself an integer.
      mpz_class floor_inv;
      mpq_class inv(mpq_class(1) / t.raw());
      mpz_fdiv_q(floor_inv.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
      mpz_class least = floor_inv + 1;             // least admissible i+shift+1
      mpz_class start = mpz_class(f.shift) + 1;    // value of i+shift+1 at i=0
      if (least <= start) return 0;
      mpz_class diff = least - start;
      return mpz_get_ui(diff.get_mpz_t());
    }
  }
  throw ModelError("unknown discount family");
}

std::string discount_to_text(const DiscountFunction& f) {
  std::string out;
  switch (f.family) {
    case DiscountFunction::Family::Exponential:
      out = "exp(" + f.factor.str() + ")";
      break;
    case DiscountFunction::Family::Reciprocal:
      out = "recip";
      break;
  }
  if (f.shift != 0) out += "+" + std::to_string(f.shift);
  return out;
}

std::size_t discount_hash(const DiscountFunction& f) {
  std::size_t h = static_cast<std::size_t>(f.family) * 0x9e3779b97f4a7c15ull + f.shift;
  if (f.family == DiscountFunction::Family::Exponential) {
    h ^= f.factor.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dltl
