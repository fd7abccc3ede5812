#include "dltl/generator.hpp"

#include <random>

namespace dltl {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); modulo keeps the sequence independent of library
  // distribution internals.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

const char* const kAtomNames[] = {"p", "q", "r", "s"};

Rational grid_factor(Draw& draw) {
  static const Rational kFactors[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  return kFactors[draw.below(3)];
}

DiscountFunction random_discount(Draw& draw) {
  if (draw.below(4) == 0) return reciprocal();
  return exponential(grid_factor(draw));
}

FormulaId random_formula(FormulaFactory& f, Draw& draw, const GeneratorLimits& limits,
                         unsigned depth) {
  if (depth <= 1) {
    switch (draw.below(6)) {
      case 0:
        return f.make_true();
      case 1:
        return f.make_false();
      default:
        return f.make_atom(kAtomNames[draw.below(limits.atom_count)]);
    }
  }
  auto child = [&] {
    unsigned d = 1 + static_cast<unsigned>(draw.below(depth - 1 ? depth - 1 : 1));
    return random_formula(f, draw, limits, d);
  };
  switch (draw.below(10)) {
    case 0:
      return f.make_not(child());
    case 1:
      return f.make_or(child(), child());
    case 2:
      return f.make_and(child(), child());
    case 3:
      return f.make_next(child());
    case 4:
    case 5:
      return f.make_until(child(), child());
    case 6:
    case 7: {
      FormulaId left = child();
      DiscountFunction disc = random_discount(draw);
      return f.make_disc_until(left, disc, child());
    }
    case 8:
      return f.make_scale(grid_factor(draw), child());
    default: {
      FormulaId left = child();
      DiscountFunction disc = random_discount(draw);
      Rational limit = draw.below(2) == 0 ? Rational(0) : Rational(1, 2);
      return f.make_tend(left, disc, limit, child());
    }
  }
}

Letter random_letter(Draw& draw, const GeneratorLimits& limits) {
  std::vector<std::pair<std::string, Rational>> entries;
  for (unsigned a = 0; a < limits.atom_count; ++a) {
    entries.emplace_back(kAtomNames[a], Rational(static_cast<long>(draw.below(2))));
  }
  return Letter(std::move(entries));
}

}  // namespace

GeneratedInstance random_instance(FormulaFactory& factory, std::uint64_t seed,
                                  const GeneratorLimits& limits) {
  Draw draw(seed);
  GeneratedInstance out;
  out.formula = random_formula(factory, draw, limits, limits.max_depth);
  std::size_t prefix_len = draw.below(limits.max_prefix + 1);
  std::size_t period_len = 1 + draw.below(limits.max_period);
  for (std::size_t i = 0; i < prefix_len; ++i) out.lasso.prefix.push_back(random_letter(draw, limits));
  for (std::size_t i = 0; i < period_len; ++i) out.lasso.period.push_back(random_letter(draw, limits));
  out.threshold = Rational(static_cast<long>(draw.below(17)), 16);
  return out;
}

}  // namespace dltl
