#pragma once
// ============================================================================
// lasso.hpp
//
// Ultimately periodic words u·v^ω over weighted letters.  A letter is a total
// map from atom names to weights in [0,1]; Boolean behaviour is the special
// case of weights drawn from {0,1}.  Position i belongs to one of
// |u|+|v| position classes (prefix positions are singleton classes, period
// positions repeat), and every evaluation routine works per class.
//
// Text form: "u-letters ; v-letters".  Letters are separated by whitespace,
// the atom=weight pairs inside one letter are joined with commas, and a comma
// standing on its own between letters is tolerated:
//
//   a=1 a=1 a=1 ; a=0          three-letter prefix, one-letter period
//   p=1,q=0 ; p=0,q=1 p=1,q=1  two atoms per letter, two-letter period
// ============================================================================

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dltl/rational.hpp"

namespace dltl {

class Letter {
 public:
  Letter() = default;
  explicit Letter(std::vector<std::pair<std::string, Rational>> entries);

  // Weight of an atom; nullopt when the letter does not assign it.
  std::optional<Rational> weight(const std::string& atom) const;
  bool assigns(const std::string& atom) const { return weight(atom).has_value(); }

  const std::vector<std::pair<std::string, Rational>>& entries() const { return entries_; }
  bool is_boolean() const;

  // "p=1,q=0" with atoms in sorted order; "-" for the empty letter.
  std::string to_text() const;

  bool operator==(const Letter& o) const { return entries_ == o.entries_; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool operator<(const Letter& o) const;

  std::size_t hash() const;

 private:
  std::vector<std::pair<std::string, Rational>> entries_;  // sorted by atom, unique
};

struct LetterHash {
  std::size_t operator()(const Letter& l) const { return l.hash(); }
};

struct Lasso {
  std::vector<Letter> prefix;
  std::vector<Letter> period;  // never empty

  // Number of position classes, |u|+|v|.
  std::size_t classes() const { return prefix.size() + period.size(); }

  // Class of the successor position of a position in class c.
  std::size_t next_class(std::size_t c) const {
    return c + 1 < classes() ? c + 1 : prefix.size();
  }

  const Letter& letter(std::size_t c) const {
    return c < prefix.size() ? prefix[c] : period[c - prefix.size()];
  }

  // Class of absolute position i.
  std::size_t class_of(std::size_t i) const {
    return i < prefix.size() ? i : prefix.size() + (i - prefix.size()) % period.size();
  }

  // The suffix word starting one position later (still ultimately periodic).
  Lasso advance() const;

  static Lasso parse(std::string_view text);
  std::string to_text() const;

  bool operator==(const Lasso& o) const { return prefix == o.prefix && period == o.period; }
};

}  // namespace dltl
