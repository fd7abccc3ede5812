#include "dltl/lasso.hpp"

#include <algorithm>
#include <cctype>

#include "dltl/errors.hpp"

namespace dltl {

Letter::Letter(std::vector<std::pair<std::string, Rational>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i + 1].first) {
      throw ModelError("letter assigns atom '" + entries_[i].first + "' twice");
    }
  }
  for (const auto& [atom, w] : entries_) {
    if (!w.in_unit_interval()) {
      throw ModelError("weight of atom '" + atom + "' must lie in [0,1], got " + w.str());
    }
  }
}

std::optional<Rational> Letter::weight(const std::string& atom) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), atom,
                             [](const auto& entry, const std::string& a) { return entry.first < a; });
  if (it == entries_.end() || it->first != atom) return std::nullopt;
  return it->second;
}

bool Letter::is_boolean() const {
  for (const auto& [atom, w] : entries_) {
    if (!w.is_zero() && !w.is_one()) return false;
  }
  return true;
}

std::string Letter::to_text() const {
  if (entries_.empty()) return "-";
  std::string out;
  for (const auto& [atom, w] : entries_) {
    if (!out.empty()) out += ',';
    out += atom + "=" + w.str();
  }
  return out;
}

bool Letter::operator<(const Letter& o) const {
  return std::lexicographical_compare(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

std::size_t Letter::hash() const {
  std::size_t h = 0x8f1bbcdcu;
  for (const auto& [atom, w] : entries_) {
    h ^= std::hash<std::string>{}(atom) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= w.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Lasso Lasso::advance() const {
  Lasso out;
  if (!prefix.empty()) {
    out.prefix.assign(prefix.begin() + 1, prefix.end());
    out.period = period;
  } else {
    out.period.assign(period.begin() + 1, period.end());
    out.period.push_back(period.front());
  }
  return out;
}

namespace {

Letter parse_letter(const std::string& token) {
  if (token == "-") return Letter{};
  std::vector<std::pair<std::string, Rational>> entries;
  std::size_t pos = 0;
  while (pos < token.size()) {
    std::size_t end = token.find(',', pos);
    if (end == std::string::npos) end = token.size();
    std::string pair = token.substr(pos, end - pos);
    std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size()) {
      throw ParseError("malformed atom=weight pair '" + pair + "'");
    }
    auto w = Rational::parse(std::string_view(pair).substr(eq + 1));
    if (!w) throw ParseError("malformed weight in '" + pair + "'");
    entries.emplace_back(pair.substr(0, eq), *w);
    pos = end + 1;
  }
  if (entries.empty()) throw ParseError("empty letter");
  return Letter(std::move(entries));
}

std::vector<Letter> parse_section(std::string_view text) {
  std::vector<Letter> letters;
  std::string token;
  auto flush = [&] {
    // Commas directly between letters (", ") survive tokenization as bare
    // commas or stick to a neighbour; strip them before parsing the letter.
    while (!token.empty() && token.front() == ',') token.erase(token.begin());
    while (!token.empty() && token.back() == ',') token.pop_back();
    if (!token.empty()) letters.push_back(parse_letter(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return letters;
}

}  // namespace

Lasso Lasso::parse(std::string_view text) {
  std::size_t split = text.find(';');
  if (split == std::string_view::npos) {
    throw ParseError("lasso text must contain ';' between prefix and period");
  }
  if (text.find(';', split + 1) != std::string_view::npos) {
    throw ParseError("lasso text must contain exactly one ';'");
  }
  Lasso out;
  out.prefix = parse_section(text.substr(0, split));
  out.period = parse_section(text.substr(split + 1));
  if (out.period.empty()) throw ParseError("lasso period must not be empty");
  return out;
}

std::string Lasso::to_text() const {
  std::string out;
  for (const Letter& l : prefix) {
    if (!out.empty()) out += ' ';
    out += l.to_text();
  }
  out += out.empty() ? "; " : " ; ";
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (i > 0) out += ' ';
    out += period[i].to_text();
  }
  return out;
}

}  // namespace dltl
