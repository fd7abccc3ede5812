#include "dltl/parser.hpp"

#include <cctype>
#include <vector>

#include "dltl/errors.hpp"

namespace dltl {
namespace {

struct Token {
  enum class Kind { End, Ident, Number, Symbol };
  Kind kind = Kind::End;
  std::string text;
  char symbol = 0;
  int line = 1;
  int column = 1;
};

bool is_keyword(const std::string& word) {
  static const char* const kKeywords[] = {"true", "false", "U",   "X",     "F",
                                          "G",    "O",     "scale", "exp", "recip"};
  for (const char* k : kKeywords) {
    if (word == k) return true;
  }
  return false;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_blank();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Token::Kind::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        current_.text.push_back(text_[pos_]);
        step();
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text.push_back(text_[pos_]);
        step();
      }
      return;
    }
    static const std::string kSymbols = "|&!(){},/>=";
    if (kSymbols.find(c) != std::string::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.symbol = c;
      current_.text.push_back(c);
      step();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
 public:
  Parser(FormulaFactory& factory, std::string_view text) : factory_(factory), lexer_(text) {}

  FormulaId run() {
    FormulaId id = parse_or();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::End) {
      throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.column);
    }
    return id;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    const Token& t = lexer_.peek();
    throw ParseError(message, t.line, t.column);
  }

  bool at_symbol(char c) const {
    return lexer_.peek().kind == Token::Kind::Symbol && lexer_.peek().symbol == c;
  }

  bool at_ident(const char* word) const {
    return lexer_.peek().kind == Token::Kind::Ident && lexer_.peek().text == word;
  }

  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    lexer_.take();
  }

  FormulaId parse_or() {
    FormulaId lhs = parse_and();
    while (at_symbol('|')) {
      lexer_.take();
      lhs = factory_.make_or(lhs, parse_and());
    }
    return lhs;
  }

  FormulaId parse_and() {
    FormulaId lhs = parse_until();
    while (at_symbol('&')) {
      lexer_.take();
      lhs = factory_.make_and(lhs, parse_until());
    }
    return lhs;
  }

  FormulaId parse_until() {
    FormulaId lhs = parse_unary();
    if (at_ident("U")) {
      lexer_.take();
      if (at_symbol('{')) {
        DiscountFunction f = parse_braced_discount();
        return factory_.make_disc_until(lhs, f, parse_until());
      }
      return factory_.make_until(lhs, parse_until());
    }
    if (at_ident("O")) {
      lexer_.take();
      expect_symbol('{');
      DiscountFunction f = parse_discount();
      expect_symbol(',');
      Token at = lexer_.peek();
      Rational limit = parse_rational();
      if (!limit.in_unit_interval()) {
        throw ParseError("tend limit must lie in [0,1], got " + limit.str(), at.line, at.column);
      }
      expect_symbol('}');
      return factory_.make_tend(lhs, f, limit, parse_until());
    }
    return lhs;
  }

  FormulaId parse_unary() {
    if (at_symbol('!')) {
      lexer_.take();
      return factory_.make_not(parse_unary());
    }
    if (at_ident("X")) {
      lexer_.take();
      return factory_.make_next(parse_unary());
    }
    if (at_ident("F")) {
      lexer_.take();
      if (at_symbol('{')) {
        DiscountFunction f = parse_braced_discount();
        return factory_.make_disc_until(factory_.make_true(), f, parse_unary());
      }
      return factory_.make_until(factory_.make_true(), parse_unary());
    }
    if (at_ident("G")) {
      lexer_.take();
      if (at_symbol('{')) {
        DiscountFunction f = parse_braced_discount();
        return factory_.make_not(factory_.make_disc_until(
            factory_.make_true(), f, factory_.make_not(parse_unary())));
      }
      return factory_.make_not(
          factory_.make_until(factory_.make_true(), factory_.make_not(parse_unary())));
    }
    if (at_ident("scale")) {
      lexer_.take();
      expect_symbol('{');
      Token at = lexer_.peek();
      Rational factor = parse_rational();
      if (!(factor > 0) || !(factor < 1)) {
        throw ParseError("scale factor must lie strictly between 0 and 1, got " + factor.str(),
                         at.line, at.column);
      }
      expect_symbol('}');
      return factory_.make_scale(factor, parse_unary());
    }
    return parse_atom();
  }

  FormulaId parse_atom() {
    const Token& t = lexer_.peek();
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "true") {
        lexer_.take();
        return factory_.make_true();
      }
      if (t.text == "false") {
        lexer_.take();
        return factory_.make_false();
      }
      if (is_keyword(t.text)) fail("unexpected keyword '" + t.text + "'");
      std::string name = lexer_.take().text;
      // Weight probes: "p>0" (weight nonzero) and "p=1" (weight exactly one).
      if (at_symbol('>')) {
        lexer_.take();
        if (lexer_.peek().kind != Token::Kind::Number || lexer_.peek().text != "0") {
          fail("expected '0' after '>'");
        }
        lexer_.take();
        return factory_.make_atom_positive(name);
      }
      if (at_symbol('=')) {
        lexer_.take();
        if (lexer_.peek().kind != Token::Kind::Number || lexer_.peek().text != "1") {
          fail("expected '1' after '='");
        }
        lexer_.take();
        return factory_.make_atom_one(name);
      }
      return factory_.make_atom(name);
    }
    if (at_symbol('(')) {
      lexer_.take();
      FormulaId inner = parse_or();
      expect_symbol(')');
      return inner;
    }
    fail(t.kind == Token::Kind::End ? "unexpected end of input"
                                    : "expected a formula, got '" + t.text + "'");
  }

  DiscountFunction parse_braced_discount() {
    expect_symbol('{');
    DiscountFunction f = parse_discount();
    expect_symbol('}');
    return f;
  }

  DiscountFunction parse_discount() {
    if (at_ident("recip")) {
      lexer_.take();
      return reciprocal();
    }
    if (at_ident("exp")) {
      lexer_.take();
      expect_symbol('(');
      Token at = lexer_.peek();
      Rational factor = parse_rational();
      if (!(factor > 0) || !(factor < 1)) {
        throw ParseError("discount factor must lie strictly between 0 and 1, got " + factor.str(),
                         at.line, at.column);
      }
      expect_symbol(')');
      return exponential(factor);
    }
    fail("expected a discount function (exp(c) or recip)");
  }

  Rational parse_rational() {
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::Number) fail("expected a rational number");
    std::string text = lexer_.take().text;
    if (at_symbol('/')) {
      lexer_.take();
      const Token& d = lexer_.peek();
      if (d.kind != Token::Kind::Number) fail("expected a denominator");
      text += "/" + lexer_.take().text;
    }
    auto value = Rational::parse(text);
    if (!value) throw ParseError("malformed rational '" + text + "'", t.line, t.column);
    return *value;
  }

  FormulaFactory& factory_;
  Lexer lexer_;
};

}  // namespace

FormulaId parse_formula(FormulaFactory& factory, std::string_view text) {
  return Parser(factory, text).run();
}

}  // namespace dltl
