#include "zigzag/ring_parser.hpp"

#include <map>
#include <set>

#include "lexer.hpp"

namespace zigzag {

namespace {

using detail::Lexer;
using detail::Token;

[[noreturn]] void fail(const Token& t, const std::string& what) {
  std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(t.line, t.col, what + ", got " + got);
}

Token expect_word(Lexer& lx, const std::string& word) {
  Token t = lx.next();
  if (t.kind != Token::Kind::Word || t.text != word) fail(t, "expected '" + word + "'");
  return t;
}

Token expect_symbol(Lexer& lx, const std::string& sym) {
  Token t = lx.next();
  if (t.kind != Token::Kind::Symbol || t.text != sym) fail(t, "expected '" + sym + "'");
  return t;
}

bool peek_symbol(const Lexer& lx, const std::string& sym) {
  return lx.peek().kind == Token::Kind::Symbol && lx.peek().text == sym;
}

// polynomial grammar: expr := term (('+'|'-') term)*
//                     term := factor ('*' factor)*
//                     factor := '-' factor | atom ['^' int]
//                     atom := '(' expr ')' | variable | int ['/' int]
class PolyParser {
 public:
  PolyParser(Lexer& lx, const VarSetPtr& vars) : lx_(lx), vars_(vars) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (peek_symbol(lx_, "+") || peek_symbol(lx_, "-")) {
      bool plus = lx_.next().text == "+";
      Polynomial rhs = term();
      if (plus) {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (peek_symbol(lx_, "*")) {
      lx_.next();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (peek_symbol(lx_, "-")) {
      lx_.next();
      return -factor();
    }
    Polynomial base = atom();
    if (peek_symbol(lx_, "^")) {
      lx_.next();
      Token t = lx_.next();
      if (t.kind != Token::Kind::Integer) fail(t, "expected an exponent");
      return pow(base, std::stoi(t.text));
    }
    return base;
  }

  Polynomial atom() {
    Token t = lx_.next();
    if (t.kind == Token::Kind::Symbol && t.text == "(") {
      Polynomial inner = expr();
      expect_symbol(lx_, ")");
      return inner;
    }
    if (t.kind == Token::Kind::Word) {
      auto idx = vars_->index(t.text);
      if (!idx) fail(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(vars_, *idx);
    }
    if (t.kind == Token::Kind::Integer) {
      std::string literal = t.text;
      if (peek_symbol(lx_, "/")) {
        lx_.next();
        Token d = lx_.next();
        if (d.kind != Token::Kind::Integer) fail(d, "expected a denominator");
        if (d.text.find_first_not_of('0') == std::string::npos) {
          throw ParseError(d.line, d.col, "zero denominator");
        }
        literal += "/" + d.text;
      }
      return Polynomial::constant(vars_, rational_from_string(literal));
    }
    fail(t, "expected a variable, number, or '('");
  }

  Lexer& lx_;
  const VarSetPtr& vars_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars) {
  Lexer lx(text, /*hyphen_words=*/false);
  Polynomial p = PolyParser(lx, vars).expr();
  if (lx.peek().kind != Token::Kind::End) {
    fail(lx.peek(), "expected end of input");
  }
  return p;
}

RingFile parse_ring_file(const std::string& text) {
  Lexer lx(text, /*hyphen_words=*/false);

  expect_word(lx, "ring");
  expect_word(lx, "vars");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (;;) {
    Token t = lx.next();
    if (t.kind != Token::Kind::Word) fail(t, "expected a variable name");
    if (!seen.insert(t.text).second) {
      throw ParseError(t.line, t.col, "duplicate variable '" + t.text + "'");
    }
    names.push_back(t.text);
    if (peek_symbol(lx, ",")) {
      lx.next();
      continue;
    }
    break;
  }
  VarSetPtr vars = make_varset(names);

  expect_word(lx, "ideal");
  expect_symbol(lx, "{");
  std::vector<Polynomial> relations;
  while (!peek_symbol(lx, "}")) {
    relations.push_back(PolyParser(lx, vars).expr());
    if (peek_symbol(lx, ";")) {
      lx.next();
      continue;
    }
    if (!peek_symbol(lx, "}")) fail(lx.peek(), "expected ';' or '}'");
  }
  lx.next();  // '}'

  RingFile file{PresentedRing{vars, Ideal(vars, relations)}, {}};

  while (lx.peek().kind == Token::Kind::Word && lx.peek().text == "derivation") {
    lx.next();
    Token name = lx.next();
    if (name.kind != Token::Kind::Word) fail(name, "expected a derivation name");
    expect_symbol(lx, "{");
    std::map<std::size_t, Polynomial> images;
    while (!peek_symbol(lx, "}")) {
      Token var = lx.next();
      if (var.kind != Token::Kind::Word) fail(var, "expected a variable name");
      auto idx = vars->index(var.text);
      if (!idx) {
        throw ParseError(var.line, var.col, "unknown variable '" + var.text + "'");
      }
      if (images.count(*idx)) {
        throw ParseError(var.line, var.col,
                         "derivation " + name.text + " maps '" + var.text +
                             "' twice");
      }
      expect_symbol(lx, "->");
      images.emplace(*idx, PolyParser(lx, vars).expr());
      if (peek_symbol(lx, ";")) {
        lx.next();
        continue;
      }
      if (!peek_symbol(lx, "}")) fail(lx.peek(), "expected ';' or '}'");
    }
    Token close = lx.next();  // '}'
    for (std::size_t i = 0; i < vars->size(); ++i) {
      if (!images.count(i)) {
        throw ParseError(close.line, close.col,
                         "derivation " + name.text + " does not map variable '" +
                             vars->name(i) + "'");
      }
    }
    std::vector<Polynomial> ordered;
    for (std::size_t i = 0; i < vars->size(); ++i) ordered.push_back(images.at(i));
    file.derivations.push_back(
        make_derivation(name.text, file.ring, std::move(ordered)));
  }

  if (lx.peek().kind != Token::Kind::End) {
    fail(lx.peek(), "expected end of input");
  }
  return file;
}

}  // namespace zigzag
