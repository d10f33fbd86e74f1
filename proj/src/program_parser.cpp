#include "zigzag/program_parser.hpp"

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

std::string expect_id(Lexer& lx) {
  Token t = lx.next();
  if (t.kind != Token::Kind::Word) fail(t, "expected a component label");
  return t.text;
}

int expect_int(Lexer& lx) {
  bool negative = false;
  if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "-") {
    lx.next();
    negative = true;
  }
  Token t = lx.next();
  if (t.kind != Token::Kind::Integer) fail(t, "expected an integer");
  int v = std::stoi(t.text);
  return negative ? -v : v;
}

bool peek_word(const Lexer& lx, const std::string& word) {
  return lx.peek().kind == Token::Kind::Word && lx.peek().text == word;
}

}  // namespace

BlowupProgram parse_program(const std::string& text) {
  Lexer lx(text, /*hyphen_words=*/true);
  BlowupProgram p;

  expect_word(lx, "base");
  expect_word(lx, "hirzebruch");
  p.base_n = expect_int(lx);

  if (peek_word(lx, "step1")) {
    lx.next();
    Token t = lx.next();
    if (t.kind != Token::Kind::Word || (t.text != "on-d" && t.text != "free")) {
      fail(t, "expected 'on-d' or 'free'");
    }
    p.step1 = t.text == "on-d" ? Step1::OnD : Step1::Free;
  }

  while (peek_word(lx, "blow")) {
    lx.next();
    Token t = lx.next();
    if (t.kind == Token::Kind::Word && t.text == "between") {
      std::string left = expect_id(lx);
      std::string right = expect_id(lx);
      p.interior.push_back(BetweenStep{left, right});
    } else if (t.kind == Token::Kind::Word && t.text == "free") {
      p.interior.push_back(FarRightFreeStep{});
    } else {
      fail(t, "expected 'between' or 'free'");
    }
  }

  // the closing step is optional: without it the program describes an
  // unfinished completion, which replay leaves open for further blow-ups
  if (peek_word(lx, "final")) {
    lx.next();
    expect_symbol(lx, "{");
    for (;;) {
      if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "}") {
        Token close = lx.next();
        if (p.attachments.empty()) {
          throw ParseError(close.line, close.col,
                           "the final step needs at least one attachment");
        }
        break;
      }
      expect_word(lx, "G");
      expect_word(lx, "on");
      p.attachments.push_back(expect_id(lx));
      if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == ";") {
        lx.next();
        continue;
      }
      if (!(lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "}")) {
        fail(lx.peek(), "expected ';' or '}'");
      }
    }
  }

  if (lx.peek().kind != Token::Kind::End) {
    fail(lx.peek(), "expected end of input");
  }
  return p;
}

}  // namespace zigzag
