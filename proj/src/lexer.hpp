#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "zigzag/errors.hpp"

namespace zigzag::detail {

struct Token {
  enum class Kind { Word, Integer, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

/// Hand-rolled tokenizer shared by the program and ring grammars. Words may
/// contain interior hyphens only when hyphen_words is set (the program
/// grammar's "on-d"); the ring grammar needs '-' free for subtraction.
class Lexer {
 public:
  Lexer(std::string_view src, bool hyphen_words)
      : src_(src), hyphen_words_(hyphen_words) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  static bool word_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
        continue;
      }
      break;
    }
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= src_.size()) {
      current_.kind = Token::Kind::End;
      current_.text.clear();
      return;
    }
    char c = src_[pos_];
    if (word_start(c)) {
      std::size_t begin = pos_;
      while (pos_ < src_.size() &&
             (word_char(src_[pos_]) ||
              (hyphen_words_ && src_[pos_] == '-' && word_char(at(pos_ + 1))))) {
        ++pos_;
        ++col_;
      }
      current_.kind = Token::Kind::Word;
      current_.text = std::string(src_.substr(begin, pos_ - begin));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++col_;
      }
      current_.kind = Token::Kind::Integer;
      current_.text = std::string(src_.substr(begin, pos_ - begin));
      return;
    }
    if (c == '-' && at(pos_ + 1) == '>') {
      current_.kind = Token::Kind::Symbol;
      current_.text = "->";
      pos_ += 2;
      col_ += 2;
      return;
    }
    static constexpr std::string_view kSingle = "{};,+-*^()/";
    if (kSingle.find(c) != std::string_view::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  bool hyphen_words_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

}  // namespace zigzag::detail
