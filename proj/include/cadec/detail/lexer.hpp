#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "cadec/errors.hpp"
#include "cadec/numeric.hpp"

namespace cadec::detail {

enum class Tok {
  kEnd,
  kNumber,   // integer or integer/integer rational literal
  kIdent,
  kPlus,
  kMinus,
  kStar,
  kCaret,
  kLParen,
  kRParen,
  kAnd,      // /\ or &&
  kOr,       // \/ or ||
  kNot,      // ~ or !
  kEq,       // =
  kNeq,      // !=
  kLt,
  kLe,
  kGt,
  kGe,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  Rat value;  // for kNumber
  std::size_t pos = 0;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto peek = [&](std::size_t k) -> char { return i + k < s.size() ? s[i + k] : '\0'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string num = s.substr(i, j - i);
      i = j;
      // a '/' directly followed by digits continues a rational literal
      if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        std::string den = s.substr(i, k - i);
        i = k;
        if (Int(den) == 0) throw ParseError("zero denominator in rational literal", t.pos);
        t.value = Rat(Int(num), Int(den));
        t.value.canonicalize();
      } else {
        t.value = Rat(Int(num));
      }
      t.kind = Tok::kNumber;
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::kIdent;
      t.text = s.substr(i, j - i);
      i = j;
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '+': t.kind = Tok::kPlus; ++i; break;
      case '-': t.kind = Tok::kMinus; ++i; break;
      case '*': t.kind = Tok::kStar; ++i; break;
      case '^': t.kind = Tok::kCaret; ++i; break;
      case '(': t.kind = Tok::kLParen; ++i; break;
      case ')': t.kind = Tok::kRParen; ++i; break;
      case '~': t.kind = Tok::kNot; ++i; break;
      case '/':
        if (peek(1) == '\\') { t.kind = Tok::kAnd; i += 2; }
        else throw ParseError("unexpected '/'", i);
        break;
      case '\\':
        if (peek(1) == '/') { t.kind = Tok::kOr; i += 2; }
        else throw ParseError("unexpected '\\'", i);
        break;
      case '&':
        if (peek(1) == '&') { t.kind = Tok::kAnd; i += 2; }
        else throw ParseError("unexpected '&'", i);
        break;
      case '|':
        if (peek(1) == '|') { t.kind = Tok::kOr; i += 2; }
        else throw ParseError("unexpected '|'", i);
        break;
      case '=': t.kind = Tok::kEq; ++i; break;
      case '!':
        if (peek(1) == '=') { t.kind = Tok::kNeq; i += 2; }
        else { t.kind = Tok::kNot; ++i; }
        break;
      case '<':
        if (peek(1) == '=') { t.kind = Tok::kLe; i += 2; }
        else { t.kind = Tok::kLt; ++i; }
        break;
      case '>':
        if (peek(1) == '=') { t.kind = Tok::kGe; i += 2; }
        else { t.kind = Tok::kGt; ++i; }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::kEnd;
  end.pos = s.size();
  out.push_back(std::move(end));
  return out;
}

}  // namespace cadec::detail
