// parse.cpp — text format parser for scalars and algebra elements.
// SPDX-License-Identifier: MIT
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsph/algebra.hpp"

namespace qsph {
namespace {

enum class Tok { kInt, kGen, kQ, kS, kSqrt, kLParen, kRParen, kPlus, kMinus, kStar, kSlash, kCaret, kEnd };

struct Token {
  Tok kind;
  long value = 0;  // kInt payload
  char letter = 0;  // kGen payload
  size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + what);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kInt, std::stol(text.substr(i, j - i)), 0, i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      const std::string word = text.substr(i, j - i);
      if (word == "sqrt") {
        out.push_back({Tok::kSqrt, 0, 0, i});
      } else {
        for (size_t t = 0; t < word.size(); ++t) {
          const char g = word[t];
          if (g == 'q') {
            out.push_back({Tok::kQ, 0, 0, i + t});
          } else if (g == 's') {
            out.push_back({Tok::kS, 0, 0, i + t});
          } else if (g == 'a' || g == 'b' || g == 'c' || g == 'd') {
            out.push_back({Tok::kGen, 0, g, i + t});
          } else {
            i += t;
            fail(std::string("unknown symbol '") + g + "'");
          }
        }
      }
      i = j;
      continue;
    }
    switch (ch) {
      case '(': out.push_back({Tok::kLParen, 0, 0, i}); break;
      case ')': out.push_back({Tok::kRParen, 0, 0, i}); break;
      case '+': out.push_back({Tok::kPlus, 0, 0, i}); break;
      case '-': out.push_back({Tok::kMinus, 0, 0, i}); break;
      case '/': out.push_back({Tok::kSlash, 0, 0, i}); break;
      case '^': out.push_back({Tok::kCaret, 0, 0, i}); break;
      case '*':
        if (i + 1 < text.size() && text[i + 1] == '*') {
          out.push_back({Tok::kCaret, 0, 0, i});
          ++i;
        } else {
          out.push_back({Tok::kStar, 0, 0, i});
        }
        break;
      default: fail(std::string("unexpected character '") + ch + "'");
    }
    ++i;
  }
  out.push_back({Tok::kEnd, 0, 0, text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExactElem run() {
    ExactElem v = expr();
    expect(Tok::kEnd, "trailing input");
    return v;
  }

 private:
  std::vector<Token> toks_;
  size_t at_ = 0;
  ExactRing ring_;

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(peek().pos) + ": " + what);
  }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    ++at_;
  }

  static bool starts_atom(Tok k) {
    return k == Tok::kInt || k == Tok::kGen || k == Tok::kQ || k == Tok::kS ||
           k == Tok::kSqrt || k == Tok::kLParen;
  }

  ExactElem expr() {
    ExactElem v = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool plus = take().kind == Tok::kPlus;
      ExactElem rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  ExactElem term() {
    ExactElem v = unary();
    for (;;) {
      if (peek().kind == Tok::kStar) {
        ++at_;
        v = mul(ring_, v, unary());
      } else if (peek().kind == Tok::kSlash) {
        ++at_;
        v = divide(v, unary());
      } else if (starts_atom(peek().kind)) {
        v = mul(ring_, v, power());
      } else {
        break;
      }
    }
    return v;
  }

  ExactElem unary() {
    if (peek().kind == Tok::kMinus) {
      ++at_;
      return -unary();
    }
    return power();
  }

  ExactElem power() {
    ExactElem base = atom();
    if (peek().kind != Tok::kCaret) return base;
    ++at_;
    return apply_power(base, exponent());
  }

  long exponent() {
    bool wrapped = false;
    if (peek().kind == Tok::kLParen) {
      wrapped = true;
      ++at_;
    }
    long sign = 1;
    if (peek().kind == Tok::kMinus) {
      sign = -1;
      ++at_;
    }
    if (peek().kind != Tok::kInt) fail("expected integer exponent");
    const long e = sign * take().value;
    if (wrapped) expect(Tok::kRParen, "expected ')' after exponent");
    return e;
  }

  ExactElem atom() {
    switch (peek().kind) {
      case Tok::kInt:
        return scalar(RadScalar(QRat(take().value)));
      case Tok::kQ:
        ++at_;
        return scalar(ring_.s_pow(2));
      case Tok::kS:
        ++at_;
        return scalar(ring_.s_pow(1));
      case Tok::kGen: {
        const char g = take().letter;
        return ExactElem::generator(ring_, gen_from_char(g));
      }
      case Tok::kSqrt: {
        ++at_;
        expect(Tok::kLParen, "expected '(' after sqrt");
        ExactElem inner = expr();
        expect(Tok::kRParen, "expected ')' after sqrt argument");
        return scalar(ring_.sqrt_qrat(to_scalar(inner, "sqrt argument").to_qrat()));
      }
      case Tok::kLParen: {
        ++at_;
        ExactElem inner = expr();
        expect(Tok::kRParen, "expected ')'");
        return inner;
      }
      default:
        fail("expected a value");
    }
  }

  ExactElem scalar(const RadScalar& c) { return scal<ExactRing>(c, ExactElem::unit(ring_)); }

  RadScalar to_scalar(const ExactElem& x, const std::string& what) const {
    if (x.is_zero()) return RadScalar();
    if (x.term_count() != 1 || !x.terms().begin()->first.is_one()) {
      throw std::invalid_argument(what + " must be a scalar expression");
    }
    return x.terms().begin()->second;
  }

  ExactElem divide(const ExactElem& num, const ExactElem& den) {
    RadScalar d = to_scalar(den, "divisor");
    ExactElem out;
    for (const auto& [mono, c] : num.terms()) out.add_term(mono, c / d);
    return out;
  }

  ExactElem apply_power(const ExactElem& base, long e) {
    if (e == 0) return ExactElem::unit(ring_);
    ExactElem p = base;
    for (long t = 1; t < std::abs(e); ++t) p = mul(ring_, p, base);
    if (e > 0) return p;
    RadScalar c = to_scalar(p, "negative powers apply to scalars only");
    return scalar(RadScalar(1) / c);
  }
};

}  // namespace

ExactElem parse_element(const std::string& text) { return Parser(text).run(); }

QRat QRat::parse(const std::string& text) {
  ExactElem v = parse_element(text);
  if (v.is_zero()) return QRat();
  if (v.term_count() != 1 || !v.terms().begin()->first.is_one()) {
    throw std::invalid_argument("not a scalar: " + text);
  }
  return v.terms().begin()->second.to_qrat();
}

RadScalar RadScalar::parse(const std::string& text) {
  ExactElem v = parse_element(text);
  if (v.is_zero()) return RadScalar();
  if (v.term_count() != 1 || !v.terms().begin()->first.is_one()) {
    throw std::invalid_argument("not a scalar: " + text);
  }
  return v.terms().begin()->second;
}

}  // namespace qsph
