// test_support.hpp — shared helpers for the exact test suites.
// SPDX-License-Identifier: MIT
#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsph/algebra.hpp"

namespace qsph::testsupport {

inline nlohmann::json load_frozen() {
  const std::string path = std::string(QSPH_SOURCE_DIR) + "/tools/oracle/frozen_values.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

// Numeric evaluator for the reference-value strings frozen by the oracle
// pipeline ("s**4/(s**8 + 1)", "sqrt(...)", optional L symbol). Written
// independently of the library parser so comparisons stay meaningful.
class SymEval {
 public:
  SymEval(const std::string& text, double s_val, double l_val)
      : text_(text), s_(s_val), l_(l_val) {}

  double run() {
    double v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  double s_;
  double l_;

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("sym_eval: " + what + " at " + std::to_string(pos_) + " in " + text_);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      skip_ws();
      if (pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') {
        fail("misparsed power");
      }
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    return power();
  }

  double power() {
    double base = atom();
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') {
      pos_ += 2;
      double e = unary();
      return std::pow(base, e);
    }
    return base;
  }

  double atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected value");
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = pos_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      double v = std::stod(text_.substr(pos_, j - pos_));
      pos_ = j;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = pos_;
      while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
      std::string word = text_.substr(pos_, j - pos_);
      pos_ = j;
      if (word == "s") return s_;
      if (word == "L") return l_;
      if (word == "EG") return 0.57721566490153286;
      if (word == "sqrt") {
        if (!eat('(')) fail("expected '(' after sqrt");
        double v = expr();
        if (!eat(')')) fail("expected ')'");
        return std::sqrt(v);
      }
      fail("unknown symbol " + word);
    }
    if (ch == '(') {
      ++pos_;
      double v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
};

inline double sym_eval(const std::string& text, double s_val, double l_val = 0.0) {
  return SymEval(text, s_val, l_val).run();
}

inline const std::vector<double>& sample_points() {
  static const std::vector<double> pts = {0.37, 0.52, 0.64, 0.78, 0.91};
  return pts;
}

inline bool close(double x, double y, double tol = 1e-9) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

// one reference line looks like "a^0 b^2 c^1 d^0 : s**4/(s**4 + 1)"
inline bool elem_matches(const ExactElem& got, const std::vector<std::string>& lines,
                         std::string* why = nullptr) {
  auto complain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<size_t>(got.term_count()) != lines.size()) {
    return complain("term count " + std::to_string(got.term_count()) + " != " +
                    std::to_string(lines.size()));
  }
  for (const auto& line : lines) {
    long i = 0, j = 0, k = 0, m = 0;
    int consumed = 0;
    if (std::sscanf(line.c_str(), "a^%ld b^%ld c^%ld d^%ld :%n", &i, &j, &k, &m, &consumed) != 4) {
      return complain("bad reference line: " + line);
    }
    const std::string coeff_text = line.substr(static_cast<size_t>(consumed));
    const Monomial mono(i, j, k, m);
    const RadScalar c = got.coeff(mono);
    if (c.is_zero()) return complain("missing monomial " + mono.str());
    for (double s : sample_points()) {
      const double want = sym_eval(coeff_text, s);
      const double have = c.eval_s(s);
      if (!close(want, have)) {
        return complain("coefficient mismatch at " + mono.str() + " s=" + std::to_string(s) +
                        " want=" + std::to_string(want) + " have=" + std::to_string(have));
      }
    }
  }
  return true;
}

}  // namespace qsph::testsupport
