#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "thomkit/polynomial.hpp"

namespace thomkit {

// Polynomial text grammar:
//   poly     := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational] ('*'? factor)*        (at least one of the two)
//   factor   := fam '[' int ']' ('^' nat)? | 'y' ('^' nat)?
//   fam      := 'a' | 'b' | 'c' | 'cs' | 'd' | 'x'
//   rational := int ['/' nat]
// Example: "d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2]".

namespace io_detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip_ws();
    if (at_end()) throw parse_error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw parse_error(where("expected '+' or '-' between terms"));
      }
      out += parse_term(sign);
      skip_ws();
      first = false;
    }
    return out;
  }

 private:
  Polynomial parse_term(int sign) {
    skip_ws();
    Rational coeff = sign;
    bool have_any = false;
    if (is_digit(peek())) {
      coeff *= parse_unsigned_rational();
      have_any = true;
    }
    std::vector<Factor> factors;
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!is_alpha(peek())) throw parse_error(where("expected a factor after '*'"));
      }
      if (!is_alpha(peek())) break;
      factors.push_back(parse_factor());
      have_any = true;
    }
    if (!have_any) throw parse_error(where("expected a term"));
    return Polynomial::term(coeff, factors);
  }

  Factor parse_factor() {
    std::size_t start = pos_;
    while (!at_end() && is_alpha(peek())) ++pos_;
    std::string_view tag = text_.substr(start, pos_ - start);
    auto fam = family_from_tag(tag);
    if (!fam) throw parse_error(where("unknown family '" + std::string(tag) + "'"));
    int index = 0;
    if (*fam == Family::y) {
      if (peek() == '[') throw parse_error(where("y admits no index"));
    } else {
      if (peek() != '[') throw parse_error(where("expected '[' after family tag"));
      ++pos_;
      index = parse_int();
      if (peek() != ']') throw parse_error(where("expected ']'"));
      ++pos_;
    }
    int exponent = 1;
    if (peek() == '^') {
      ++pos_;
      exponent = parse_int();
      if (exponent <= 0) throw parse_error(where("exponent must be positive"));
    }
    return Factor{Variable(*fam, index), exponent};
  }

  Rational parse_unsigned_rational() {
    BigInt num = parse_unsigned_bigint();
    if (peek() == '/') {
      ++pos_;
      BigInt den = parse_unsigned_bigint();
      if (den == 0) throw parse_error(where("denominator must be positive"));
      return Rational(num, den);
    }
    return Rational(num);
  }

  BigInt parse_unsigned_bigint() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw parse_error(where("expected digits"));
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_int() {
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw parse_error(where("expected an integer"));
    try {
      return sign * std::stoi(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw parse_error(where("integer out of range"));
    }
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string where(std::string msg) const {
    return msg + " (offset " + std::to_string(pos_) + ")";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace io_detail

inline Polynomial parse_polynomial(std::string_view text) {
  return io_detail::Parser(text).parse();
}

inline std::string print(const Monomial& m) {
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += tag_of(f.var.family);
    if (spec_of(f.var.family).indexed) {
      out += '[' + std::to_string(f.var.index) + ']';
    }
    if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

/// Canonical textual form, terms in graded-lex order. parse(print(p)) == p.
inline std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (m.is_unit()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += print(m);
    }
  }
  return out;
}

}  // namespace thomkit
