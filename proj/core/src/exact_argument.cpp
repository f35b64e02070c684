#include "sincprod/exact_argument.hpp"

#include <cctype>
#include <string>

#include "sincprod/errors.hpp"

namespace sincprod {
namespace {

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

// Unsigned decimal literal: digits[.digits][e[+-]digits]
mpq_class parse_decimal(std::string_view text) {
  std::string digits;
  long scale = 0;
  size_t i = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw DomainError("expected a number in '" + std::string(text) + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::string exponent;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exponent += text[i++];
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exponent += text[i++];
    if (exponent.empty() || exponent == "+" || exponent == "-") {
      throw DomainError("malformed exponent in '" + std::string(text) + "'");
    }
    scale += std::stol(exponent);
  }
  if (i != text.size()) throw DomainError("unexpected characters in '" + std::string(text) + "'");
  mpq_class value{mpz_class(digits, 10)};
  if (scale > 0) value *= pow10(static_cast<unsigned long>(scale));
  if (scale < 0) value /= pow10(static_cast<unsigned long>(-scale));
  return canonical(value);
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  ExactArgument parse() {
    if (text_.empty()) fail("empty argument");
    ExactArgument total;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (text_[pos_++] == '-') ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      ExactArgument term = parse_term();
      total = sign > 0 ? total + term : total - term;
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume_pi() {
    if (text_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  mpq_class parse_number() {
    const size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const bool exponent_sign = (c == '+' || c == '-') && pos_ > start &&
                                 (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' || exponent_sign) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a number");
    return parse_decimal(std::string_view(text_).substr(start, pos_ - start));
  }

  mpq_class parse_divisor() {
    mpq_class d = parse_number();
    if (sgn(d) == 0) fail("division by zero");
    return d;
  }

  ExactArgument parse_term() {
    mpq_class coefficient = 1;
    bool has_pi = false;
    if (consume_pi()) {
      has_pi = true;
    } else {
      coefficient = parse_number();
    }
    while (pos_ < text_.size()) {
      const char c = peek();
      if (c == '/') {
        ++pos_;
        coefficient /= parse_divisor();
      } else if (c == '*') {
        ++pos_;
        if (consume_pi()) {
          if (has_pi) fail("pi squared is not representable");
          has_pi = true;
        } else {
          coefficient *= parse_number();
        }
      } else {
        break;
      }
    }
    coefficient.canonicalize();
    return has_pi ? ExactArgument(0, coefficient) : ExactArgument(coefficient, 0);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse argument '" + text_ + "': " + why);
  }

  std::string text_;
  size_t pos_ = 0;
};

}  // namespace

ExactArgument::ExactArgument(mpq_class rational_part, mpq_class pi_multiple)
    : rational_(canonical(std::move(rational_part))), pi_(canonical(std::move(pi_multiple))) {}

ExactArgument ExactArgument::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  return Parser(compact).parse();
}

ExactArgument ExactArgument::scaled(const mpq_class& factor) const {
  return ExactArgument(rational_ * factor, pi_ * factor);
}

ExactArgument operator+(const ExactArgument& a, const ExactArgument& b) {
  return ExactArgument(a.rational_ + b.rational_, a.pi_ + b.pi_);
}

ExactArgument operator-(const ExactArgument& a, const ExactArgument& b) {
  return ExactArgument(a.rational_ - b.rational_, a.pi_ - b.pi_);
}

std::string ExactArgument::to_string() const {
  if (sgn(pi_) == 0) return rational_.get_str();
  const std::string pi_text = pi_.get_str() + "*pi";
  if (sgn(rational_) == 0) return pi_text;
  if (sgn(pi_) < 0) return rational_.get_str() + " - " + mpq_class(-pi_).get_str() + "*pi";
  return rational_.get_str() + " + " + pi_text;
}

mpq_class parse_rational(std::string_view text) {
  ExactArgument parsed = ExactArgument::parse(text);
  if (!parsed.is_rational()) throw DomainError("expected a rational number, got '" + std::string(text) + "'");
  return parsed.rational_part();
}

}  // namespace sincprod
