#include <cctype>
#include <sstream>

#include "derinv/errors.hpp"
#include "derinv/poly.hpp"

namespace derinv {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 16;

// Recursive descent over
//   poly   := sum | csv
//   csv    := int ("," int)+
//   sum    := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" uint)?
//   base   := var | uint | "(" sum ")"
class Parser {
 public:
  Parser(std::string_view text, char var) : text_(text), var_(var) {}

  IntPoly parse() {
    skip_ws();
    if (looks_like_csv()) return parse_csv();
    IntPoly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool looks_like_csv() const { return text_.find(',') != std::string_view::npos; }

  Integer parse_signed_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    Integer v = parse_uint();
    return negative ? Integer(-v) : v;
  }

  Integer parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  IntPoly parse_csv() {
    std::vector<Integer> coeffs;
    coeffs.push_back(parse_signed_int());
    while (peek(',')) {
      ++pos_;
      coeffs.push_back(parse_signed_int());
    }
    skip_ws();
    if (pos_ != text_.size()) fail("expected ',' or end of input in coefficient list");
    return IntPoly(std::move(coeffs));
  }

  IntPoly parse_sum() {
    IntPoly acc;
    bool negative = false;
    if (peek('-') || peek('+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    acc = parse_term();
    if (negative) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      IntPoly t = parse_term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  IntPoly parse_term() {
    IntPoly acc = parse_factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * parse_factor();
    }
    return acc;
  }

  IntPoly parse_factor() {
    IntPoly base = parse_base();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      const Integer e = parse_uint();
      if (e > kMaxExponent) fail("exponent too large");
      base = power(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  IntPoly parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == var_) {
      ++pos_;
      return IntPoly::monomial(1, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(parse_uint());
    if (c == '(') {
      ++pos_;
      IntPoly inner = parse_sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      fail("unknown variable '" + std::string(1, c) + "' (only '" + std::string(1, var_) + "' is allowed)");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

template <typename Coeff>
std::string render(std::span<const Coeff> coeffs, char var) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

}  // namespace

IntPoly parse_poly(std::string_view text, char var) { return Parser(text, var).parse(); }

std::string to_string(const IntPoly& f, char var) { return render<Integer>(f.coeffs(), var); }

std::string to_string(const RatPoly& f, char var) { return render<Rational>(f.coeffs(), var); }

}  // namespace derinv
