#include <cctype>
#include <map>

#include "newtonpoly/poly.hpp"

namespace newtonpoly {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  RationalPoly parse() {
    std::map<std::size_t, Rational> terms;
    skip_ws();
    if (at_end()) fail("a term", "empty input");
    int sign = 1;
    if (int s = read_sign(); s != 0) sign = s;
    parse_term(sign, terms);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      int s = read_sign();
      if (s == 0) fail("'+' or '-'", "unexpected character");
      skip_ws();
      parse_term(s, terms);
    }
    std::size_t degree = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> coeffs(degree + 1);
    for (auto& [k, c] : terms) coeffs[k] = c;
    return RationalPoly(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Returns +1/-1 after consuming a sign (ASCII or U+2212), 0 if none.
  int read_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return -1;
    }
    return 0;
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw ParseError(pos_, expected, message);
  }

  Integer read_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("digit", "missing number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational read_fraction() {
    Integer num = read_unsigned();
    skip_ws();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip_ws();
    Integer den = read_unsigned();
    if (den == 0) fail("nonzero denominator", "division by zero");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational read_coefficient() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      int s = read_sign();
      skip_ws();
      Rational q = read_fraction();
      if (s < 0) q = -q;
      skip_ws();
      if (peek() != ')') fail("')'", "unbalanced parenthesis");
      ++pos_;
      return q;
    }
    return read_fraction();
  }

  void parse_term(int sign, std::map<std::size_t, Rational>& terms) {
    Rational coeff(1);
    bool have_coeff = false;
    if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_coefficient();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') fail("'x'", "dangling '*'");
      }
    }
    std::size_t power = 0;
    if (peek() == 'x') {
      ++pos_;
      power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        Integer k = read_unsigned();
        if (!k.fits_ulong_p() || k > 100000000) fail("small exponent", "exponent too large");
        power = k.get_ui();
      }
    } else if (!have_coeff) {
      fail("coefficient or 'x'", "invalid term");
    }
    terms[power] += sign < 0 ? Rational(-coeff) : coeff;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string coefficient_text(const Rational& magnitude, bool followed_by_x) {
  if (magnitude.get_den() == 1) {
    if (followed_by_x && magnitude == 1) return "";
    return magnitude.get_num().get_str();
  }
  std::string s = magnitude.get_num().get_str() + "/" + magnitude.get_den().get_str();
  return followed_by_x ? "(" + s + ")" : s;
}

}  // namespace

RationalPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string render(const RationalPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational magnitude = negative ? Rational(-c) : c;
    out += coefficient_text(magnitude, i > 0);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace newtonpoly
