#include "jring/factored_poly.hpp"

#include <cctype>

#include "jring/util.hpp"

namespace jring {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, i); }

  Int parse_int(bool allow_sign) {
    skip_ws();
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) {
      i = start;
      fail("expected integer");
    }
    return Int(s.substr(start, i - start));
  }

  // nonnegative exponent with optional braces
  unsigned parse_exponent() {
    skip_ws();
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++i;
    }
    Int e = parse_int(false);
    if (braced) {
      if (peek() != '}') fail("expected '}'");
      ++i;
    }
    if (!e.fits_uint_p()) fail("exponent out of range");
    return unsigned(e.get_ui());
  }

  // signed terms in u, e.g. "-4-22u+u^{2}"
  IntPolynomial parse_intexpr() {
    IntPolynomial acc;
    bool first = true;
    for (;;) {
      skip_ws();
      char c = peek();
      if (first && c != '+' && c != '-' && !std::isdigit((unsigned char)c) &&
          c != 'u')
        fail("expected term");
      if (!first && c != '+' && c != '-') break;
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++i;
        skip_ws();
      }
      Int coeff(1);
      bool have_coeff = false;
      if (std::isdigit((unsigned char)peek())) {
        coeff = parse_int(false);
        have_coeff = true;
      }
      int exp = 0;
      if (peek() == 'u') {
        ++i;
        exp = 1;
        if (peek() == '^') {
          ++i;
          exp = int(parse_exponent());
        }
      } else if (!have_coeff) {
        fail("expected coefficient or 'u'");
      }
      acc += IntPolynomial::monomial(sign * coeff, exp);
      first = false;
    }
    return acc;
  }
};

}  // namespace

IntPolynomial expand_factored_poly(const std::string& text) {
  Cursor cur{text};
  IntPolynomial result = IntPolynomial::constant(1);
  bool any = false;
  while (!cur.done()) {
    IntPolynomial base;
    char c = cur.peek();
    if (c == '(') {
      ++cur.i;
      base = cur.parse_intexpr();
      if (cur.peek() != ')') cur.fail("expected ')'");
      ++cur.i;
    } else if (c == 'u') {
      ++cur.i;
      base = IntPolynomial::monomial(1, 1);
    } else if (c == '-' || std::isdigit((unsigned char)c)) {
      base = IntPolynomial::constant(cur.parse_int(true));
    } else {
      cur.fail("expected factor");
    }
    unsigned e = 1;
    if (cur.peek() == '^') {
      ++cur.i;
      e = cur.parse_exponent();
    }
    result = result * base.pow(e);
    any = true;
  }
  if (!any) cur.fail("empty polynomial");
  return result;
}

}  // namespace jring
