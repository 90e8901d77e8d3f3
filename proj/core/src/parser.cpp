#include "eulerseq/parser.hpp"

#include <algorithm>
#include <cctype>

namespace eulerseq {

namespace {

struct Parser {
  const Field& f;
  const std::vector<std::string>& vars;
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  std::size_t variable_index() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name(s.substr(start, pos - start));
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    throw ParseError("unknown variable '" + name + "'", start);
  }

  MPoly base() {
    char c = peek();
    if (c == '(') {
      ++pos;
      MPoly e = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MPoly::constant(f, vars.size(), f.from_mpz(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return MPoly::variable(f, vars.size(), variable_index());
    throw ParseError("unexpected character", pos);
  }

  MPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    MPoly b = base();
    if (eat('^')) {
      mpz_class e = integer();
      if (!e.fits_ulong_p()) throw ParseError("exponent too large", pos);
      return b.pow(e.get_ui());
    }
    return b;
  }

  MPoly term() {
    MPoly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  MPoly expr() {
    MPoly r = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r = r + term();
      } else if (c == '-') {
        ++pos;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  MPoly run() {
    MPoly r = expr();
    skip_ws();
    if (pos != s.size()) throw ParseError("trailing input", pos);
    return r;
  }
};

}  // namespace

MPoly parse_polynomial(const Field& f, const std::vector<std::string>& vars,
                       std::string_view text) {
  Parser p{f, vars, text};
  return p.run();
}

Poly1 parse_poly1(const Field& f, const std::string& var, std::string_view text) {
  std::vector<std::string> vars{var};
  MPoly m = parse_polynomial(f, vars, text);
  int deg = 0;
  for (const auto& [e, c] : m.terms()) deg = std::max(deg, static_cast<int>(e[0]));
  std::vector<Scalar> coeffs(static_cast<std::size_t>(deg) + 1, f.zero());
  for (const auto& [e, c] : m.terms()) coeffs[e[0]] = c;
  return Poly1::from_coeffs(f, var, std::move(coeffs));
}

}  // namespace eulerseq
