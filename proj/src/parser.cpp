#include <cctype>

#include "singeq/poly.hpp"

namespace singeq {

namespace {

struct Parser {
  const std::string& text;
  const ContextPtr& ctx;
  size_t pos = 0;

  Parser(const std::string& t, const ContextPtr& c) : text(t), ctx(c) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(pos, std::string("expected '") + c + "'");
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  Int parse_natural() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError(pos, "expected a number");
    return Int(text.substr(start, pos - start));
  }

  unsigned long parse_exponent() {
    Int n = parse_natural();
    if (!n.fits_ulong_p()) throw ParseError(pos, "exponent too large");
    return n.get_ui();
  }

  // integer or rational literal p/q
  GaussRat parse_number() {
    Int num = parse_natural();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t dpos = pos;
      Int den = parse_natural();
      if (den == 0) throw ParseError(dpos, "zero denominator");
      return GaussRat(Rat(num) / Rat(den));
    }
    return GaussRat(Rat(num));
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  MultiPoly parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError(pos, "unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      MultiPoly e = parse_expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MultiPoly::constant(ctx, parse_number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      std::string name = parse_ident();
      if (name == "i")
        return MultiPoly::constant(ctx, GaussRat(Rat(0), Rat(1)));
      if (ctx->index_of(name) < 0)
        throw UnknownVariableError(start, name);
      return MultiPoly::variable(ctx, name);
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'");
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    skip_ws();
    if (accept('^')) {
      unsigned long e = parse_exponent();
      return base.pow(e);
    }
    return base;
  }

  MultiPoly parse_term() {
    MultiPoly r = parse_power();
    while (accept('*')) r = r * parse_power();
    return r;
  }

  MultiPoly parse_expression() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    MultiPoly r = parse_term();
    if (neg) r = -r;
    while (true) {
      skip_ws();
      if (accept('+')) {
        r += parse_term();
      } else if (accept('-')) {
        r -= parse_term();
      } else {
        break;
      }
    }
    return r;
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const ContextPtr& ctx) {
  Parser p(text, ctx);
  MultiPoly r = p.parse_expression();
  if (!p.at_end())
    throw ParseError(p.pos, std::string("unexpected character '") +
                                text[p.pos] + "'");
  return r;
}

}  // namespace singeq
