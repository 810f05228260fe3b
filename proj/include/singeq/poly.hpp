#ifndef SINGEQ_POLY_HPP
#define SINGEQ_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singeq/monomial.hpp"
#include "singeq/upoly.hpp"

namespace singeq {

class RingMap;

// Exact multivariate polynomial over the Gaussian rationals, optionally
// modulo the minimal polynomial of the context's algebraic generator.
// Zero coefficients are never stored; equality is structural.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  MultiPoly(ContextPtr ctx, const GaussRat& c);

  static MultiPoly variable(const ContextPtr& ctx, const std::string& name);
  static MultiPoly constant(const ContextPtr& ctx, const GaussRat& c);
  static MultiPoly from_terms(ContextPtr ctx,
                              std::vector<std::pair<Monomial, GaussRat>> ts);

  const ContextPtr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, GaussRat, MonomialLexLess>& terms() const {
    return terms_;
  }

  bool is_constant() const;
  GaussRat constant_value() const;  // 0 for the zero polynomial

  GaussRat coefficient(const Monomial& m) const;
  long degree_in(size_t var) const;  // -1 for zero polynomial
  unsigned long total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    return a += b;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    return a -= b;
  }
  MultiPoly scaled(const GaussRat& c) const;
  MultiPoly pow(unsigned long e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  // phi(f): ring homomorphism defined by the map's variable images.
  MultiPoly substitute(const RingMap& phi) const;

  // Partial evaluation at var -> value; unassigned variables stay symbolic.
  MultiPoly eval(const std::vector<std::pair<std::string, Coeff>>& point)
      const;

  // Splits f as sum over monomials in the given main variables with
  // polynomial coefficients in the remaining ones. Sorted by descending lex
  // on the main exponents; zero coefficients omitted.
  std::vector<std::pair<Monomial, MultiPoly>> coeff_extract(
      const std::vector<std::string>& main_vars) const;

  MultiPoly derivative(const std::string& var) const;

  // Remaps variables by name into a new context. Every variable that
  // actually occurs must exist in the target context.
  MultiPoly with_context(const ContextPtr& target) const;

  // Leading term with respect to an order.
  std::pair<Monomial, GaussRat> leading_term(const MonomialOrder& ord) const;

  // Content (gcd of |numerators| / lcm of denominators over re and im
  // parts); zero polynomial has content 0.
  Rat content() const;
  MultiPoly primitive_part() const;

  // True when all coefficients are real rationals.
  bool is_rational_poly() const;

  // The polynomial as a univariate in the given variable; every other
  // variable must be absent.
  UPoly to_univariate(const std::string& var) const;
  static MultiPoly from_univariate(const ContextPtr& ctx,
                                   const std::string& var, const UPoly& p);

  std::string to_string() const;

  void add_term(const Monomial& m, const GaussRat& c);

 private:
  void reduce_extension();
  static void require_same_context(const MultiPoly& a, const MultiPoly& b);

  ContextPtr ctx_;
  std::map<Monomial, GaussRat, MonomialLexLess> terms_;
};

// Candidate coordinate transformation: one image polynomial per source
// variable; variables not being transformed map to themselves. Candidate
// maps need not be automorphisms.
class RingMap {
 public:
  explicit RingMap(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const MultiPoly& image(size_t var) const { return images_[var]; }
  void set_image(const std::string& var, MultiPoly img);
  bool is_identity_on(size_t var) const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::vector<MultiPoly> images_;
};

// Arithmetic entry point matching the spec surface.
enum class ArithOp { Add, Sub, Mul, Pow };
MultiPoly arith(const MultiPoly& f, const MultiPoly& g, ArithOp op,
                unsigned long pow_exponent = 0);

class ParseError : public Error {
 public:
  ParseError(size_t pos, const std::string& what)
      : Error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  size_t position;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(size_t pos, const std::string& name)
      : ParseError(pos, "unknown variable '" + name + "'"), variable(name) {}
  std::string variable;
};

// Exact grammar: integers, rationals p/q, the imaginary unit i, variables
// from the context, + - * ^ and parentheses; multiplication is always
// explicit.
MultiPoly parse_poly(const std::string& text, const ContextPtr& ctx);

}  // namespace singeq

#endif  // SINGEQ_POLY_HPP
