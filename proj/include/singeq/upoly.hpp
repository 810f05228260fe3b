#ifndef SINGEQ_UPOLY_HPP
#define SINGEQ_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singeq/rational.hpp"

namespace singeq {

// Dense univariate polynomial over Q, ascending coefficients, no trailing
// zeros (zero polynomial is the empty vector).
using UPoly = std::vector<Rat>;

UPoly up_normalize(UPoly p);
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const Rat& c);
UPoly up_neg(const UPoly& a);
// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> up_divrem(const UPoly& a, const UPoly& b);
UPoly up_derivative(const UPoly& a);
UPoly up_gcd(const UPoly& a, const UPoly& b);  // monic result
UPoly up_squarefree_part(const UPoly& a);      // monic result
UPoly up_monic(const UPoly& a);
UPoly up_compose_neg(const UPoly& a);  // a(-X)
Rat up_eval(const UPoly& a, const Rat& x);
// Interval evaluation: the image of [lo, hi] is contained in the result.
std::pair<Rat, Rat> up_eval_interval(const UPoly& a, const Rat& lo,
                                     const Rat& hi);
int up_degree(const UPoly& a);  // -1 for the zero polynomial
std::string up_to_string(const UPoly& a, const std::string& var = "X");

// Extended real endpoint for root-counting intervals.
struct Endpoint {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rat value;

  static Endpoint neg_inf() { return {NegInf, Rat(0)}; }
  static Endpoint pos_inf() { return {PosInf, Rat(0)}; }
  static Endpoint at(const Rat& v) { return {Finite, v}; }
};

// Number of distinct real roots of p in the open interval (lo, hi]; with
// infinite endpoints this is the usual Sturm count. p must be nonzero; the
// squarefree part is taken internally.
unsigned sturm_count(const UPoly& p, const Endpoint& lo, const Endpoint& hi);
unsigned sturm_count_all(const UPoly& p);

struct RealRootReport {
  unsigned count = 0;
  // Pairwise disjoint closed intervals [lo, hi], each containing exactly one
  // distinct real root, sorted increasingly. Point roots have lo == hi.
  std::vector<std::pair<Rat, Rat>> intervals;
};

// Isolates all distinct real roots of p (nonzero).
RealRootReport isolate_real_roots(const UPoly& p);

// Shrinks an isolating interval of squarefree p below the given width.
std::pair<Rat, Rat> refine_root(const UPoly& squarefree, Rat lo, Rat hi,
                                const Rat& width);

// Real algebraic number: a squarefree defining polynomial together with an
// isolating interval. Rationals are represented with lo == hi.
class AlgebraicReal {
 public:
  AlgebraicReal() : poly_{Rat(0), Rat(1)}, lo_(0), hi_(0) {}
  explicit AlgebraicReal(const Rat& q) : poly_{Rat(-q), Rat(1)}, lo_(q), hi_(q) {}
  // p need not be squarefree or minimal; (lo, hi) must isolate one real root.
  AlgebraicReal(const UPoly& p, const Rat& lo, const Rat& hi);

  const UPoly& poly() const { return poly_; }
  Rat lo() const { return lo_; }
  Rat hi() const { return hi_; }

  bool is_rational() const { return lo_ == hi_; }
  Rat rational() const { return lo_; }

  void refine_below(const Rat& width) const;

  int sign() const;
  AlgebraicReal negated() const;

  // Exact comparison / equality.
  static int compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) < 0;
  }

  // Sign of q evaluated at this number, exactly.
  int sign_at(const UPoly& q) const;

  std::string to_decimal(unsigned digits) const;
  std::string describe(unsigned digits = 12) const;

 private:
  mutable UPoly poly_;     // squarefree; collapses once a rational is found
  mutable Rat lo_, hi_;    // isolating interval, refined on demand
};

}  // namespace singeq

#endif  // SINGEQ_UPOLY_HPP
