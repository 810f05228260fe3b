#ifndef SINGEQ_COEFF_HPP
#define SINGEQ_COEFF_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "singeq/rational.hpp"

namespace singeq {

// One algebraic extension generator c with monic minimal polynomial m(c)
// over Q. The isolating interval pins down which real root of m the
// generator denotes; it is required for sign queries on extension values.
struct ExtensionSpec {
  std::string generator;
  std::vector<Rat> minpoly;  // monic, ascending, minpoly.back() == 1
  Rat lo, hi;                // isolating interval of the chosen real root

  unsigned degree() const { return static_cast<unsigned>(minpoly.size()) - 1; }
};

using ExtensionPtr = std::shared_ptr<const ExtensionSpec>;

// Normalizes an arbitrary nonconstant univariate polynomial (ascending
// coefficients) to a monic minimal polynomial and wraps it together with an
// isolating interval for the intended real root.
ExtensionPtr make_extension(const std::string& generator,
                            std::vector<Rat> poly, const Rat& lo,
                            const Rat& hi);

// Exact scalar: an element of Q(i)[c]/(m(c)), i.e. a Gaussian rational when
// no extension is attached, and a vector of Gaussian rationals in powers of
// the generator otherwise. Zero is always represented with all components
// zero, so representations are unique.
class Coeff {
 public:
  Coeff() : comps_(1) {}
  Coeff(const Rat& q) : comps_(1) { comps_[0] = GaussRat(q); }  // NOLINT
  Coeff(const GaussRat& g) : comps_(1) { comps_[0] = g; }       // NOLINT
  Coeff(long n) : comps_(1) { comps_[0] = GaussRat(n); }        // NOLINT

  // Element sum_k comps[k] * c^k of the given extension.
  Coeff(ExtensionPtr ext, std::vector<GaussRat> comps);

  // The generator c itself.
  static Coeff generator(ExtensionPtr ext);

  const ExtensionPtr& extension() const { return ext_; }
  const std::vector<GaussRat>& components() const { return comps_; }

  bool is_zero() const;
  bool is_rational() const;  // no extension part, no imaginary part
  bool is_gaussian() const;  // no extension part
  bool is_real() const;      // all imaginary parts zero

  // Requires is_rational() / is_gaussian().
  const Rat& rational() const;
  const GaussRat& gaussian() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff inverse() const;

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(const Coeff& a, const Coeff& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  Coeff pow(unsigned long e) const;

  // Sign of a real value; refines the generator interval as needed.
  // Requires is_real().
  int sign_real() const;

  // Decimal approximation with the requested number of digits after the
  // point. Requires is_real().
  std::string to_decimal(unsigned digits) const;

  std::string to_string() const;

 private:
  void reduce();
  void promote(const ExtensionPtr& ext);
  static void check_compatible(const Coeff& a, const Coeff& b);

  ExtensionPtr ext_;               // null when plain Gaussian rational
  std::vector<GaussRat> comps_;    // size 1, or ext_->degree()
};

}  // namespace singeq

#endif  // SINGEQ_COEFF_HPP
