#ifndef SINGEQ_RATIONAL_HPP
#define SINGEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace singeq {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ContextMismatchError : public Error {
 public:
  explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

Rat rat_pow(const Rat& base, unsigned long e);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string rat_to_string(const Rat& q);

// Parses "p", "-p", or "p/q" with q > 0 after normalization.
Rat rat_from_string(const std::string& s);

// Gaussian rational re + im*i.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}  // NOLINT: implicit by design
  GaussRat(long r) : re(r), im(0) {}        // NOLINT
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussRat conj() const { return {re, Rat(-im)}; }

  GaussRat operator-() const { return {Rat(-re), Rat(-im)}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }

  GaussRat inverse() const;

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
};

GaussRat gauss_pow(const GaussRat& base, unsigned long e);

// "3", "-1/2", "i", "3/2*i", "(1+2*i)" style; see MultiPoly printing.
std::string gauss_to_string(const GaussRat& g);

}  // namespace singeq

#endif  // SINGEQ_RATIONAL_HPP
