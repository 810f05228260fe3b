#include "singeq/rational.hpp"

namespace singeq {

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return acc;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  q.canonicalize();
  if (q.get_den() <= 0) throw DomainError("bad rational literal: " + s);
  return q;
}

GaussRat GaussRat::inverse() const {
  Rat n = re * re + im * im;
  if (n == 0) throw DomainError("division by zero Gaussian rational");
  return {Rat(re / n), Rat(-im / n)};
}

GaussRat gauss_pow(const GaussRat& base, unsigned long e) {
  GaussRat acc(Rat(1)), b = base;
  while (e) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return acc;
}

std::string gauss_to_string(const GaussRat& g) {
  if (g.im == 0) return rat_to_string(g.re);
  std::string imcoef;
  if (g.im == 1) {
    imcoef = "i";
  } else if (g.im == -1) {
    imcoef = "-i";
  } else {
    imcoef = rat_to_string(g.im) + "*i";
  }
  if (g.re == 0) return imcoef;
  std::string s = "(" + rat_to_string(g.re);
  if (imcoef[0] != '-') s += "+";
  s += imcoef + ")";
  return s;
}

}  // namespace singeq
