#ifndef SINGEQ_MONOMIAL_HPP
#define SINGEQ_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "singeq/context.hpp"

namespace singeq {

// Dense exponent vector with inline storage; contexts here are tiny
// (x, y, a, b, t1..t4, c plus a shear slack at most).
class Monomial {
 public:
  static constexpr size_t kMaxVars = 12;

  Monomial() = default;
  explicit Monomial(size_t arity) : n_(static_cast<uint8_t>(arity)) {
    if (arity > kMaxVars) throw DomainError("context too large");
  }
  Monomial(std::initializer_list<unsigned> exps);

  size_t arity() const { return n_; }
  uint16_t operator[](size_t i) const { return e_[i]; }
  uint16_t& operator[](size_t i) { return e_[i]; }

  unsigned long total_degree() const;
  bool is_unit() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(o) in the caller's direction: this / o.
  Monomial divide_by(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) return false;
    for (size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  // Plain lexicographic compare, used as the canonical storage order.
  static int lex_compare(const Monomial& a, const Monomial& b);

  std::string to_string(const VarContext& ctx) const;

 private:
  std::array<uint16_t, kMaxVars> e_{};
  uint8_t n_ = 0;
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_compare(a, b) < 0;
  }
};

// Term orders. A block order compares block by block (most significant
// first), graded reverse-lexicographically inside each block; this is the
// elimination order used throughout. lex is the ordinary lexicographic
// order on the context.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex(size_t arity);
  static MonomialOrder degrevlex(size_t arity);
  // Blocks partition [0, arity); earlier blocks dominate.
  static MonomialOrder block(std::vector<std::vector<int>> blocks,
                             size_t arity);

  Kind kind() const { return kind_; }
  size_t arity() const { return arity_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_ = Kind::DegRevLex;
  size_t arity_ = 0;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace singeq

#endif  // SINGEQ_MONOMIAL_HPP
