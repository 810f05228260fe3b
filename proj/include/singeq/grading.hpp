#ifndef SINGEQ_GRADING_HPP
#define SINGEQ_GRADING_HPP

#include <optional>
#include <vector>

#include "singeq/poly.hpp"

namespace singeq {

// Weight on the leading main variables of a context (typically x, y);
// remaining variables (parameters, transformation coefficients) count as
// degree 0, as coefficients do.
struct Weight {
  std::vector<unsigned> degrees;  // strictly positive

  Weight(std::initializer_list<unsigned> d) : degrees(d) { validate(); }
  explicit Weight(std::vector<unsigned> d) : degrees(std::move(d)) {
    validate();
  }

  void validate() const {
    if (degrees.empty()) throw DomainError("empty weight");
    for (unsigned w : degrees)
      if (w == 0) throw DomainError("weight entries must be positive");
  }

  unsigned long degree_of(const Monomial& m) const {
    unsigned long d = 0;
    for (size_t i = 0; i < degrees.size() && i < m.arity(); ++i)
      d += static_cast<unsigned long>(degrees[i]) * m[i];
    return d;
  }
};

// Finite family of weights; the piecewise degree of a term is the minimum
// over the members.
struct PiecewiseWeight {
  std::vector<Weight> members;

  PiecewiseWeight(std::initializer_list<Weight> ws) : members(ws) {
    validate();
  }
  explicit PiecewiseWeight(std::vector<Weight> ws) : members(std::move(ws)) {
    validate();
  }
  PiecewiseWeight(const Weight& w) : members{w} {}  // NOLINT

  void validate() const {
    if (members.empty()) throw DomainError("empty piecewise weight");
    for (const auto& w : members)
      if (w.degrees.size() != members.front().degrees.size())
        throw DomainError("piecewise weight members must share arity");
  }

  unsigned long degree_of(const Monomial& m) const {
    unsigned long d = members.front().degree_of(m);
    for (size_t i = 1; i < members.size(); ++i)
      d = std::min(d, members[i].degree_of(m));
    return d;
  }
};

// Weighted degree of a monomial, or the filtration of a polynomial (the
// minimum over its terms). The zero polynomial has no filtration; nullopt
// plays the role of the +infinity sentinel.
unsigned long wdeg(const Monomial& m, const PiecewiseWeight& w);
std::optional<unsigned long> wdeg(const MultiPoly& f, const PiecewiseWeight& w);

// Terms of weighted degree <= j.
MultiPoly weighted_jet(const MultiPoly& f, const PiecewiseWeight& w,
                       unsigned long j);

// The common degree when every term has the same piecewise degree.
std::optional<unsigned long> is_quasihomogeneous(const MultiPoly& f,
                                                 const PiecewiseWeight& w);

// phi_j^w: truncates the image of the i-th weighted variable at
// w-deg(x_i) + j; all other variables keep their images. Accepts piecewise
// weights, with the piecewise degree of x_i as the truncation base.
RingMap map_weighted_jet(const RingMap& phi, const PiecewiseWeight& w,
                         unsigned long j);

// Sum of the terms lying on the compact boundary faces of the Newton
// polygon taken in the exponents of the first two context variables;
// coefficients may involve further (parameter) variables.
MultiPoly newton_principal_part(const MultiPoly& f);

// True when every term of f has piecewise degree strictly greater than d.
bool in_higher_filtration(const MultiPoly& f, const PiecewiseWeight& w,
                          unsigned long d);

}  // namespace singeq

#endif  // SINGEQ_GRADING_HPP
