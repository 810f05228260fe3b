#ifndef SINGEQ_GROEBNER_HPP
#define SINGEQ_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singeq/poly.hpp"

namespace singeq {

// Generator list in an ordered variable context.
struct Ideal {
  ContextPtr ctx;
  std::vector<MultiPoly> gens;

  Ideal() = default;
  Ideal(ContextPtr c, std::vector<MultiPoly> g);
};

struct GBBudget {
  // Single-term reduction steps across the whole computation.
  uint64_t max_steps = 1'000'000;
};

// Reduced Groebner basis: pairwise non-divisible leading terms, fully
// reduced tails, monic leading coefficients. Rational coefficients only.
Ideal groebner_basis(const Ideal& I, const MonomialOrder& ord,
                     const GBBudget& budget = {});

// Unique remainder modulo a Groebner basis. The basis property is an
// unchecked precondition.
MultiPoly normal_form_reduce(const MultiPoly& f, const Ideal& gb,
                             const MonomialOrder& ord,
                             const GBBudget& budget = {});

bool membership(const MultiPoly& f, const Ideal& gb, const MonomialOrder& ord,
                const GBBudget& budget = {});

// I intersected with the subring of the remaining variables, via a block
// order with the dropped variables in front. The result context is the
// original one minus drop_vars.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop_vars,
                const GBBudget& budget = {});

// Dimension of the quotient algebra localized at the origin (the Milnor
// number when applied to a Jacobian ideal with an isolated singularity).
// Computed as the stabilized staircase count of I + m^N; nullopt when the
// origin is not an isolated point of the vanishing set.
std::optional<unsigned long> quotient_dimension(const Ideal& I,
                                                const MonomialOrder& ord,
                                                const GBBudget& budget = {});

// Staircase count of a Groebner basis: the number of monomials outside the
// leading term ideal, or nullopt if infinite.
std::optional<unsigned long> staircase_count(const Ideal& gb,
                                             const MonomialOrder& ord);

// Block order that eliminates the given variables.
MonomialOrder elimination_order(const VarContext& ctx,
                                const std::vector<std::string>& drop_vars);

// Lexicographic order with the given variable priority (names from most to
// least significant; unlisted variables follow in context order).
MonomialOrder lex_order_with_priority(const VarContext& ctx,
                                      const std::vector<std::string>& first);

}  // namespace singeq

#endif  // SINGEQ_GROEBNER_HPP
