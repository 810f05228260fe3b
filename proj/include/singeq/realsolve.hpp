#ifndef SINGEQ_REALSOLVE_HPP
#define SINGEQ_REALSOLVE_HPP

#include <string>
#include <vector>

#include "singeq/groebner.hpp"

namespace singeq {

struct RealSolveBudget {
  GBBudget gb;
  int max_shears = 8;
};

// Outcome of the real-solvability decision for a zero-dimensional system.
struct RealSolveResult {
  enum class Verdict { Yes, No, Indeterminate };
  enum class NoReason {
    None,
    UnitIdeal,          // no solutions over C at all
    EmptyRealUnivariate  // an eliminant has no real root
  };

  Verdict verdict = Verdict::Indeterminate;
  NoReason reason = NoReason::None;
  // For Yes: one certified box per variable of the ideal's context, known
  // to contain a real solution.
  std::vector<std::pair<Rat, Rat>> witness_box;
  std::string detail;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
};

// Decides whether V_R(I) is nonempty for a zero-dimensional ideal over Q.
// Strategy: radicalize through squarefree univariate eliminants, then bring
// the ideal into shape position (lex triangular form u(z), t_i - v_i(z)),
// possibly after a linear shear of the last variable; real solutions then
// correspond exactly to real roots of u, and a witness box follows by
// interval evaluation of the parametrization.
RealSolveResult real_solutions_exist(const Ideal& I,
                                     const RealSolveBudget& budget = {});

}  // namespace singeq

#endif  // SINGEQ_REALSOLVE_HPP
