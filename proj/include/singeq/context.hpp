#ifndef SINGEQ_CONTEXT_HPP
#define SINGEQ_CONTEXT_HPP

#include <memory>
#include <string>
#include <vector>

#include "singeq/coeff.hpp"

namespace singeq {

// Ordered variable list shared by all polynomials of a computation. An
// algebraic extension may be bound to one of the variables; exponents of
// that variable are then reduced modulo the minimal polynomial.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> vars)
      : vars_(std::move(vars)) {}
  VarContext(std::vector<std::string> vars, ExtensionPtr ext);

  size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(size_t i) const { return vars_[i]; }
  int index_of(const std::string& name) const;  // -1 if absent

  const ExtensionPtr& extension() const { return ext_; }
  int extension_var() const { return ext_var_; }

  friend bool operator==(const VarContext& a, const VarContext& b) {
    if (a.vars_ != b.vars_) return false;
    if (!a.ext_ && !b.ext_) return true;
    if (!a.ext_ || !b.ext_) return false;
    return a.ext_ == b.ext_ || (a.ext_->generator == b.ext_->generator &&
                                a.ext_->minpoly == b.ext_->minpoly);
  }
  friend bool operator!=(const VarContext& a, const VarContext& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> vars_;
  ExtensionPtr ext_;
  int ext_var_ = -1;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> vars);
ContextPtr make_context(std::vector<std::string> vars, ExtensionPtr ext);

}  // namespace singeq

#endif  // SINGEQ_CONTEXT_HPP
