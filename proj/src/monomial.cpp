#include "singeq/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace singeq {

VarContext::VarContext(std::vector<std::string> vars, ExtensionPtr ext)
    : vars_(std::move(vars)), ext_(std::move(ext)) {
  if (ext_) {
    ext_var_ = index_of(ext_->generator);
    if (ext_var_ < 0)
      throw DomainError("extension generator '" + ext_->generator +
                        "' is not a context variable");
  }
}

int VarContext::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

ContextPtr make_context(std::vector<std::string> vars) {
  return std::make_shared<VarContext>(std::move(vars));
}

ContextPtr make_context(std::vector<std::string> vars, ExtensionPtr ext) {
  return std::make_shared<VarContext>(std::move(vars), std::move(ext));
}

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  if (exps.size() > kMaxVars) throw DomainError("context too large");
  n_ = static_cast<uint8_t>(exps.size());
  size_t i = 0;
  for (unsigned e : exps) e_[i++] = static_cast<uint16_t>(e);
}

unsigned long Monomial::total_degree() const {
  unsigned long d = 0;
  for (size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_unit() const { return total_degree() == 0; }

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < n_; ++i)
    r.e_[i] = static_cast<uint16_t>(e_[i] + o.e_[i]);
  return r;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < n_; ++i)
    r.e_[i] = static_cast<uint16_t>(e_[i] - o.e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < n_; ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

int Monomial::lex_compare(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.n_; ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
  }
  return 0;
}

std::string Monomial::to_string(const VarContext& ctx) const {
  std::string s;
  for (size_t i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.var(i);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

MonomialOrder MonomialOrder::lex(size_t arity) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.arity_ = arity;
  return o;
}

MonomialOrder MonomialOrder::degrevlex(size_t arity) {
  MonomialOrder o;
  o.kind_ = Kind::DegRevLex;
  o.arity_ = arity;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::vector<int>> blocks,
                                   size_t arity) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.arity_ = arity;
  o.blocks_ = std::move(blocks);
  std::vector<bool> seen(arity, false);
  size_t total = 0;
  for (const auto& blk : o.blocks_)
    for (int v : blk) {
      if (v < 0 || static_cast<size_t>(v) >= arity || seen[v])
        throw DomainError("block order is not a partition of the context");
      seen[v] = true;
      ++total;
    }
  if (total != arity)
    throw DomainError("block order is not a partition of the context");
  return o;
}

namespace {

inline int degrevlex_cmp_subset(const Monomial& a, const Monomial& b,
                                const std::vector<int>& vars) {
  long da = 0, db = 0;
  for (int v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da < db ? -1 : 1;
  // Reverse lexicographic: the last variable with differing exponent
  // decides, with the smaller exponent winning.
  for (size_t i = vars.size(); i-- > 0;) {
    int v = vars[i];
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (size_t i = 0; i < arity_; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::DegRevLex: {
      unsigned long da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? -1 : 1;
      for (size_t i = arity_; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    case Kind::Block:
      for (const auto& blk : blocks_) {
        int c = degrevlex_cmp_subset(a, b, blk);
        if (c != 0) return c;
      }
      return 0;
  }
  return 0;
}

}  // namespace singeq
