#include "singeq/poly.hpp"

#include <algorithm>
#include <cassert>

namespace singeq {

MultiPoly::MultiPoly(ContextPtr ctx, const GaussRat& c) : ctx_(std::move(ctx)) {
  if (!c.is_zero()) terms_.emplace(Monomial(ctx_->arity()), c);
}

MultiPoly MultiPoly::variable(const ContextPtr& ctx, const std::string& name) {
  int i = ctx->index_of(name);
  if (i < 0) throw DomainError("variable '" + name + "' not in context");
  Monomial m(ctx->arity());
  m[i] = 1;
  MultiPoly p(ctx);
  p.terms_.emplace(m, GaussRat(Rat(1)));
  return p;
}

MultiPoly MultiPoly::constant(const ContextPtr& ctx, const GaussRat& c) {
  return MultiPoly(ctx, c);
}

MultiPoly MultiPoly::from_terms(
    ContextPtr ctx, std::vector<std::pair<Monomial, GaussRat>> ts) {
  MultiPoly p(std::move(ctx));
  for (auto& [m, c] : ts) p.add_term(m, c);
  p.reduce_extension();
  return p;
}

void MultiPoly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  if (m.arity() != ctx_->arity())
    throw ContextMismatchError("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GaussRat MultiPoly::constant_value() const {
  if (terms_.empty()) return GaussRat();
  if (!is_constant()) throw DomainError("not a constant polynomial");
  return terms_.begin()->second;
}

GaussRat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat() : it->second;
}

long MultiPoly::degree_in(size_t var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

unsigned long MultiPoly::total_degree() const {
  unsigned long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void MultiPoly::require_same_context(const MultiPoly& a, const MultiPoly& b) {
  if (a.ctx_ == b.ctx_) return;
  if (!a.ctx_ || !b.ctx_ || *a.ctx_ != *b.ctx_)
    throw ContextMismatchError("operands live in different contexts");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_context(*this, o);
  MultiPoly r(ctx_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  r.reduce_extension();
  return r;
}

MultiPoly MultiPoly::scaled(const GaussRat& c) const {
  MultiPoly r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly acc = constant(ctx_, GaussRat(Rat(1)));
  MultiPoly b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::require_same_context(a, b);
  return a.terms_ == b.terms_;
}

void MultiPoly::reduce_extension() {
  if (!ctx_ || !ctx_->extension()) return;
  int cv = ctx_->extension_var();
  const auto& m = ctx_->extension()->minpoly;
  unsigned d = ctx_->extension()->degree();
  bool again = true;
  while (again) {
    again = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first[cv] >= d) {
        Monomial base = it->first;
        GaussRat c = it->second;
        terms_.erase(it);
        base[cv] = static_cast<uint16_t>(base[cv] - d);
        // c^d = -(m_0 + ... + m_{d-1} c^{d-1})
        for (unsigned j = 0; j < d; ++j) {
          if (m[j] == 0) continue;
          Monomial t = base;
          t[cv] = static_cast<uint16_t>(t[cv] + j);
          add_term(t, c * GaussRat(Rat(-m[j])));
        }
        again = true;
        break;
      }
    }
  }
}

MultiPoly MultiPoly::substitute(const RingMap& phi) const {
  require_same_context(*this, MultiPoly(phi.context()));
  size_t n = ctx_->arity();
  // Power cache per variable; identity variables multiply as monomials.
  std::vector<std::vector<MultiPoly>> powers(n);
  MultiPoly result(ctx_);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(ctx_, c);
    Monomial passthrough(n);
    bool have_passthrough = false;
    for (size_t v = 0; v < n; ++v) {
      if (m[v] == 0) continue;
      if (phi.is_identity_on(v)) {
        passthrough[v] = m[v];
        have_passthrough = true;
        continue;
      }
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(constant(ctx_, GaussRat(Rat(1))));
      while (pw.size() <= m[v]) pw.push_back(pw.back() * phi.image(v));
      term = term * pw[m[v]];
    }
    if (have_passthrough) {
      MultiPoly shifted(ctx_);
      for (const auto& [tm, tc] : term.terms_)
        shifted.add_term(tm * passthrough, tc);
      term = std::move(shifted);
    }
    result += term;
  }
  result.reduce_extension();
  return result;
}

MultiPoly MultiPoly::eval(
    const std::vector<std::pair<std::string, Coeff>>& point) const {
  std::vector<int> assigned(ctx_->arity(), -1);
  for (size_t k = 0; k < point.size(); ++k) {
    int i = ctx_->index_of(point[k].first);
    if (i < 0)
      throw DomainError("assigned variable '" + point[k].first +
                        "' not in context");
    assigned[i] = static_cast<int>(k);
  }
  int cv = ctx_->extension() ? ctx_->extension_var() : -1;
  MultiPoly result(ctx_);
  for (const auto& [m, c] : terms_) {
    Monomial rest(ctx_->arity());
    Coeff scale{c};
    for (size_t v = 0; v < ctx_->arity(); ++v) {
      if (m[v] == 0) continue;
      if (assigned[v] < 0) {
        rest[v] = m[v];
        continue;
      }
      scale *= point[assigned[v]].second.pow(m[v]);
    }
    // Spread an extension-valued scale over powers of the generator.
    if (scale.extension()) {
      if (cv < 0)
        throw DomainError(
            "evaluation value needs an algebraic generator absent from the "
            "context");
      const auto& comps = scale.components();
      for (size_t k = 0; k < comps.size(); ++k) {
        if (comps[k].is_zero()) continue;
        Monomial t = rest;
        t[cv] = static_cast<uint16_t>(t[cv] + k);
        result.add_term(t, comps[k]);
      }
    } else {
      result.add_term(rest, scale.gaussian());
    }
  }
  result.reduce_extension();
  return result;
}

std::vector<std::pair<Monomial, MultiPoly>> MultiPoly::coeff_extract(
    const std::vector<std::string>& main_vars) const {
  std::vector<int> idx;
  for (const auto& v : main_vars) {
    int i = ctx_->index_of(v);
    if (i < 0) throw DomainError("main variable '" + v + "' not in context");
    idx.push_back(i);
  }
  std::map<Monomial, MultiPoly, MonomialLexLess> groups;
  for (const auto& [m, c] : terms_) {
    Monomial main(ctx_->arity()), rest = m;
    for (int i : idx) {
      main[i] = m[i];
      rest[i] = 0;
    }
    auto it = groups.find(main);
    if (it == groups.end()) it = groups.emplace(main, MultiPoly(ctx_)).first;
    it->second.add_term(rest, c);
  }
  std::vector<std::pair<Monomial, MultiPoly>> out(groups.begin(), groups.end());
  // Descending lex on the main exponents, so x^4 comes before x^3*y.
  std::reverse(out.begin(), out.end());
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int v = ctx_->index_of(var);
  if (v < 0) throw DomainError("variable '" + var + "' not in context");
  MultiPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d[v] = static_cast<uint16_t>(d[v] - 1);
    r.add_term(d, c * GaussRat(Rat(static_cast<long>(m[v]))));
  }
  return r;
}

MultiPoly MultiPoly::with_context(const ContextPtr& target) const {
  std::vector<int> remap(ctx_->arity(), -1);
  for (size_t v = 0; v < ctx_->arity(); ++v)
    remap[v] = target->index_of(ctx_->var(v));
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->arity());
    for (size_t v = 0; v < ctx_->arity(); ++v) {
      if (m[v] == 0) continue;
      if (remap[v] < 0)
        throw ContextMismatchError("variable '" + ctx_->var(v) +
                                   "' missing from target context");
      t[remap[v]] = m[v];
    }
    r.add_term(t, c);
  }
  r.reduce_extension();
  return r;
}

std::pair<Monomial, GaussRat> MultiPoly::leading_term(
    const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

Rat MultiPoly::content() const {
  Int num(0), den(1);
  auto absorb = [&](const Rat& q) {
    if (q == 0) return;
    Int n = abs(q.get_num());
    Int d = q.get_den();
    num = gcd(num, n);
    den = lcm(den, d);
  };
  for (const auto& [m, c] : terms_) {
    absorb(c.re);
    absorb(c.im);
  }
  if (num == 0) return Rat(0);
  return Rat(num) / Rat(den);
}

MultiPoly MultiPoly::primitive_part() const {
  Rat c = content();
  if (c == 0) return *this;
  return scaled(GaussRat(Rat(1) / c));
}

bool MultiPoly::is_rational_poly() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

UPoly MultiPoly::to_univariate(const std::string& var) const {
  int v = ctx_->index_of(var);
  if (v < 0) throw DomainError("variable '" + var + "' not in context");
  UPoly p;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < ctx_->arity(); ++i)
      if (static_cast<int>(i) != v && m[i] != 0)
        throw DomainError("polynomial is not univariate in " + var);
    if (!c.is_real()) throw DomainError("polynomial has non-real coefficients");
    if (p.size() <= m[v]) p.resize(m[v] + 1, Rat(0));
    p[m[v]] = c.re;
  }
  return up_normalize(std::move(p));
}

MultiPoly MultiPoly::from_univariate(const ContextPtr& ctx,
                                     const std::string& var, const UPoly& p) {
  int v = ctx->index_of(var);
  if (v < 0) throw DomainError("variable '" + var + "' not in context");
  MultiPoly r(ctx);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Monomial m(ctx->arity());
    m[v] = static_cast<uint16_t>(i);
    r.add_term(m, GaussRat(p[i]));
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Canonical print order: descending lexicographic on the context.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    GaussRat c = it->second;
    std::string mono = m.is_unit() ? "" : m.to_string(*ctx_);
    std::string coef;
    bool neg = false;
    if (c.im == 0) {
      Rat re = c.re;
      if (re < 0) {
        neg = true;
        re = -re;
      }
      if (mono.empty() || re != 1) coef = rat_to_string(re);
    } else if (c.re == 0) {
      Rat im = c.im;
      if (im < 0) {
        neg = true;
        im = -im;
      }
      coef = (im == 1) ? "i" : rat_to_string(im) + "*i";
    } else {
      coef = gauss_to_string(c);  // parenthesized mixed value
    }
    std::string piece;
    if (coef.empty()) {
      piece = mono;
    } else if (mono.empty()) {
      piece = coef;
    } else {
      piece = coef + "*" + mono;
    }
    if (s.empty()) {
      s = (neg ? "-" : "") + piece;
    } else {
      s += (neg ? "-" : "+") + piece;
    }
  }
  return s;
}

RingMap::RingMap(ContextPtr ctx) : ctx_(std::move(ctx)) {
  images_.reserve(ctx_->arity());
  for (size_t i = 0; i < ctx_->arity(); ++i)
    images_.push_back(MultiPoly::variable(ctx_, ctx_->var(i)));
}

void RingMap::set_image(const std::string& var, MultiPoly img) {
  int i = ctx_->index_of(var);
  if (i < 0) throw DomainError("variable '" + var + "' not in context");
  if (!img.context() || *img.context() != *ctx_)
    throw ContextMismatchError("image lives in a different context");
  images_[i] = std::move(img);
}

bool RingMap::is_identity_on(size_t var) const {
  const MultiPoly& img = images_[var];
  if (img.term_count() != 1) return false;
  const auto& [m, c] = *img.terms().begin();
  return c.is_one() && m[var] == 1 && m.total_degree() == 1;
}

std::string RingMap::to_string() const {
  std::string s;
  for (size_t i = 0; i < ctx_->arity(); ++i) {
    if (is_identity_on(i)) continue;
    if (!s.empty()) s += ", ";
    s += ctx_->var(i) + " -> " + images_[i].to_string();
  }
  return s.empty() ? "identity" : s;
}

MultiPoly arith(const MultiPoly& f, const MultiPoly& g, ArithOp op,
                unsigned long pow_exponent) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
    case ArithOp::Pow:
      return f.pow(pow_exponent);
  }
  throw DomainError("unknown arithmetic operation");
}

}  // namespace singeq
