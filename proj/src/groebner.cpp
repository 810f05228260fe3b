#include "singeq/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace singeq {

Ideal::Ideal(ContextPtr c, std::vector<MultiPoly> g) : ctx(std::move(c)) {
  gens.reserve(g.size());
  for (auto& p : g) {
    if (p.is_zero()) continue;
    if (*p.context() != *ctx)
      throw ContextMismatchError("generator context mismatch");
    gens.push_back(std::move(p));
  }
}

namespace {

// Internal polynomial: primitive integer coefficients, terms sorted
// descending by the active order. Fraction-free arithmetic keeps the
// coefficient growth of rational normal forms out of the inner loop.
struct GBPoly {
  std::vector<std::pair<Monomial, Int>> t;
  unsigned long sugar = 0;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const Int& lc() const { return t.front().second; }
};

struct Engine {
  const MonomialOrder& ord;
  uint64_t max_steps;
  uint64_t steps = 0;

  Engine(const MonomialOrder& o, uint64_t budget)
      : ord(o), max_steps(budget) {}

  void tick() {
    if (++steps > max_steps)
      throw BudgetExceededError("step budget exceeded (" +
                                std::to_string(max_steps) + ")");
  }

  GBPoly from_multipoly(const MultiPoly& p) const {
    // Clear denominators.
    Int den(1);
    for (const auto& [m, c] : p.terms()) {
      if (!c.is_real())
        throw DomainError("Groebner engine expects rational coefficients");
      den = lcm(den, Int(c.re.get_den()));
    }
    GBPoly g;
    g.t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
      Rat q = c.re * Rat(den);
      g.t.emplace_back(m, q.get_num());
      g.sugar = std::max(g.sugar, m.total_degree());
    }
    std::sort(g.t.begin(), g.t.end(), [this](const auto& x, const auto& y) {
      return ord.compare(x.first, y.first) > 0;
    });
    make_primitive(g);
    return g;
  }

  MultiPoly to_multipoly(const GBPoly& g, const ContextPtr& ctx) const {
    MultiPoly p(ctx);
    for (const auto& [m, c] : g.t) p.add_term(m, GaussRat(Rat(c)));
    return p;
  }

  static void make_primitive(GBPoly& f) {
    if (f.zero()) return;
    Int g(0);
    for (const auto& [m, c] : f.t) {
      g = gcd(g, c);
      if (g == 1) break;
    }
    if (sgn(f.lc()) < 0) g = -g;
    if (g != 1)
      for (auto& [m, c] : f.t) c /= g;
  }

  // rest := mul_rest * rest - mul_div * shift * div.tail, merged in order.
  // rest starts at div-relative position 0 (the cancelled lead excluded).
  void merge_subtract(std::vector<std::pair<Monomial, Int>>& rest,
                      const Int& mul_rest, const GBPoly& div,
                      const Int& mul_div, const Monomial& shift) {
    std::vector<std::pair<Monomial, Int>> out;
    out.reserve(rest.size() + div.t.size() - 1);
    size_t i = 0, j = 1;  // skip the divisor's lead, it cancels the top
    while (i < rest.size() && j < div.t.size()) {
      Monomial mj = div.t[j].first * shift;
      int c = ord.compare(rest[i].first, mj);
      if (c > 0) {
        out.emplace_back(rest[i].first, rest[i].second * mul_rest);
        ++i;
      } else if (c < 0) {
        out.emplace_back(std::move(mj), -mul_div * div.t[j].second);
        ++j;
      } else {
        Int v = rest[i].second * mul_rest - mul_div * div.t[j].second;
        if (v != 0) out.emplace_back(std::move(mj), std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i < rest.size(); ++i)
      out.emplace_back(rest[i].first, rest[i].second * mul_rest);
    for (; j < div.t.size(); ++j)
      out.emplace_back(div.t[j].first * shift, -mul_div * div.t[j].second);
    rest = std::move(out);
  }

  const GBPoly* find_divisor(const Monomial& m,
                             const std::vector<GBPoly>& divisors) const {
    for (const auto& g : divisors)
      if (!g.zero() && g.lm().divides(m)) return &g;
    return nullptr;
  }

  // Fraction-free reduction. With full_tail the result is the (primitive)
  // normal form; otherwise only the head is reduced, which is all the main
  // loop needs.
  GBPoly reduce(const GBPoly& f, const std::vector<GBPoly>& divisors,
                bool full_tail) {
    std::vector<std::pair<Monomial, Int>> done, work = f.t;
    GBPoly out;
    out.sugar = f.sugar;
    while (!work.empty()) {
      const GBPoly* div = find_divisor(work.front().first, divisors);
      if (!div) {
        if (!full_tail) break;
        done.push_back(std::move(work.front()));
        work.erase(work.begin());
        continue;
      }
      tick();
      Int g0 = gcd(work.front().second, div->lc());
      Int mul_work = div->lc() / g0;
      Int mul_div = work.front().second / g0;
      if (sgn(mul_work) < 0) {
        mul_work = -mul_work;
        mul_div = -mul_div;
      }
      Monomial shift = work.front().first.divide_by(div->lm());
      work.erase(work.begin());
      merge_subtract(work, mul_work, *div, mul_div, shift);
      if (mul_work != 1)
        for (auto& [m, c] : done) c *= mul_work;
      out.sugar = std::max(out.sugar, div->sugar + shift.total_degree());
    }
    done.insert(done.end(), std::make_move_iterator(work.begin()),
                std::make_move_iterator(work.end()));
    out.t = std::move(done);
    make_primitive(out);
    return out;
  }

  struct Pair {
    size_t i, j;
    Monomial lcm;
    unsigned long sugar;
  };

  std::vector<GBPoly> basis;
  std::vector<Pair> pairs;

  void push_pairs(size_t j) {
    const Monomial& lmj = basis[j].lm();
    std::vector<Pair> fresh;
    for (size_t i = 0; i < j; ++i) {
      if (basis[i].zero()) continue;
      Pair p{i, j, Monomial::lcm(basis[i].lm(), lmj), 0};
      p.sugar = std::max(
          basis[i].sugar + p.lcm.divide_by(basis[i].lm()).total_degree(),
          basis[j].sugar + p.lcm.divide_by(lmj).total_degree());
      fresh.push_back(std::move(p));
    }
    // Gebauer-Moeller: drop superseded old pairs.
    pairs.erase(
        std::remove_if(pairs.begin(), pairs.end(),
                       [&](const Pair& p) {
                         return lmj.divides(p.lcm) &&
                                Monomial::lcm(basis[p.i].lm(), lmj) != p.lcm &&
                                Monomial::lcm(basis[p.j].lm(), lmj) != p.lcm;
                       }),
        pairs.end());
    std::sort(fresh.begin(), fresh.end(), [&](const Pair& a, const Pair& b) {
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    std::vector<Pair> kept;
    for (const auto& p : fresh) {
      bool redundant = false;
      for (const auto& q : kept) {
        if (q.lcm.divides(p.lcm)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(p);
    }
    for (auto& p : kept) {
      if (basis[p.i].lm().coprime(basis[p.j].lm())) continue;  // product crit.
      pairs.push_back(std::move(p));
    }
  }

  GBPoly spoly(const Pair& p) {
    const GBPoly& f = basis[p.i];
    const GBPoly& g = basis[p.j];
    Monomial mf = p.lcm.divide_by(f.lm());
    Monomial mg = p.lcm.divide_by(g.lm());
    Int g0 = gcd(f.lc(), g.lc());
    Int cf = g.lc() / g0;
    Int cg = f.lc() / g0;
    GBPoly s;
    s.sugar = p.sugar;
    s.t.reserve(f.t.size() + g.t.size() - 2);
    size_t i = 1, j = 1;  // the leads cancel by construction
    while (i < f.t.size() && j < g.t.size()) {
      Monomial a = f.t[i].first * mf;
      Monomial b = g.t[j].first * mg;
      int c = ord.compare(a, b);
      if (c > 0) {
        s.t.emplace_back(std::move(a), cf * f.t[i].second);
        ++i;
      } else if (c < 0) {
        s.t.emplace_back(std::move(b), -cg * g.t[j].second);
        ++j;
      } else {
        Int v = cf * f.t[i].second - cg * g.t[j].second;
        if (v != 0) s.t.emplace_back(std::move(a), std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i < f.t.size(); ++i)
      s.t.emplace_back(f.t[i].first * mf, cf * f.t[i].second);
    for (; j < g.t.size(); ++j)
      s.t.emplace_back(g.t[j].first * mg, -cg * g.t[j].second);
    return s;
  }

  void run(const std::vector<GBPoly>& input) {
    for (const auto& f : input) {
      if (f.zero()) continue;
      GBPoly r = reduce(f, basis, /*full_tail=*/false);
      if (r.zero()) continue;
      basis.push_back(std::move(r));
      push_pairs(basis.size() - 1);
    }
    while (!pairs.empty()) {
      // Sugar strategy, ties by lcm order then indices.
      auto best = std::min_element(
          pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = ord.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
          });
      Pair p = *best;
      *best = pairs.back();
      pairs.pop_back();
      GBPoly r = reduce(spoly(p), basis, /*full_tail=*/false);
      if (r.zero()) continue;
      basis.push_back(std::move(r));
      push_pairs(basis.size() - 1);
    }
    interreduce();
  }

  void interreduce() {
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].zero()) continue;
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j || basis[j].zero()) continue;
        if (basis[j].lm().divides(basis[i].lm()) &&
            !(basis[i].lm() == basis[j].lm() && i < j)) {
          basis[i].t.clear();
          break;
        }
      }
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const GBPoly& g) { return g.zero(); }),
                basis.end());
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<GBPoly> others;
      others.reserve(basis.size() - 1);
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = reduce(basis[i], others, /*full_tail=*/true);
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const GBPoly& g) { return g.zero(); }),
                basis.end());
    std::sort(basis.begin(), basis.end(),
              [this](const GBPoly& a, const GBPoly& b) {
                return ord.compare(a.lm(), b.lm()) < 0;
              });
  }
};

// Monic rational form of a primitive integer polynomial.
MultiPoly monicize(const MultiPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  auto [lm, lc] = p.leading_term(ord);
  return p.scaled(lc.inverse());
}

}  // namespace

Ideal groebner_basis(const Ideal& I, const MonomialOrder& ord,
                     const GBBudget& budget) {
  if (ord.arity() != I.ctx->arity())
    throw ContextMismatchError("order arity mismatch");
  Engine eng(ord, budget.max_steps);
  std::vector<GBPoly> input;
  input.reserve(I.gens.size());
  for (const auto& g : I.gens) input.push_back(eng.from_multipoly(g));
  eng.run(input);
  std::vector<MultiPoly> out;
  out.reserve(eng.basis.size());
  for (const auto& g : eng.basis)
    out.push_back(monicize(eng.to_multipoly(g, I.ctx), ord));
  return Ideal(I.ctx, std::move(out));
}

MultiPoly normal_form_reduce(const MultiPoly& f, const Ideal& gb,
                             const MonomialOrder& ord, const GBBudget& budget) {
  // Exact rational division; the remainder is the unique normal form when
  // gb is a Groebner basis for ord.
  MultiPoly rem(f.context());
  MultiPoly work = f;
  uint64_t steps = 0;
  while (!work.is_zero()) {
    if (++steps > budget.max_steps)
      throw BudgetExceededError("step budget exceeded in normal form");
    auto [lm, lc] = work.leading_term(ord);
    const MultiPoly* div = nullptr;
    for (const auto& g : gb.gens) {
      if (g.leading_term(ord).first.divides(lm)) {
        div = &g;
        break;
      }
    }
    MultiPoly t(f.context());
    if (!div) {
      t.add_term(lm, lc);
      rem += t;
      work -= t;
      continue;
    }
    auto [glm, glc] = div->leading_term(ord);
    t.add_term(lm.divide_by(glm), lc * glc.inverse());
    work -= t * (*div);
  }
  return rem;
}

bool membership(const MultiPoly& f, const Ideal& gb, const MonomialOrder& ord,
                const GBBudget& budget) {
  if (f.is_zero()) return true;
  Engine eng(ord, budget.max_steps);
  std::vector<GBPoly> divisors;
  divisors.reserve(gb.gens.size());
  for (const auto& g : gb.gens) divisors.push_back(eng.from_multipoly(g));
  return eng.reduce(eng.from_multipoly(f), divisors, /*full_tail=*/true)
      .zero();
}

MonomialOrder elimination_order(const VarContext& ctx,
                                const std::vector<std::string>& drop_vars) {
  std::vector<int> drop, rest;
  for (size_t i = 0; i < ctx.arity(); ++i) {
    bool d = std::find(drop_vars.begin(), drop_vars.end(), ctx.var(i)) !=
             drop_vars.end();
    (d ? drop : rest).push_back(static_cast<int>(i));
  }
  if (drop.size() != drop_vars.size())
    throw DomainError("drop variable not in context");
  if (rest.empty()) return MonomialOrder::degrevlex(ctx.arity());
  return MonomialOrder::block({drop, rest}, ctx.arity());
}

MonomialOrder lex_order_with_priority(const VarContext& ctx,
                                      const std::vector<std::string>& first) {
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(ctx.arity(), false);
  for (const auto& name : first) {
    int i = ctx.index_of(name);
    if (i < 0) throw DomainError("priority variable not in context");
    blocks.push_back({i});
    used[i] = true;
  }
  for (size_t i = 0; i < ctx.arity(); ++i)
    if (!used[i]) blocks.push_back({static_cast<int>(i)});
  return MonomialOrder::block(std::move(blocks), ctx.arity());
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop_vars,
                const GBBudget& budget) {
  MonomialOrder ord = elimination_order(*I.ctx, drop_vars);
  Ideal gb = groebner_basis(I, ord, budget);
  std::vector<int> dropped;
  for (const auto& v : drop_vars) dropped.push_back(I.ctx->index_of(v));
  std::vector<std::string> remaining;
  for (size_t i = 0; i < I.ctx->arity(); ++i)
    if (std::find(dropped.begin(), dropped.end(), static_cast<int>(i)) ==
        dropped.end())
      remaining.push_back(I.ctx->var(i));
  ContextPtr sub = I.ctx->extension()
                       ? make_context(remaining, I.ctx->extension())
                       : make_context(remaining);
  std::vector<MultiPoly> kept;
  for (const auto& g : gb.gens) {
    bool pure = true;
    for (const auto& [m, c] : g.terms()) {
      for (int d : dropped)
        if (m[d] != 0) {
          pure = false;
          break;
        }
      if (!pure) break;
    }
    if (pure) kept.push_back(g.with_context(sub));
  }
  return Ideal(sub, std::move(kept));
}

std::optional<unsigned long> staircase_count(const Ideal& gb,
                                             const MonomialOrder& ord) {
  size_t n = gb.ctx->arity();
  std::vector<Monomial> lts;
  for (const auto& g : gb.gens) lts.push_back(g.leading_term(ord).first);
  for (const auto& m : lts)
    if (m.is_unit()) return 0;
  std::vector<long> bound(n, -1);
  for (const auto& m : lts) {
    int nz = -1;
    bool pure = true;
    for (size_t v = 0; v < n; ++v) {
      if (m[v] != 0) {
        if (nz >= 0) {
          pure = false;
          break;
        }
        nz = static_cast<int>(v);
      }
    }
    if (pure && nz >= 0)
      bound[nz] = bound[nz] < 0 ? m[nz] : std::min(bound[nz], long(m[nz]));
  }
  for (size_t v = 0; v < n; ++v)
    if (bound[v] < 0) return std::nullopt;
  unsigned long count = 0;
  Monomial cur(n);
  std::vector<long> idx(n, 0);
  while (true) {
    for (size_t v = 0; v < n; ++v) cur[v] = static_cast<uint16_t>(idx[v]);
    bool standard = true;
    for (const auto& m : lts)
      if (m.divides(cur)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    size_t v = 0;
    while (v < n) {
      if (++idx[v] < bound[v]) break;
      idx[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

namespace {

std::vector<MultiPoly> degree_monomials(const ContextPtr& ctx, unsigned N) {
  std::vector<MultiPoly> out;
  size_t n = ctx->arity();
  std::vector<unsigned> exps(n, 0);
  std::function<void(size_t, unsigned)> rec = [&](size_t v, unsigned left) {
    if (v + 1 == n) {
      exps[v] = left;
      Monomial m(n);
      for (size_t i = 0; i < n; ++i) m[i] = static_cast<uint16_t>(exps[i]);
      MultiPoly p(ctx);
      p.add_term(m, GaussRat(Rat(1)));
      out.push_back(std::move(p));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[v] = e;
      rec(v + 1, left - e);
    }
  };
  rec(0, N);
  return out;
}

}  // namespace

std::optional<unsigned long> quotient_dimension(const Ideal& I,
                                                const MonomialOrder& ord,
                                                const GBBudget& budget) {
  constexpr unsigned kMaxOrder = 64;
  std::optional<unsigned long> prev;
  for (unsigned N = 2; N <= kMaxOrder; ++N) {
    std::vector<MultiPoly> gens = I.gens;
    auto mons = degree_monomials(I.ctx, N);
    gens.insert(gens.end(), mons.begin(), mons.end());
    Ideal gb = groebner_basis(Ideal(I.ctx, std::move(gens)), ord, budget);
    auto c = staircase_count(gb, ord);
    if (!c) return std::nullopt;
    if (prev && *prev == *c) return c;
    prev = c;
  }
  return std::nullopt;
}

}  // namespace singeq
