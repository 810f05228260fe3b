#include "singeq/grading.hpp"

#include <algorithm>
#include <set>

namespace singeq {

unsigned long wdeg(const Monomial& m, const PiecewiseWeight& w) {
  return w.degree_of(m);
}

std::optional<unsigned long> wdeg(const MultiPoly& f,
                                  const PiecewiseWeight& w) {
  if (f.is_zero()) return std::nullopt;
  std::optional<unsigned long> d;
  for (const auto& [m, c] : f.terms()) {
    unsigned long t = w.degree_of(m);
    if (!d || t < *d) d = t;
  }
  return d;
}

MultiPoly weighted_jet(const MultiPoly& f, const PiecewiseWeight& w,
                       unsigned long j) {
  MultiPoly r(f.context());
  for (const auto& [m, c] : f.terms())
    if (w.degree_of(m) <= j) r.add_term(m, c);
  return r;
}

std::optional<unsigned long> is_quasihomogeneous(const MultiPoly& f,
                                                 const PiecewiseWeight& w) {
  if (f.is_zero()) throw DomainError("quasihomogeneity of zero polynomial");
  std::optional<unsigned long> d;
  for (const auto& [m, c] : f.terms()) {
    unsigned long t = w.degree_of(m);
    if (!d) {
      d = t;
    } else if (*d != t) {
      return std::nullopt;
    }
  }
  return d;
}

RingMap map_weighted_jet(const RingMap& phi, const PiecewiseWeight& w,
                         unsigned long j) {
  RingMap r(phi.context());
  const auto& ctx = phi.context();
  for (size_t v = 0; v < w.members.front().degrees.size(); ++v) {
    Monomial xv(ctx->arity());
    xv[v] = 1;
    unsigned long cutoff = w.degree_of(xv) + j;
    r.set_image(ctx->var(v), weighted_jet(phi.image(v), w, cutoff));
  }
  return r;
}

bool in_higher_filtration(const MultiPoly& f, const PiecewiseWeight& w,
                          unsigned long d) {
  for (const auto& [m, c] : f.terms())
    if (w.degree_of(m) <= d) return false;
  return true;
}

MultiPoly newton_principal_part(const MultiPoly& f) {
  if (f.is_zero())
    throw DomainError("principal part of zero polynomial");
  if (f.context()->arity() < 2)
    throw DomainError("principal part needs two main variables");
  // Support in the (x, y)-exponents; coefficients in the remaining
  // variables ride along.
  std::set<std::pair<unsigned, unsigned>> support;
  for (const auto& [m, c] : f.terms()) support.insert({m[0], m[1]});

  std::set<std::pair<unsigned, unsigned>> keep;
  // A point is on the Newton polygon's compact boundary iff some weight
  // vector with strictly positive entries attains its minimum there. Every
  // such face normal arises from a pair of support points with one strictly
  // down-right of the other; the two extreme vertices are always kept.
  auto argmin = [&](long w1, long w2) {
    long best = 0;
    bool first = true;
    std::vector<std::pair<unsigned, unsigned>> at;
    for (const auto& p : support) {
      long val = w1 * static_cast<long>(p.first) +
                 w2 * static_cast<long>(p.second);
      if (first || val < best) {
        best = val;
        at.assign(1, p);
        first = false;
      } else if (val == best) {
        at.push_back(p);
      }
    }
    return at;
  };
  for (const auto& p : support) {
    for (const auto& q : support) {
      if (!(q.first > p.first && q.second < p.second)) continue;
      long w1 = static_cast<long>(p.second) - q.second;
      long w2 = static_cast<long>(q.first) - p.first;
      auto face = argmin(w1, w2);
      bool has_p = std::find(face.begin(), face.end(), p) != face.end();
      bool has_q = std::find(face.begin(), face.end(), q) != face.end();
      if (has_p && has_q)
        for (const auto& r : face) keep.insert(r);
    }
  }
  // Extreme vertices (lexicographic minima by (x, y) and by (y, x)).
  auto vx = *std::min_element(support.begin(), support.end());
  auto vy = *std::min_element(
      support.begin(), support.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.second, a.first) <
               std::make_pair(b.second, b.first);
      });
  keep.insert(vx);
  keep.insert(vy);

  MultiPoly r(f.context());
  for (const auto& [m, c] : f.terms())
    if (keep.count({m[0], m[1]})) r.add_term(m, c);
  return r;
}

}  // namespace singeq
