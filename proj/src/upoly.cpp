#include "singeq/upoly.hpp"

#include <algorithm>
#include <cassert>

namespace singeq {

UPoly up_normalize(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UPoly up_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return up_normalize(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return up_normalize(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return up_normalize(std::move(r));
}

UPoly up_scale(const UPoly& a, const Rat& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

UPoly up_neg(const UPoly& a) { return up_scale(a, Rat(-1)); }

std::pair<UPoly, UPoly> up_divrem(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw DomainError("univariate division by zero");
  UPoly r = a;
  if (r.size() < b.size()) return {{}, up_normalize(std::move(r))};
  UPoly q(r.size() - b.size() + 1, Rat(0));
  const Rat& lead = b.back();
  for (size_t i = r.size(); i-- >= b.size();) {
    if (r[i] != 0) {
      Rat c = r[i] / lead;
      size_t off = i - b.size() + 1;
      q[off] = c;
      for (size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
    }
    if (i + 1 == b.size()) break;
  }
  return {up_normalize(std::move(q)), up_normalize(std::move(r))};
}

UPoly up_derivative(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * Rat(static_cast<long>(i));
  return up_normalize(std::move(r));
}

UPoly up_monic(const UPoly& a) {
  if (a.empty()) return {};
  return up_scale(a, Rat(1) / a.back());
}

UPoly up_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.empty()) {
    UPoly r = up_divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return up_monic(x);
}

UPoly up_squarefree_part(const UPoly& a) {
  if (a.empty()) throw DomainError("squarefree part of zero polynomial");
  if (a.size() <= 2) return up_monic(a);
  UPoly g = up_gcd(a, up_derivative(a));
  return up_monic(up_divrem(a, g).first);
}

UPoly up_compose_neg(const UPoly& a) {
  UPoly r = a;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

Rat up_eval(const UPoly& a, const Rat& x) {
  Rat acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

std::pair<Rat, Rat> up_eval_interval(const UPoly& a, const Rat& lo,
                                     const Rat& hi) {
  Rat rlo(0), rhi(0);
  for (size_t i = a.size(); i-- > 0;) {
    Rat c1 = rlo * lo, c2 = rlo * hi, c3 = rhi * lo, c4 = rhi * hi;
    Rat nlo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat nhi = std::max(std::max(c1, c2), std::max(c3, c4));
    rlo = nlo + a[i];
    rhi = nhi + a[i];
  }
  return {rlo, rhi};
}

int up_degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

std::string up_to_string(const UPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    Rat c = a[i];
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? "-" : "+";
      if (c < 0) c = -c;
    }
    if (i == 0) {
      s += rat_to_string(c);
    } else {
      if (c != 1) s += rat_to_string(c) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  chain.push_back(up_squarefree_part(p));
  if (up_degree(chain[0]) == 0) return chain;
  chain.push_back(up_derivative(chain[0]));
  while (!chain.back().empty() && up_degree(chain.back()) > 0) {
    UPoly r = up_divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(up_neg(r));
  }
  return chain;
}

int sign_at_endpoint(const UPoly& p, const Endpoint& e) {
  if (p.empty()) return 0;
  switch (e.kind) {
    case Endpoint::Finite:
      return sign(up_eval(p, e.value));
    case Endpoint::PosInf:
      return sign(p.back());
    case Endpoint::NegInf:
      return (up_degree(p) % 2 == 0) ? sign(p.back()) : -sign(p.back());
  }
  return 0;
}

unsigned sign_variations(const std::vector<UPoly>& chain, const Endpoint& e) {
  unsigned v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at_endpoint(p, e);
    if (s != 0) {
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
  }
  return v;
}

}  // namespace

unsigned sturm_count(const UPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.empty()) throw DomainError("sturm_count of zero polynomial");
  if (up_degree(p) == 0) return 0;
  auto chain = sturm_chain(p);
  unsigned vlo = sign_variations(chain, lo);
  unsigned vhi = sign_variations(chain, hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

unsigned sturm_count_all(const UPoly& p) {
  return sturm_count(p, Endpoint::neg_inf(), Endpoint::pos_inf());
}

namespace {

// Cauchy bound: all real roots lie in [-B, B].
Rat root_bound(const UPoly& p) {
  Rat b(0);
  const Rat& lead = p.back();
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rat t = rat_abs(p[i] / lead);
    if (t > b) b = t;
  }
  return b + 1;
}

// Roots of sf in (lo, hi], where lo is never a root.
void isolate_rec(const UPoly& sf, const std::vector<UPoly>& chain,
                 const Rat& lo, const Rat& hi,
                 std::vector<std::pair<Rat, Rat>>& out) {
  unsigned vlo = sign_variations(chain, Endpoint::at(lo));
  unsigned vhi = sign_variations(chain, Endpoint::at(hi));
  unsigned n = vlo >= vhi ? vlo - vhi : 0;
  if (n == 0) return;
  bool hi_is_root = up_eval(sf, hi) == 0;
  if (n == 1) {
    if (hi_is_root)
      out.emplace_back(hi, hi);
    else
      out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  isolate_rec(sf, chain, lo, mid, out);
  isolate_rec(sf, chain, mid, hi, out);
}

}  // namespace

RealRootReport isolate_real_roots(const UPoly& p) {
  if (p.empty()) throw DomainError("isolate_real_roots of zero polynomial");
  RealRootReport rep;
  if (up_degree(p) == 0) return rep;
  UPoly sf = up_squarefree_part(p);
  auto chain = sturm_chain(sf);
  Rat b = root_bound(sf);
  while (up_eval(sf, -b) == 0) b += 1;
  isolate_rec(sf, chain, -b, b, rep.intervals);
  std::sort(rep.intervals.begin(), rep.intervals.end());
  rep.count = static_cast<unsigned>(rep.intervals.size());
  return rep;
}

std::pair<Rat, Rat> refine_root(const UPoly& sf, Rat lo, Rat hi,
                                const Rat& width) {
  if (lo == hi) return {lo, hi};
  int slo = sign(up_eval(sf, lo));
  if (slo == 0) return {lo, lo};
  if (sign(up_eval(sf, hi)) == 0) return {hi, hi};
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = sign(up_eval(sf, mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

AlgebraicReal::AlgebraicReal(const UPoly& p, const Rat& lo, const Rat& hi)
    : poly_(up_squarefree_part(p)), lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw DomainError("empty isolating interval");
  if (lo_ == hi_) {
    if (up_eval(poly_, lo_) != 0)
      throw DomainError("point interval is not a root");
    poly_ = {Rat(-lo_), Rat(1)};
    return;
  }
  if (up_eval(poly_, lo_) == 0 || up_eval(poly_, hi_) == 0)
    throw DomainError("isolating interval endpoint is a root");
  if (sturm_count(poly_, Endpoint::at(lo_), Endpoint::at(hi_)) != 1)
    throw DomainError("interval does not isolate one root");
  Rat mid = (lo_ + hi_) / 2;
  if (up_eval(poly_, mid) == 0) {
    lo_ = hi_ = mid;
    poly_ = {Rat(-mid), Rat(1)};
  }
}

void AlgebraicReal::refine_below(const Rat& width) const {
  if (lo_ == hi_) return;
  auto iv = refine_root(poly_, lo_, hi_, width);
  lo_ = iv.first;
  hi_ = iv.second;
}

int AlgebraicReal::sign() const {
  if (is_rational()) return singeq::sign(lo_);
  while (true) {
    if (lo_ >= 0 && hi_ > 0) {
      if (lo_ > 0) return 1;
      // lo == 0 is not a root (endpoints are never roots), so positive.
      return 1;
    }
    if (hi_ <= 0) return -1;
    if (poly_.front() == 0) {
      // X divides the defining polynomial and 0 lies strictly inside the
      // isolating interval, so the isolated root is 0 itself.
      lo_ = hi_ = 0;
      poly_ = {Rat(0), Rat(1)};
      return 0;
    }
    refine_below((hi_ - lo_) / 16);
  }
}

AlgebraicReal AlgebraicReal::negated() const {
  if (is_rational()) return AlgebraicReal(Rat(-lo_));
  AlgebraicReal r;
  r.poly_ = up_compose_neg(poly_);
  r.lo_ = -hi_;
  r.hi_ = -lo_;
  return r;
}

namespace {

// Number of roots of g in the closed interval [lo, hi], where lo <= hi.
unsigned roots_in_closed(const UPoly& g, const Rat& lo, const Rat& hi) {
  if (up_degree(g) < 1) return 0;
  unsigned n = up_eval(g, lo) == 0 ? 1 : 0;
  if (lo < hi) n += sturm_count(g, Endpoint::at(lo), Endpoint::at(hi));
  return n;
}

}  // namespace

int AlgebraicReal::compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational())
    return a.lo_ < b.lo_ ? -1 : (a.lo_ == b.lo_ ? 0 : 1);
  // Equality is exact: both numbers are the unique roots of their defining
  // polynomials inside their intervals, so they are equal iff the gcd has a
  // root inside the intersection of the intervals.
  UPoly g = up_gcd(a.poly_, b.poly_);
  if (up_degree(g) >= 1) {
    Rat lo = std::max(a.lo_, b.lo_);
    Rat hi = std::min(a.hi_, b.hi_);
    if (lo <= hi && roots_in_closed(g, lo, hi) > 0) return 0;
  }
  for (int round = 0; round < 4096; ++round) {
    if (a.hi_ < b.lo_) return -1;
    if (b.hi_ < a.lo_) return 1;
    a.refine_below((a.hi_ - a.lo_) / 16);
    b.refine_below((b.hi_ - b.lo_) / 16);
    if (up_degree(g) >= 1) {
      Rat lo = std::max(a.lo_, b.lo_);
      Rat hi = std::min(a.hi_, b.hi_);
      if (lo <= hi && roots_in_closed(g, lo, hi) > 0) return 0;
    }
  }
  throw Error("algebraic comparison did not converge");
}

int AlgebraicReal::sign_at(const UPoly& q) const {
  if (q.empty()) return 0;
  if (is_rational()) return singeq::sign(up_eval(q, lo_));
  UPoly g = up_gcd(poly_, q);
  if (up_degree(g) >= 1 && roots_in_closed(g, lo_, hi_) > 0) return 0;
  for (int round = 0; round < 4096; ++round) {
    auto iv = up_eval_interval(q, lo_, hi_);
    if (iv.first > 0) return 1;
    if (iv.second < 0) return -1;
    refine_below((hi_ - lo_) / 16);
  }
  throw Error("sign_at did not converge");
}

std::string AlgebraicReal::to_decimal(unsigned digits) const {
  Rat w = 1;
  for (unsigned i = 0; i < digits + 2; ++i) w /= 10;
  refine_below(w);
  Rat mid = (lo_ + hi_) / 2;
  bool neg = mid < 0;
  Rat m = rat_abs(mid);
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Int scaled = Int(m.get_num() * scale / m.get_den());
  Int ip = scaled / scale, fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string s = (neg ? "-" : "") + ip.get_str();
  if (digits > 0) s += "." + frac;
  return s;
}

std::string AlgebraicReal::describe(unsigned digits) const {
  if (is_rational()) return rat_to_string(lo_);
  refine_below(Rat(1, 1000000));
  return "root of " + up_to_string(poly_) + " in [" + rat_to_string(lo_) +
         ", " + rat_to_string(hi_) + "] ~ " + to_decimal(digits);
}

}  // namespace singeq
