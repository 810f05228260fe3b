#include "singeq/coeff.hpp"

#include <algorithm>
#include <cassert>

#include "singeq/upoly.hpp"

namespace singeq {

ExtensionPtr make_extension(const std::string& generator,
                            std::vector<Rat> poly, const Rat& lo,
                            const Rat& hi) {
  poly = up_normalize(std::move(poly));
  if (up_degree(poly) < 1)
    throw DomainError("extension minimal polynomial must be nonconstant");
  poly = up_monic(poly);
  if (lo < hi) {
    if (up_eval(poly, lo) == 0 || up_eval(poly, hi) == 0)
      throw DomainError("extension interval endpoint is a root");
    if (sturm_count(poly, Endpoint::at(lo), Endpoint::at(hi)) != 1)
      throw DomainError("extension interval does not isolate one root");
  } else if (lo == hi) {
    if (up_eval(poly, lo) != 0)
      throw DomainError("extension point interval is not a root");
  } else {
    throw DomainError("empty extension interval");
  }
  auto spec = std::make_shared<ExtensionSpec>();
  spec->generator = generator;
  spec->minpoly = std::move(poly);
  spec->lo = lo;
  spec->hi = hi;
  return spec;
}

Coeff::Coeff(ExtensionPtr ext, std::vector<GaussRat> comps)
    : ext_(std::move(ext)), comps_(std::move(comps)) {
  if (!ext_) throw DomainError("null extension");
  comps_.resize(ext_->degree());
  reduce();
}

Coeff Coeff::generator(ExtensionPtr ext) {
  if (!ext || ext->degree() < 1) throw DomainError("bad extension");
  std::vector<GaussRat> v(ext->degree());
  if (ext->degree() == 1) {
    // Degree-1 extension: c is the rational root itself.
    v[0] = GaussRat(Rat(-ext->minpoly[0]));
  } else {
    v[1] = GaussRat(Rat(1));
  }
  return Coeff(std::move(ext), std::move(v));
}

bool Coeff::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const GaussRat& g) { return g.is_zero(); });
}

bool Coeff::is_gaussian() const {
  for (size_t i = 1; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return false;
  return true;
}

bool Coeff::is_rational() const { return is_gaussian() && comps_[0].is_real(); }

bool Coeff::is_real() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const GaussRat& g) { return g.is_real(); });
}

const Rat& Coeff::rational() const {
  if (!is_rational()) throw DomainError("not a rational value");
  return comps_[0].re;
}

const GaussRat& Coeff::gaussian() const {
  if (!is_gaussian()) throw DomainError("not a Gaussian rational value");
  return comps_[0];
}

void Coeff::promote(const ExtensionPtr& ext) {
  if (ext_ == ext) return;
  if (!ext_) {
    ext_ = ext;
    comps_.resize(ext->degree());
    return;
  }
  throw DomainError("mixing distinct algebraic extensions");
}

void Coeff::check_compatible(const Coeff& a, const Coeff& b) {
  if (a.ext_ && b.ext_ && a.ext_ != b.ext_ &&
      a.ext_->minpoly != b.ext_->minpoly)
    throw DomainError("mixing distinct algebraic extensions");
}

void Coeff::reduce() {
  if (!ext_) return;
  unsigned d = ext_->degree();
  while (comps_.size() > d) {
    GaussRat top = comps_.back();
    comps_.pop_back();
    if (top.is_zero()) continue;
    // c^d = -(m_0 + m_1 c + ... + m_{d-1} c^{d-1})
    size_t k = comps_.size() - d;
    for (unsigned j = 0; j < d; ++j)
      comps_[k + j] -= top * GaussRat(ext_->minpoly[j]);
  }
  comps_.resize(d);
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& g : r.comps_) g = -g;
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  check_compatible(*this, o);
  if (o.ext_ && !ext_) promote(o.ext_);
  for (size_t i = 0; i < o.comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  check_compatible(*this, o);
  if (o.ext_ && !ext_) promote(o.ext_);
  for (size_t i = 0; i < o.comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  check_compatible(*this, o);
  if (o.ext_ && !ext_) promote(o.ext_);
  std::vector<GaussRat> prod(comps_.size() + o.comps_.size() - 1);
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    for (size_t j = 0; j < o.comps_.size(); ++j)
      prod[i + j] += comps_[i] * o.comps_[j];
  }
  comps_ = std::move(prod);
  reduce();
  return *this;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!ext_ || is_gaussian()) {
    Coeff r = *this;
    GaussRat inv = comps_[0].inverse();
    r.comps_.assign(r.comps_.size(), GaussRat());
    r.comps_[0] = inv;
    return r;
  }
  // Extended Euclid in Q(i)[c] against the minimal polynomial.
  using GPoly = std::vector<GaussRat>;
  auto norm = [](GPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
  };
  auto divrem = [&](const GPoly& a, const GPoly& b) {
    GPoly r = a, q;
    if (b.empty()) throw DomainError("zero divisor in extension");
    if (r.size() >= b.size()) {
      q.assign(r.size() - b.size() + 1, GaussRat());
      GaussRat lead_inv = b.back().inverse();
      for (size_t i = r.size(); i-- >= b.size();) {
        if (!r[i].is_zero()) {
          GaussRat c = r[i] * lead_inv;
          size_t off = i - b.size() + 1;
          q[off] = c;
          for (size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
        }
        if (i + 1 == b.size()) break;
      }
    }
    return std::make_pair(norm(std::move(q)), norm(std::move(r)));
  };
  auto gmul = [&](const GPoly& a, const GPoly& b) {
    if (a.empty() || b.empty()) return GPoly{};
    GPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return norm(std::move(r));
  };
  auto gsub = [&](const GPoly& a, const GPoly& b) {
    GPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return norm(std::move(r));
  };
  GPoly m(ext_->minpoly.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = GaussRat(ext_->minpoly[i]);
  GPoly r0 = m, r1 = norm(comps_);
  GPoly s0 = {}, s1 = {GaussRat(Rat(1))};
  while (r1.size() > 1) {
    auto [q, r2] = divrem(r0, r1);
    GPoly s2 = gsub(s0, gmul(q, s1));
    r0 = std::move(r1);
    r1 = norm(std::move(r2));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty())
    throw DomainError("value is a zero divisor in the extension");
  // r1 is a unit (degree 0): inverse = s1 / r1[0].
  GaussRat u = r1[0].inverse();
  std::vector<GaussRat> inv(ext_->degree());
  for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] * u;
  Coeff res;
  res.ext_ = ext_;
  res.comps_ = std::move(inv);
  res.reduce();
  return res;
}

bool operator==(const Coeff& a, const Coeff& b) {
  Coeff d = a;
  d -= b;
  return d.is_zero();
}

Coeff Coeff::pow(unsigned long e) const {
  Coeff acc(Rat(1)), b = *this;
  while (e) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return acc;
}

int Coeff::sign_real() const {
  if (!is_real()) throw DomainError("sign of a non-real value");
  if (!ext_ || is_gaussian()) return sign(comps_[0].re);
  UPoly v;
  v.reserve(comps_.size());
  for (const auto& g : comps_) v.push_back(g.re);
  v = up_normalize(std::move(v));
  if (v.empty()) return 0;
  // v(c) = 0 with deg v < deg m would contradict minimality, so the value is
  // nonzero and interval refinement of c decides the sign.
  Rat lo = ext_->lo, hi = ext_->hi;
  UPoly m = ext_->minpoly;
  for (int round = 0; round < 4096; ++round) {
    auto iv = up_eval_interval(v, lo, hi);
    if (iv.first > 0) return 1;
    if (iv.second < 0) return -1;
    auto r = refine_root(m, lo, hi, (hi - lo) / 16);
    lo = r.first;
    hi = r.second;
  }
  throw Error("extension sign refinement did not converge");
}

std::string Coeff::to_decimal(unsigned digits) const {
  if (!is_real()) throw DomainError("decimal of a non-real value");
  if (!ext_ || is_gaussian()) {
    AlgebraicReal r{comps_[0].re};
    return r.to_decimal(digits);
  }
  UPoly v;
  for (const auto& g : comps_) v.push_back(g.re);
  v = up_normalize(std::move(v));
  Rat lo = ext_->lo, hi = ext_->hi;
  Rat w = 1;
  for (unsigned i = 0; i < digits + 4; ++i) w /= 10;
  auto r = refine_root(ext_->minpoly, lo, hi, w);
  auto iv = up_eval_interval(v, r.first, r.second);
  AlgebraicReal approx{Rat((iv.first + iv.second) / 2)};
  return approx.to_decimal(digits);
}

std::string Coeff::to_string() const {
  if (!ext_ || is_gaussian()) return gauss_to_string(comps_[0]);
  std::string s;
  const std::string& c = ext_->generator;
  for (size_t k = 0; k < comps_.size(); ++k) {
    if (comps_[k].is_zero()) continue;
    std::string part = gauss_to_string(comps_[k]);
    std::string mono;
    if (k >= 1) {
      mono = c;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    std::string piece;
    if (mono.empty()) {
      piece = part;
    } else if (part == "1") {
      piece = mono;
    } else if (part == "-1") {
      piece = "-" + mono;
    } else {
      piece = part + "*" + mono;
    }
    if (s.empty()) {
      s = piece;
    } else {
      s += (piece[0] == '-') ? piece : "+" + piece;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace singeq
