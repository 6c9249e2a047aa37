#include "woundlab/bivar.hpp"

namespace woundlab {

void BivarPoly::insert(Key k, const FieldElement& c) {
  auto it = m_.find(k);
  if (it == m_.end()) {
    if (!c.is_zero()) m_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) m_.erase(it);
}

BivarPoly BivarPoly::monomial(const FieldElement& c, int es, int et) {
  BivarPoly r(c.spec());
  if (!c.is_zero()) r.m_.emplace(Key{es, et}, c);
  return r;
}

BivarPoly BivarPoly::from_univariate_t(const DensePoly& f) {
  BivarPoly r(f.spec());
  for (int i = 0; i <= f.degree(); ++i) r.insert({0, i}, f.coeff(i));
  return r;
}

bool BivarPoly::is_constant() const {
  return m_.empty() || (m_.size() == 1 && m_.begin()->first == Key{0, 0});
}

int BivarPoly::degree_s() const {
  int d = -1;
  for (auto& [k, c] : m_) d = std::max(d, k.first);
  return d;
}

FieldElement BivarPoly::coeff(int es, int et) const {
  auto it = m_.find({es, et});
  return it == m_.end() ? FieldElement::zero(spec_) : it->second;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  BivarPoly r = *this;
  for (auto& [k, c] : o.m_) r.insert(k, c);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [k, c] : r.m_) c = -c;
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  BivarPoly r(spec_);
  for (auto& [ka, ca] : m_)
    for (auto& [kb, cb] : o.m_)
      r.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BivarPoly BivarPoly::operator*(const FieldElement& c) const {
  BivarPoly r(spec_);
  for (auto& [k, x] : m_) r.insert(k, x * c);
  return r;
}

BivarPoly BivarPoly::pow(long long n) const {
  BivarPoly r = one(spec_);
  BivarPoly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

DensePoly BivarPoly::s_coefficient(int i) const {
  int top = -1;
  for (auto& [k, c] : m_)
    if (k.first == i) top = std::max(top, k.second);
  std::vector<FieldElement> cs(static_cast<size_t>(top) + 1, FieldElement::zero(spec_));
  for (auto& [k, c] : m_)
    if (k.first == i) cs[static_cast<size_t>(k.second)] = c;
  return DensePoly(spec_, std::move(cs));
}

std::optional<BivarPoly> BivarPoly::pth_root_iter(int k) const {
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= spec_->p;
  BivarPoly r(spec_);
  for (auto& [key, c] : m_) {
    if (key.first % q != 0 || key.second % q != 0) return std::nullopt;
    r.insert({static_cast<int>(key.first / q), static_cast<int>(key.second / q)},
             c.pth_root_iter(k));
  }
  return r;
}

std::string BivarPoly::to_string() const {
  if (m_.empty()) return "0";
  std::string out;
  // highest terms first
  for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
    auto [es, et] = it->first;
    const FieldElement& c = it->second;
    if (!out.empty()) out += "+";
    std::string cs = c.to_string();
    const bool wrap = cs.find('+') != std::string::npos;
    std::string mono;
    if (es > 0) mono += (es == 1) ? "s" : "s^" + std::to_string(es);
    if (et > 0) {
      if (!mono.empty()) mono += "*";
      mono += (et == 1) ? "t" : "t^" + std::to_string(et);
    }
    if (mono.empty()) {
      out += wrap ? "(" + cs + ")" : cs;
    } else {
      if (!c.is_one()) out += (wrap ? "(" + cs + ")" : cs) + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

// View in F_q(t)[s] for the Euclidean steps.
std::vector<RatFunc> to_ratfunc_coeffs(const BivarPoly& a) {
  std::vector<RatFunc> cs;
  const int d = a.degree_s();
  for (int i = 0; i <= d; ++i) cs.push_back(RatFunc::from_poly(a.s_coefficient(i)));
  return cs;
}

void rf_trim(std::vector<RatFunc>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<RatFunc> rf_mod(std::vector<RatFunc> a, const std::vector<RatFunc>& b) {
  rf_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    RatFunc f = a.back() / b.back();
    const size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
    rf_trim(a);
  }
  return a;
}

// Clears denominators and removes t-content, giving a primitive polynomial
// in F_q[t][s] with normalized leading coefficient.
BivarPoly primitive_from_ratfunc(const FieldSpec* sp, const std::vector<RatFunc>& cs) {
  DensePoly lcm = DensePoly::one(sp);
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    DensePoly g = poly_gcd(lcm, c.den());
    lcm = lcm / g * c.den();
  }
  BivarPoly out(sp);
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    DensePoly ci = cs[i].num() * (lcm / cs[i].den());
    out = out + BivarPoly::monomial(FieldElement::one(sp), static_cast<int>(i), 0) *
                    BivarPoly::from_univariate_t(ci);
  }
  // remove t-content
  DensePoly content = DensePoly::zero(sp);
  for (int i = 0; i <= out.degree_s(); ++i) content = poly_gcd(content, out.s_coefficient(i));
  if (content.degree() >= 1) {
    BivarPoly reduced(sp);
    for (int i = 0; i <= out.degree_s(); ++i) {
      DensePoly ci = out.s_coefficient(i) / content;
      reduced = reduced + BivarPoly::monomial(FieldElement::one(sp), i, 0) *
                              BivarPoly::from_univariate_t(ci);
    }
    out = reduced;
  }
  if (!out.is_zero()) {
    FieldElement lead = out.terms().rbegin()->second;
    out = out * lead.inverse();
  }
  return out;
}

}  // namespace

BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b) {
  const FieldSpec* sp = a.spec();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // contents in F_q[t]
  DensePoly ca = DensePoly::zero(sp), cb = DensePoly::zero(sp);
  for (int i = 0; i <= a.degree_s(); ++i) ca = poly_gcd(ca, a.s_coefficient(i));
  for (int i = 0; i <= b.degree_s(); ++i) cb = poly_gcd(cb, b.s_coefficient(i));
  DensePoly cg = poly_gcd(ca, cb);

  // primitive gcd via Euclid over F_q(t)
  std::vector<RatFunc> u = to_ratfunc_coeffs(a);
  std::vector<RatFunc> v = to_ratfunc_coeffs(b);
  rf_trim(u);
  rf_trim(v);
  while (!v.empty()) {
    auto r = rf_mod(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  BivarPoly pg = primitive_from_ratfunc(sp, u);
  return pg * BivarPoly::from_univariate_t(cg);
}

BivarPoly bivar_divexact(const BivarPoly& a, const BivarPoly& d) {
  if (d.is_zero()) throw DomainError("bivariate division by zero");
  const FieldSpec* sp = a.spec();
  if (a.is_zero()) return a;
  if (d.degree_s() == 0) {
    // divide every s-coefficient by the t-polynomial
    DensePoly dt = d.s_coefficient(0);
    BivarPoly out(sp);
    for (int i = 0; i <= a.degree_s(); ++i) {
      auto [q, r] = a.s_coefficient(i).divmod(dt);
      if (!r.is_zero()) throw DomainError("inexact bivariate division");
      out = out + BivarPoly::monomial(FieldElement::one(sp), i, 0) *
                      BivarPoly::from_univariate_t(q);
    }
    return out;
  }
  std::vector<RatFunc> u = to_ratfunc_coeffs(a);
  std::vector<RatFunc> v = to_ratfunc_coeffs(d);
  rf_trim(u);
  rf_trim(v);
  std::vector<RatFunc> q(u.size() >= v.size() ? u.size() - v.size() + 1 : 0,
                         RatFunc::zero(sp));
  while (u.size() >= v.size() && !u.empty()) {
    RatFunc f = u.back() / v.back();
    const size_t off = u.size() - v.size();
    q[off] = f;
    for (size_t i = 0; i < v.size(); ++i) u[off + i] = u[off + i] - f * v[i];
    rf_trim(u);
  }
  if (!u.empty()) throw DomainError("inexact bivariate division");
  BivarPoly out(sp);
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].is_zero()) continue;
    if (!q[i].is_polynomial()) throw DomainError("inexact bivariate division");
    out = out + BivarPoly::monomial(FieldElement::one(sp), static_cast<int>(i), 0) *
                    BivarPoly::from_univariate_t(q[i].num());
  }
  return out;
}

BivarRatFunc::BivarRatFunc(BivarPoly num, BivarPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = BivarPoly::one(num_.spec());
    return;
  }
  BivarPoly g = bivar_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = bivar_divexact(num_, g);
    den_ = bivar_divexact(den_, g);
  }
  FieldElement lead = den_.terms().rbegin()->second;
  if (!lead.is_one()) {
    FieldElement inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

BivarRatFunc BivarRatFunc::from_poly(BivarPoly p) {
  BivarRatFunc f(p.spec());
  f.num_ = std::move(p);
  return f;
}

bool BivarRatFunc::is_one() const {
  return den_ == BivarPoly::one(spec()) && num_ == BivarPoly::one(spec());
}

BivarRatFunc BivarRatFunc::operator+(const BivarRatFunc& o) const {
  return BivarRatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BivarRatFunc BivarRatFunc::operator-(const BivarRatFunc& o) const { return *this + (-o); }

BivarRatFunc BivarRatFunc::operator-() const {
  BivarRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

BivarRatFunc BivarRatFunc::operator*(const BivarRatFunc& o) const {
  return BivarRatFunc(num_ * o.num_, den_ * o.den_);
}

BivarRatFunc BivarRatFunc::operator/(const BivarRatFunc& o) const { return *this * o.inverse(); }

BivarRatFunc BivarRatFunc::inverse() const {
  if (is_zero()) throw DomainError("division by zero rational function");
  return BivarRatFunc(den_, num_);
}

BivarRatFunc BivarRatFunc::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  BivarRatFunc r = one(spec());
  BivarRatFunc b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::string BivarRatFunc::to_string() const {
  if (den_ == BivarPoly::one(spec())) return num_.to_string();
  auto wrap = [](const std::string& s) {
    return (s.find('+') != std::string::npos || s.find('*') != std::string::npos ||
            s.find('^') != std::string::npos)
               ? "(" + s + ")"
               : s;
  };
  return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
}

std::optional<BivarRatFunc> is_pth_power(const BivarRatFunc& f) {
  const int p = f.spec()->p;
  // u/v = u v^(p-1) / v^p; a polynomial is a p-th power iff all exponents are.
  BivarPoly w = f.num() * f.den().pow(p - 1);
  auto root = w.pth_root_iter(1);
  if (!root) return std::nullopt;
  return BivarRatFunc(*root, f.den());
}

std::optional<BivarRatFunc> is_pth_power_iter(const BivarRatFunc& f, int s) {
  BivarRatFunc g = f;
  for (int i = 0; i < s; ++i) {
    auto r = is_pth_power(g);
    if (!r) return std::nullopt;
    g = *r;
  }
  return g;
}

}  // namespace woundlab
