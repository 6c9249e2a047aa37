#include "woundlab/ratfunc.hpp"

namespace woundlab {

RatFunc::RatFunc(DensePoly num, DensePoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = DensePoly::one(num_.spec());
    return;
  }
  DensePoly g = poly_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const FieldElement lead_inv = den_.leading().inverse();
  num_ = num_ * lead_inv;
  den_ = den_ * lead_inv;
}

RatFunc RatFunc::from_poly(DensePoly p) {
  RatFunc f(p.spec());
  f.num_ = std::move(p);
  return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("division by zero rational function");
  return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

RatFunc RatFunc::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r = one(spec());
  RatFunc b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

RatFunc RatFunc::frobenius_pow(long long s) const {
  long long q = 1;
  for (long long i = 0; i < s; ++i) q *= spec()->p;
  return pow(q);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  auto wrap = [](const std::string& s) {
    return (s.find('+') != std::string::npos || s.find('*') != std::string::npos ||
            s.find('^') != std::string::npos)
               ? "(" + s + ")"
               : s;
  };
  return wrap(n) + "/" + wrap(d);
}

std::optional<RatFunc> is_pth_power(const RatFunc& f) {
  auto rn = f.num().pth_root();
  if (!rn) return std::nullopt;
  auto rd = f.den().pth_root();
  if (!rd) return std::nullopt;
  return RatFunc(*rn, *rd);
}

std::optional<RatFunc> is_pth_power_iter(const RatFunc& f, int s) {
  RatFunc g = f;
  for (int i = 0; i < s; ++i) {
    auto r = is_pth_power(g);
    if (!r) return std::nullopt;
    g = *r;
  }
  return g;
}

}  // namespace woundlab
