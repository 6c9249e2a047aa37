#pragma once

#include <map>
#include <optional>
#include <utility>

#include "woundlab/ratfunc.hpp"

namespace woundlab {

/// Sparse bivariate polynomial over F_q in the variables s, t.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (s-exponent, t-exponent)

  explicit BivarPoly(const FieldSpec* sp) : spec_(sp) {}
  static BivarPoly zero(const FieldSpec* sp) { return BivarPoly(sp); }
  static BivarPoly one(const FieldSpec* sp) {
    return monomial(FieldElement::one(sp), 0, 0);
  }
  static BivarPoly monomial(const FieldElement& c, int es, int et);
  static BivarPoly var_s(const FieldSpec* sp) { return monomial(FieldElement::one(sp), 1, 0); }
  static BivarPoly var_t(const FieldSpec* sp) { return monomial(FieldElement::one(sp), 0, 1); }
  static BivarPoly from_univariate_t(const DensePoly& f);

  const FieldSpec* spec() const { return spec_; }
  bool is_zero() const { return m_.empty(); }
  bool is_constant() const;
  const std::map<Key, FieldElement>& terms() const { return m_; }
  int degree_s() const;
  FieldElement coeff(int es, int et) const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator*(const FieldElement& c) const;
  BivarPoly pow(long long n) const;
  bool operator==(const BivarPoly& o) const { return spec_ == o.spec_ && m_ == o.m_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  /// Coefficient of s^i as a polynomial in t.
  DensePoly s_coefficient(int i) const;
  /// q-th root when all exponents are divisible by q = p^k (k iterations).
  std::optional<BivarPoly> pth_root_iter(int k) const;

  std::string to_string() const;

 private:
  void insert(Key k, const FieldElement& c);
  const FieldSpec* spec_;
  std::map<Key, FieldElement> m_;
};

BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b);
/// Exact division; throws DomainError when not divisible.
BivarPoly bivar_divexact(const BivarPoly& a, const BivarPoly& d);

/// Element of F_q(s,t) as a gcd-reduced fraction with normalized denominator
/// (leading monomial coefficient 1).
class BivarRatFunc {
 public:
  explicit BivarRatFunc(const FieldSpec* sp)
      : num_(BivarPoly::zero(sp)), den_(BivarPoly::one(sp)) {}
  BivarRatFunc(BivarPoly num, BivarPoly den);
  static BivarRatFunc zero(const FieldSpec* sp) { return BivarRatFunc(sp); }
  static BivarRatFunc one(const FieldSpec* sp) { return from_poly(BivarPoly::one(sp)); }
  static BivarRatFunc from_poly(BivarPoly p);
  static BivarRatFunc constant(const FieldElement& c) {
    return from_poly(BivarPoly::monomial(c, 0, 0));
  }
  static BivarRatFunc var_s(const FieldSpec* sp) { return from_poly(BivarPoly::var_s(sp)); }
  static BivarRatFunc var_t(const FieldSpec* sp) { return from_poly(BivarPoly::var_t(sp)); }

  const FieldSpec* spec() const { return num_.spec(); }
  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  BivarRatFunc operator+(const BivarRatFunc& o) const;
  BivarRatFunc operator-(const BivarRatFunc& o) const;
  BivarRatFunc operator-() const;
  BivarRatFunc operator*(const BivarRatFunc& o) const;
  BivarRatFunc operator/(const BivarRatFunc& o) const;
  BivarRatFunc inverse() const;
  BivarRatFunc pow(long long n) const;
  BivarRatFunc frobenius_pow(long long s) const {
    long long q = 1;
    for (long long i = 0; i < s; ++i) q *= spec()->p;
    return pow(q);
  }
  bool operator==(const BivarRatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const BivarRatFunc& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  BivarPoly num_, den_;
};

std::optional<BivarRatFunc> is_pth_power(const BivarRatFunc& f);
std::optional<BivarRatFunc> is_pth_power_iter(const BivarRatFunc& f, int s);

}  // namespace woundlab
