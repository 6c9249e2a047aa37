#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "woundlab/field.hpp"

namespace woundlab {

/// Dense univariate polynomial over F_q. Coefficient vector carries no
/// trailing zeros; the zero polynomial has an empty vector and degree -1.
class DensePoly {
 public:
  explicit DensePoly(const FieldSpec* s) : spec_(s) {}
  DensePoly(const FieldSpec* s, std::vector<FieldElement> coeffs);
  static DensePoly zero(const FieldSpec* s) { return DensePoly(s); }
  static DensePoly one(const FieldSpec* s) { return constant(FieldElement::one(s)); }
  static DensePoly constant(const FieldElement& c);
  static DensePoly monomial(const FieldElement& c, int deg);
  /// The variable t.
  static DensePoly variable(const FieldSpec* s) {
    return monomial(FieldElement::one(s), 1);
  }

  const FieldSpec* spec() const { return spec_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return degree() == 0 && c_[0].is_one(); }
  FieldElement coeff(int i) const;
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement leading() const;

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;
  DensePoly operator-() const;
  DensePoly operator*(const DensePoly& o) const;
  DensePoly operator*(const FieldElement& c) const;
  bool operator==(const DensePoly& o) const;
  bool operator!=(const DensePoly& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& d) const;
  DensePoly operator/(const DensePoly& d) const { return divmod(d).first; }
  DensePoly operator%(const DensePoly& d) const { return divmod(d).second; }

  DensePoly monic() const;
  DensePoly derivative() const;
  DensePoly pow(long long n) const;
  DensePoly powmod(long long n, const DensePoly& m) const;
  FieldElement evaluate(const FieldElement& x) const;
  DensePoly substitute(const DensePoly& x) const;
  /// Frobenius on coefficients: applies c -> c^(p^s) to every coefficient.
  DensePoly coeff_frobenius(long long s) const;

  /// g with g^p = this, if the polynomial is a p-th power.
  std::optional<DensePoly> pth_root() const;

  std::string to_string() const;  // in the variable "t"

 private:
  void trim();
  const FieldSpec* spec_;
  std::vector<FieldElement> c_;
};

/// Monic gcd.
DensePoly poly_gcd(DensePoly a, DensePoly b);

/// Squarefree-distinct-degree-equal-degree factorization into monic
/// irreducibles with multiplicities; the leading coefficient is returned
/// separately. Deterministically seeded.
struct Factorization {
  FieldElement unit;
  std::vector<std::pair<DensePoly, int>> factors;  // (monic irreducible, multiplicity)
};
Factorization factor(const DensePoly& f);

bool is_irreducible(const DensePoly& f);

/// Roots in the coefficient field, with multiplicity collapsed.
std::vector<FieldElement> poly_roots(const DensePoly& f);

}  // namespace woundlab
