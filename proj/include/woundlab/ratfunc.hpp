#pragma once

#include <optional>

#include "woundlab/poly.hpp"

namespace woundlab {

/// Element of F_q(t): reduced fraction with monic denominator.
class RatFunc {
 public:
  explicit RatFunc(const FieldSpec* s)
      : num_(DensePoly::zero(s)), den_(DensePoly::one(s)) {}
  RatFunc(DensePoly num, DensePoly den);
  static RatFunc zero(const FieldSpec* s) { return RatFunc(s); }
  static RatFunc one(const FieldSpec* s) { return from_poly(DensePoly::one(s)); }
  static RatFunc from_poly(DensePoly p);
  static RatFunc constant(const FieldElement& c) { return from_poly(DensePoly::constant(c)); }
  static RatFunc variable(const FieldSpec* s) { return from_poly(DensePoly::variable(s)); }

  const FieldSpec* spec() const { return num_.spec(); }
  const DensePoly& num() const { return num_; }
  const DensePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc pow(long long n) const;
  /// this^(p^s) via Frobenius (coefficientwise power, exponents scaled).
  RatFunc frobenius_pow(long long s) const;

  std::string to_string() const;

 private:
  DensePoly num_, den_;
};

/// g with g^p = f, when f is a p-th power in F_q(t). Over the reduced form
/// u/v this holds iff u and v are separately p-th powers in F_q[t].
std::optional<RatFunc> is_pth_power(const RatFunc& f);
/// p^s-th root, by iteration.
std::optional<RatFunc> is_pth_power_iter(const RatFunc& f, int s);

}  // namespace woundlab
