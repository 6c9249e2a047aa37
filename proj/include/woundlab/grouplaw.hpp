#pragma once

#include "woundlab/ratfunc.hpp"

namespace woundlab {

/// The quasi-rational group u^2 + v + a v^2 = 0 over F_q(t), char 2, with a
/// not a square. Points are stored by the parameter s of the rational
/// parameterization; 0 is the identity.
class QRGroup {
 public:
  explicit QRGroup(RatFunc a);

  const RatFunc& a() const { return a_; }
  const FieldSpec* spec() const { return a_.spec(); }

  /// (u, v) = (s/(1 + a s^2), s^2/(1 + a s^2)); satisfies u^2 + v + a v^2 = 0.
  std::pair<RatFunc, RatFunc> embed(const RatFunc& s) const;

  /// s1 + s2 over 1 + a s1 s2. Identity 0; every element is its own inverse.
  RatFunc add(const RatFunc& s1, const RatFunc& s2) const;

  /// Value of the defining polynomial at (u, v); zero on embedded points.
  RatFunc curve_equation(const RatFunc& u, const RatFunc& v) const;

 private:
  RatFunc a_;
};

}  // namespace woundlab
