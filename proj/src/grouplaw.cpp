#include "woundlab/grouplaw.hpp"

namespace woundlab {

QRGroup::QRGroup(RatFunc a) : a_(std::move(a)) {
  if (a_.spec()->p != 2) throw DomainError("quasi-rational groups exist only in characteristic 2");
  if (auto w = is_pth_power(a_))
    throw DomainError("parameter a is the square of " + w->to_string() +
                      "; the group would contain the affine line");
}

std::pair<RatFunc, RatFunc> QRGroup::embed(const RatFunc& s) const {
  RatFunc den = RatFunc::one(spec()) + a_ * s * s;
  if (den.is_zero()) throw DomainError("1 + a s^2 vanished; a was a square");
  return {s / den, s * s / den};
}

RatFunc QRGroup::add(const RatFunc& s1, const RatFunc& s2) const {
  RatFunc den = RatFunc::one(spec()) + a_ * s1 * s2;
  // The parameterization covers the projective parameter line; a s1 s2 = 1
  // lands the sum on the parameter at infinity, which has no field-element
  // representative. It cannot happen for s1 = s2 when a is not a square, and
  // never for parameters with positive-valuation product.
  if (den.is_zero())
    throw DomainError("a*s1*s2 = 1: the sum is the parameter at infinity");
  return (s1 + s2) / den;
}

RatFunc QRGroup::curve_equation(const RatFunc& u, const RatFunc& v) const {
  return u * u + v + a_ * v * v;
}

}  // namespace woundlab
