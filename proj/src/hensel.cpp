#include "woundlab/hensel.hpp"

namespace woundlab {

LaurentSeries lift_series(const FieldTower& tower, const LaurentSeries& x) {
  if (x.spec() == tower.top()) return x;
  std::map<long, FieldElement> m;
  for (auto& [e, c] : x.coeff_map()) m.emplace(e, tower.lift(c));
  return LaurentSeries::from_coeff_map(tower.top(), m, x.precision());
}

LaurentSeries hensel_solve(FieldTower& tower, const std::vector<LaurentSeries>& a,
                           const LaurentSeries& f, long N) {
  const FieldSpec* s0 = f.spec();
  const int p = s0->p;
  if (f.precision() < N)
    throw PrecisionError("hensel_solve: input precision " + std::to_string(f.precision()) +
                         " below requested " + std::to_string(N));
  if (!f.is_zero() && f.valuation() < 0)
    throw DomainError("hensel_solve: f must lie in the ring of integers");
  for (auto& ai : a)
    if (!ai.is_zero() && ai.valuation() < 0)
      throw DomainError("hensel_solve: coefficients must lie in the ring of integers");

  // Residue equation c + sum a_i(0) c^(p^i) = f(0); always has the linear term.
  DensePoly g = DensePoly::monomial(FieldElement::one(s0), 1);
  long long pi = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    pi *= p;
    FieldElement ci = a[i].precision() > 0 ? a[i].coeff(0) : FieldElement::zero(s0);
    if (!ci.is_zero()) g = g + DensePoly::monomial(ci, static_cast<int>(pi));
  }
  FieldElement f0 = f.precision() > 0 ? f.coeff(0) : FieldElement::zero(s0);
  g = g - DensePoly::constant(f0);
  FieldElement c = tower.find_root(g);

  LaurentSeries fl = lift_series(tower, f).truncated(N);
  std::vector<LaurentSeries> al;
  for (auto& ai : a) al.push_back(lift_series(tower, ai));

  LaurentSeries v =
      c.is_zero() ? LaurentSeries::zero(tower.top()).truncated(N) : LaurentSeries::monomial(c, 0).truncated(N);
  for (long it = 0; it <= 2 * N + 4; ++it) {
    LaurentSeries next = fl;
    for (size_t i = 0; i < al.size(); ++i)
      next = next - al[i] * v.frobenius_pow(static_cast<long long>(i) + 1);
    next = next.truncated(N);
    if (next == v) {
      if (v.precision() < N)
        throw PrecisionError("hensel_solve: coefficient precision cannot reach " +
                             std::to_string(N));
      return v;
    }
    v = next;
  }
  throw DomainError("hensel_solve: iteration failed to stabilize");
}

}  // namespace woundlab
