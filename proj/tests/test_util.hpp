#pragma once

#include <random>

#include "woundlab/bivar.hpp"
#include "woundlab/laurent.hpp"
#include "woundlab/ratfunc.hpp"

namespace woundlab::testutil {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eedULL);
  return g;
}

inline long rand_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

inline FieldElement random_element(const FieldSpec* s) {
  auto elems = all_elements(s);
  return elems[static_cast<size_t>(rand_int(0, static_cast<long>(elems.size()) - 1))];
}

inline FieldElement random_nonzero(const FieldSpec* s) {
  FieldElement x = random_element(s);
  while (x.is_zero()) x = random_element(s);
  return x;
}

inline DensePoly random_poly(const FieldSpec* s, int max_deg) {
  std::vector<FieldElement> c;
  const int d = static_cast<int>(rand_int(0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(random_element(s));
  DensePoly f(s, std::move(c));
  if (f.is_zero()) f = DensePoly::constant(FieldElement::one(s));
  return f;
}

inline RatFunc random_ratfunc(const FieldSpec* s, int max_deg) {
  return RatFunc(random_poly(s, max_deg), random_poly(s, max_deg));
}

inline BivarPoly random_bivar_poly(const FieldSpec* s, int max_deg) {
  BivarPoly f(s);
  const int terms = static_cast<int>(rand_int(1, 5));
  for (int i = 0; i < terms; ++i)
    f = f + BivarPoly::monomial(random_element(s), static_cast<int>(rand_int(0, max_deg)),
                                static_cast<int>(rand_int(0, max_deg)));
  if (f.is_zero()) f = BivarPoly::one(s);
  return f;
}

/// Exact Laurent polynomial with support in [lo, hi].
inline LaurentSeries random_laurent_poly(const FieldSpec* s, long lo, long hi) {
  std::map<long, FieldElement> m;
  for (long e = lo; e <= hi; ++e) {
    FieldElement c = random_element(s);
    if (!c.is_zero()) m.emplace(e, c);
  }
  return LaurentSeries::from_coeff_map(s, m);
}

}  // namespace woundlab::testutil
