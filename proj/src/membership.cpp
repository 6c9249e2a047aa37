#include "woundlab/membership.hpp"

namespace woundlab {

std::vector<RatFunc> q_basis_components(const RatFunc& f, int n) {
  const FieldSpec* s = f.spec();
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= s->p;
  // f = u v^(q-1) / v^q; split w = u v^(q-1) by exponent residue.
  DensePoly w = f.num() * f.den().pow(q - 1);
  std::vector<std::vector<FieldElement>> parts(static_cast<size_t>(q));
  for (int i = 0; i <= w.degree(); ++i) {
    FieldElement c = w.coeff(i);
    if (c.is_zero()) continue;
    const long long r = i % q;
    const size_t k = static_cast<size_t>(i / q);
    auto& vec = parts[static_cast<size_t>(r)];
    if (vec.size() <= k) vec.resize(k + 1, FieldElement::zero(s));
    vec[k] = c.pth_root_iter(n);
  }
  std::vector<RatFunc> out;
  RatFunc den = RatFunc::from_poly(f.den());
  for (auto& vec : parts)
    out.push_back(RatFunc::from_poly(DensePoly(s, vec)) / den);
  return out;
}

std::vector<BivarRatFunc> q_basis_components(const BivarRatFunc& f, int n) {
  const FieldSpec* s = f.spec();
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= s->p;
  BivarPoly w = f.num() * f.den().pow(q - 1);
  std::vector<BivarPoly> parts(static_cast<size_t>(q * q), BivarPoly::zero(s));
  for (auto& [key, c] : w.terms()) {
    const long long ri = key.first % q, rj = key.second % q;
    parts[static_cast<size_t>(ri * q + rj)] =
        parts[static_cast<size_t>(ri * q + rj)] +
        BivarPoly::monomial(c.pth_root_iter(n), static_cast<int>(key.first / q),
                            static_cast<int>(key.second / q));
  }
  std::vector<BivarRatFunc> out;
  BivarRatFunc den = BivarRatFunc::from_poly(f.den());
  for (auto& part : parts)
    out.push_back(BivarRatFunc::from_poly(part) / den);
  return out;
}

namespace {

template <class K>
std::optional<std::pair<K, K>> membership_impl(const K& b, const K& a) {
  if (a.spec()->p != 2) throw DomainError("membership test requires characteristic 2");
  auto ac = q_basis_components(a, 1);
  auto bc = q_basis_components(b, 1);
  // pivot: a nonzero component of a away from the 1-component
  size_t pivot = 0;
  for (size_t i = 1; i < ac.size(); ++i)
    if (!ac[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == 0) throw DomainError("membership test requires a non-square a");
  K alpha = bc[pivot] / ac[pivot];
  for (size_t i = 1; i < ac.size(); ++i)
    if (!(bc[i] == ac[i] * alpha)) return std::nullopt;
  K beta = bc[0] + ac[0] * alpha;
  // b = a alpha^2 + beta^2 holds by construction; assert it anyway.
  if (!(b == a * alpha.pow(2) + beta.pow(2)))
    throw DomainError("membership decomposition failed consistency check");
  return std::make_pair(alpha, beta);
}

}  // namespace

std::optional<std::pair<RatFunc, RatFunc>> membership_F2_plus_F2a(const RatFunc& b,
                                                                  const RatFunc& a) {
  return membership_impl(b, a);
}

std::optional<std::pair<BivarRatFunc, BivarRatFunc>> membership_F2_plus_F2a(
    const BivarRatFunc& b, const BivarRatFunc& a) {
  return membership_impl(b, a);
}

}  // namespace woundlab
