#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "woundlab/bivar.hpp"

namespace woundlab {

/// Decomposition over the q-th power subfield, q = p^n: writes f as
/// sum over basis monomials m_I of (g_I)^q * m_I and returns the g_I.
/// For F_q0(t) the basis is 1, t, ..., t^(q-1) (q components); for F_q0(s,t)
/// it is s^i t^j with 0 <= i, j < q (q*q components, index i*q + j).
std::vector<RatFunc> q_basis_components(const RatFunc& f, int n);
std::vector<BivarRatFunc> q_basis_components(const BivarRatFunc& f, int n);

/// Solves b = a*alpha^2 + beta^2 over a field of characteristic 2 with a not
/// a square, by comparing p-basis components. Returns (alpha, beta) or
/// nullopt when b lies outside F^2 + F^2*a.
std::optional<std::pair<RatFunc, RatFunc>> membership_F2_plus_F2a(const RatFunc& b,
                                                                  const RatFunc& a);
std::optional<std::pair<BivarRatFunc, BivarRatFunc>> membership_F2_plus_F2a(
    const BivarRatFunc& b, const BivarRatFunc& a);

/// dim over F^q of the span of the monomials prod a_i^(e_i), 0 <= e_i < q,
/// q = p^n. This equals [F(a_1^(1/q), ..., a_m^(1/q)) : F], the degree of the
/// splitting extension.
template <class K>
long q_span_dimension(const std::vector<K>& elems, int n) {
  if (elems.empty()) return 1;
  const auto* spec = elems.front().spec();
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= spec->p;
  long long monomial_count = 1;
  for (size_t i = 0; i < elems.size(); ++i) {
    monomial_count *= q;
    if (monomial_count > 4096) throw DomainError("q-span too large");
  }
  // Gaussian elimination over K on component vectors.
  std::vector<std::vector<K>> basis;
  auto reduce_and_add = [&](std::vector<K> vec) {
    for (auto& row : basis) {
      size_t piv = 0;
      while (piv < row.size() && row[piv].is_zero()) ++piv;
      if (piv < vec.size() && !vec[piv].is_zero()) {
        K f = vec[piv] / row[piv];
        for (size_t i = 0; i < vec.size(); ++i) vec[i] = vec[i] - f * row[i];
      }
    }
    for (auto& x : vec)
      if (!x.is_zero()) {
        basis.push_back(std::move(vec));
        return;
      }
  };
  for (long long code = 0; code < monomial_count; ++code) {
    K mono = K::one(spec);
    long long c = code;
    for (auto& a : elems) {
      long long e = c % q;
      c /= q;
      if (e > 0) mono = mono * a.pow(e);
    }
    reduce_and_add(q_basis_components(mono, n));
  }
  return static_cast<long>(basis.size());
}

}  // namespace woundlab
