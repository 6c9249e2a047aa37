#pragma once

#include <optional>
#include <string>
#include <vector>

#include "woundlab/laurent.hpp"
#include "woundlab/ratfunc.hpp"

namespace woundlab {

/// Additive polynomial sum_i sum_j c_j^(i) x_i^(p^j) over a coefficient
/// field K (RatFunc, LaurentSeries or BivarRatFunc). coeffs[i][j] is c_j^(i);
/// each variable's list has a nonzero top entry.
template <class K>
struct PPolynomial {
  int p;
  std::vector<std::vector<K>> coeffs;

  int num_vars() const { return static_cast<int>(coeffs.size()); }
  int top_exponent(int var) const { return static_cast<int>(coeffs[static_cast<size_t>(var)].size()) - 1; }

  void trim() {
    for (auto& var : coeffs)
      while (!var.empty() && var.back().is_zero()) var.pop_back();
  }

  K evaluate(const std::vector<K>& x) const {
    if (static_cast<int>(x.size()) != num_vars()) throw DomainError("arity mismatch");
    K acc = K::zero(x.front().spec());
    for (size_t i = 0; i < coeffs.size(); ++i)
      for (size_t j = 0; j < coeffs[i].size(); ++j) {
        const K& c = coeffs[i][j];
        if (c.is_zero()) continue;
        acc = acc + c * x[i].frobenius_pow(static_cast<long long>(j));
      }
    return acc;
  }

  /// Keeps only the top term of each variable.
  PPolynomial principal_part() const {
    PPolynomial r{p, {}};
    for (auto& var : coeffs) {
      std::vector<K> top;
      if (!var.empty()) {
        top.assign(var.size(), K::zero(var.back().spec()));
        top.back() = var.back();
      }
      r.coeffs.push_back(std::move(top));
    }
    return r;
  }

  /// True iff some linear coefficient c_0^(i) is nonzero.
  bool is_separable() const {
    for (auto& var : coeffs)
      if (!var.empty() && !var[0].is_zero()) return true;
    return false;
  }

  bool equals_principal_part() const {
    for (auto& var : coeffs)
      for (size_t j = 0; j + 1 < var.size(); ++j)
        if (!var[j].is_zero()) return false;
    return true;
  }
};

enum class Woundness { Wound, NotWound, Unknown };

template <class K>
struct WoundResult {
  Woundness verdict;
  std::vector<K> witness;  // a nontrivial zero of the polynomial, when NotWound
  std::string note;
};

namespace detail {

enum class Tri { No, Yes, Maybe };

/// p^s-th power test usable inside the woundness criterion.
inline Tri tri_p_power(const RatFunc& f, int s, RatFunc* root) {
  auto r = is_pth_power_iter(f, s);
  if (!r) return Tri::No;
  if (root) *root = *r;
  return Tri::Yes;
}

inline Tri tri_p_power(const LaurentSeries& f, int s, LaurentSeries* root) {
  auto r = f.pth_root_iter(s);
  if (!r) return Tri::No;  // a known exponent obstructs
  if (!f.is_exact()) return Tri::Maybe;
  if (root) *root = *r;
  return Tri::Yes;
}

inline std::optional<RatFunc> invert(const RatFunc& x) {
  return x.is_zero() ? std::nullopt : std::optional<RatFunc>(x.inverse());
}

/// Laurent inversion is only attempted on exact monomials; that covers the
/// coefficient shapes the local theory uses.
inline std::optional<LaurentSeries> invert(const LaurentSeries& x) {
  if (!x.is_exact() || x.is_zero()) return std::nullopt;
  auto m = x.coeff_map();
  if (m.size() != 1) return std::nullopt;
  auto [e, c] = *m.begin();
  return LaurentSeries::monomial(c.inverse(), -e);
}

template <class K>
K monomial_value(const FieldElement& c, long d);

template <>
inline RatFunc monomial_value<RatFunc>(const FieldElement& c, long d) {
  RatFunc m = RatFunc::constant(c);
  return d >= 0 ? m * RatFunc::variable(c.spec()).pow(d)
                : m / RatFunc::variable(c.spec()).pow(-d);
}

template <>
inline LaurentSeries monomial_value<LaurentSeries>(const FieldElement& c, long d) {
  return LaurentSeries::monomial(c, d);
}

}  // namespace detail

/// Sufficient woundness test. Wound when the principal part provably has no
/// nontrivial zero; NotWound only with a verified witness, which exists when
/// the polynomial coincides with its principal part; Unknown otherwise (the
/// criterion is sufficient, not necessary). Two-variable principal parts are
/// decided exactly by the p^min-th power criterion; with more variables, an
/// exhaustive monomial search up to the bound hunts for a zero.
template <class K>
WoundResult<K> is_wound(const PPolynomial<K>& phi, long search_bound = 3) {
  PPolynomial<K> pp = phi.principal_part();
  pp.trim();
  const int p = phi.p;

  std::vector<int> live;
  for (int i = 0; i < pp.num_vars(); ++i)
    if (!pp.coeffs[static_cast<size_t>(i)].empty()) live.push_back(i);
  if (live.empty()) return {Woundness::Unknown, {}, "empty principal part"};

  if (live.size() == 1) {
    // c x^(p^k) = 0 has only the trivial zero
    return {Woundness::Wound, {}, "single-variable principal part"};
  }

  if (live.size() == 2) {
    const int iu = live[0], iv = live[1];
    const auto& cu = pp.coeffs[static_cast<size_t>(iu)].back();
    const auto& cv = pp.coeffs[static_cast<size_t>(iv)].back();
    const int n = pp.top_exponent(iu);
    const int m = pp.top_exponent(iv);
    const int g = std::min(n, m);
    // A nontrivial zero of cu x^(p^n) + cv y^(p^m) exists iff -cv/cu is a
    // p^g-th power; test (-cv) * cu^(p^g - 1) to stay division-free.
    long long pg = 1;
    for (int i = 0; i < g; ++i) pg *= p;
    K u_probe = -cv;
    {
      K cpow = K::one(cu.spec());
      for (long long i = 0; i < pg - 1; ++i) cpow = cpow * cu;
      u_probe = u_probe * cpow;
    }
    K root = K::zero(cu.spec());
    detail::Tri t = detail::tri_p_power(u_probe, g, &root);
    if (t == detail::Tri::No)
      return {Woundness::Wound, {}, "principal part has no nontrivial zero"};
    if (t == detail::Tri::Maybe)
      return {Woundness::Unknown, {}, "power test inconclusive at this precision"};
    // zero exists; it certifies non-woundness only for a pure principal part
    if (!phi.equals_principal_part())
      return {Woundness::Unknown, {},
              "principal part vanishes but lower terms are present"};
    auto cu_inv = detail::invert(cu);
    if (!cu_inv)
      return {Woundness::Unknown, {}, "witness construction needs an invertible top coefficient"};
    K z = root * *cu_inv;  // z^(p^g) = -cv/cu
    std::vector<K> w(static_cast<size_t>(phi.num_vars()), K::zero(cu.spec()));
    if (n <= m) {
      w[static_cast<size_t>(iu)] = z;
      w[static_cast<size_t>(iv)] = K::one(cu.spec());
    } else {
      long long e = 1;
      for (int i = 0; i < n - m; ++i) e *= p;
      K zv = K::one(cu.spec());
      for (long long i = 0; i < e - 1; ++i) zv = zv * z;
      w[static_cast<size_t>(iu)] = z;
      w[static_cast<size_t>(iv)] = zv;
    }
    if (!phi.evaluate(w).is_zero())
      return {Woundness::Unknown, {}, "witness verification failed"};
    return {Woundness::NotWound, w, "verified zero of the pure principal part"};
  }

  // Three or more active variables: hunt for a zero among monomial tuples
  // c t^d, |d| <= bound. A hit certifies NotWound only for a pure principal
  // part; exhaustion proves nothing.
  if (phi.equals_principal_part()) {
    const auto* spec = pp.coeffs[static_cast<size_t>(live[0])].back().spec();
    std::vector<K> candidates;
    candidates.push_back(K::zero(spec));
    for (auto& c : all_elements(spec)) {
      if (c.is_zero()) continue;
      for (long d = -search_bound; d <= search_bound; ++d)
        candidates.push_back(detail::monomial_value<K>(c, d));
    }
    const size_t nvars = static_cast<size_t>(phi.num_vars());
    std::vector<size_t> pick(nvars, 0);
    while (true) {
      bool nontrivial = false;
      std::vector<K> point;
      for (size_t i = 0; i < nvars; ++i) {
        point.push_back(candidates[pick[i]]);
        nontrivial |= pick[i] != 0;
      }
      if (nontrivial && phi.evaluate(point).is_zero())
        return {Woundness::NotWound, point, "zero found by bounded monomial search"};
      size_t i = 0;
      for (; i < nvars; ++i) {
        if (++pick[i] < candidates.size()) break;
        pick[i] = 0;
      }
      if (i == nvars) break;
    }
  }
  return {Woundness::Unknown, {}, "three or more active variables: search inconclusive"};
}

}  // namespace woundlab
