#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "woundlab/membership.hpp"
#include "woundlab/ppoly.hpp"

namespace woundlab {

inline long long int_pow(int base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// Arithmetic genus of the weighted homogeneous compactification of the
/// Russell curve u^(p^n) + v + ... + a_m v^(p^m):
/// (p^min - 1)(p^max - 2)/2. Equals the genus of the group only when the
/// compactification is regular.
inline long long genus(int p, int n, int m) {
  if (n < 1 || m < 1) throw DomainError("genus needs n, m >= 1");
  const long long lo = int_pow(p, std::min(n, m));
  const long long hi = int_pow(p, std::max(n, m));
  return (lo - 1) * (hi - 2) / 2;
}

/// Normalized one-dimensional form u^(p^n) + v + a_1 v^p + ... + a_m v^(p^m).
template <class K>
struct RussellEquation {
  int p;
  int n;
  std::vector<K> a;  // a_1..a_m, a_m != 0

  int m() const { return static_cast<int>(a.size()); }
  const FieldSpec* field() const { return a.front().spec(); }

  void validate() const {
    if (n < 1 || a.empty() || a.back().is_zero())
      throw DomainError("malformed Russell equation (need n >= 1 and a_m != 0)");
  }

  PPolynomial<K> to_ppolynomial() const {
    validate();
    const FieldSpec* s = field();
    std::vector<K> ucol(static_cast<size_t>(n) + 1, K::zero(s));
    ucol.back() = K::one(s);
    std::vector<K> vcol;
    vcol.push_back(K::one(s));
    for (auto& ai : a) vcol.push_back(ai);
    return PPolynomial<K>{p, {ucol, vcol}};
  }
};

/// Degree of the smallest purely inseparable splitting extension
/// F(a_1^(1/p^n), ..., a_m^(1/p^n)) / F.
template <class K>
long long splitting_degree(const RussellEquation<K>& r) {
  r.validate();
  return q_span_dimension(r.a, r.n);
}

struct Classification {
  enum class Tag { SplitsToGa, QuasiRational, QuasiElliptic, HigherGenus, Undetermined };
  enum class QECase { None, Case1a, Case1b, Case1c, Case2 };

  Tag tag;
  QECase qe_case = QECase::None;
  long long genus = -1;  // set for HigherGenus
  std::string reason;

  bool operator==(const Classification& o) const {
    return tag == o.tag && qe_case == o.qe_case && genus == o.genus;
  }
  std::string to_string() const {
    switch (tag) {
      case Tag::SplitsToGa:
        return "splits_to_Ga";
      case Tag::QuasiRational:
        return "quasi_rational";
      case Tag::QuasiElliptic:
        switch (qe_case) {
          case QECase::Case1a: return "quasi_elliptic_case1a";
          case QECase::Case1b: return "quasi_elliptic_case1b";
          case QECase::Case1c: return "quasi_elliptic_case1c";
          case QECase::Case2: return "quasi_elliptic_case2";
          default: return "quasi_elliptic";
        }
      case Tag::HigherGenus:
        return "higher_genus_" + std::to_string(genus);
      case Tag::Undetermined:
        return "undetermined";
    }
    return "undetermined";
  }
};

/// One weighted-homogeneous monomial coeff * t0^e0 * t1^e1 * t2^e2.
template <class K>
struct WeightedMonomial {
  K coeff;
  long long e0, e1, e2;
};

/// Weighted homogeneous compactification data: the curve of degree p^max in
/// the weighted plane P(1,1,p^(max-min)). t2 carries the u-variable, t1 the
/// v-variable, t0 the hyperplane at infinity.
template <class K>
struct CompactificationReport {
  int p, n, m;
  long long w;             // the nontrivial weight p^|m-n|
  long long w0, w1, w2;    // weights of t0, t1, t2 (two are 1, one is w)
  long long degree;        // p^max
  std::vector<WeightedMonomial<K>> monomials;
  bool regular;            // a_m is not a p-th power
  long long boundary_degree;   // [F(a_m^(1/p^n)) : F]
  long long canonical_twist;   // omega_X = O_X(canonical_twist)
  long long arithmetic_genus;

  long long weighted_degree(const WeightedMonomial<K>& mono) const {
    return w0 * mono.e0 + w1 * mono.e1 + w2 * mono.e2;
  }
};

template <class K>
CompactificationReport<K> compactify(const RussellEquation<K>& r) {
  r.validate();
  const FieldSpec* s = r.field();
  const int p = r.p, n = r.n, m = r.m();
  CompactificationReport<K> rep;
  rep.p = p;
  rep.n = n;
  rep.m = m;
  const int mx = std::max(n, m), mn = std::min(n, m);
  rep.w = int_pow(p, mx - mn);
  rep.degree = int_pow(p, mx);
  if (n <= m) {
    // u = t2 / t0^(p^(m-n)), v = t1 / t0, cleared by t0^(p^m)
    rep.w0 = 1;
    rep.w1 = 1;
    rep.w2 = rep.w;
    rep.monomials.push_back({K::one(s), 0, 0, int_pow(p, n)});
    rep.monomials.push_back({K::one(s), rep.degree - 1, 1, 0});
    for (int i = 1; i <= m; ++i) {
      const K& ai = r.a[static_cast<size_t>(i) - 1];
      if (ai.is_zero()) continue;
      rep.monomials.push_back({ai, rep.degree - int_pow(p, i), int_pow(p, i), 0});
    }
  } else {
    // u = t2 / t0, v = t1 / t0^(p^(n-m)), cleared by t0^(p^n)
    rep.w0 = 1;
    rep.w1 = rep.w;
    rep.w2 = 1;
    rep.monomials.push_back({K::one(s), 0, 0, int_pow(p, n)});
    rep.monomials.push_back({K::one(s), rep.degree - rep.w, 1, 0});
    for (int i = 1; i <= m; ++i) {
      const K& ai = r.a[static_cast<size_t>(i) - 1];
      if (ai.is_zero()) continue;
      rep.monomials.push_back({ai, rep.degree - rep.w * int_pow(p, i), int_pow(p, i), 0});
    }
  }
  // every monomial must reach the full weighted degree
  for (auto& mono : rep.monomials)
    if (rep.weighted_degree(mono) != rep.degree)
      throw DomainError("homogenization produced a non-uniform weighted degree");
  rep.regular = !is_pth_power(r.a.back()).has_value();
  rep.boundary_degree = q_span_dimension(std::vector<K>{r.a.back()}, n);
  rep.canonical_twist = -2 - rep.w + rep.degree;
  rep.arithmetic_genus = genus(p, n, m);
  return rep;
}

/// Substitutes t0 = 1 and reassembles the Russell equation; used to check
/// that compactification is lossless.
template <class K>
RussellEquation<K> dehomogenize(const CompactificationReport<K>& rep) {
  RussellEquation<K> r;
  r.p = rep.p;
  r.n = rep.n;
  const FieldSpec* s = rep.monomials.front().coeff.spec();
  r.a.assign(static_cast<size_t>(rep.m), K::zero(s));
  for (auto& mono : rep.monomials) {
    if (mono.e2 > 0) {
      if (mono.e2 != int_pow(rep.p, rep.n) || !mono.coeff.is_one())
        throw DomainError("unexpected u-monomial");
    } else if (mono.e1 == 1) {
      if (!mono.coeff.is_one()) throw DomainError("unexpected linear v-monomial");
    } else {
      for (int i = 1; i <= rep.m; ++i)
        if (mono.e1 == int_pow(rep.p, i)) r.a[static_cast<size_t>(i) - 1] = mono.coeff;
    }
  }
  return r;
}

/// Outcome of the Queen case 1(c) normalization of u^4 + v + a v^2 + c^2 v^4.
template <class K>
struct Case1cReduction {
  K cubic_a, cubic_c;   // normalization is the plane cubic y^2 + x^3 + a x + c
  bool genus_zero;      // a is a square: the genus drops to 0
  std::optional<std::pair<K, K>> to_1b_witness;  // (alpha, beta) with c = a alpha^2 + beta^2
  std::optional<K> case_1b_coeff;  // the coefficient of the reduced u^4 + v + a v^2 model
};

/// The substitution t = (y^2 + c)/x turns the non-regular degree-4 model into
/// the cubic y^2 + x^3 + a x + c; flags record the two degenerations.
template <class K>
Case1cReduction<K> reduce_case_1c(const K& a, const K& c) {
  if (a.spec()->p != 2) throw DomainError("case 1(c) reduction requires characteristic 2");
  Case1cReduction<K> out{a, c, false, std::nullopt, std::nullopt};
  out.genus_zero = is_pth_power(a).has_value();
  if (!out.genus_zero) {
    auto wit = membership_F2_plus_F2a(c, a);
    if (wit) {
      out.to_1b_witness = wit;
      out.case_1b_coeff = a;
    }
  }
  return out;
}

template <class K>
Classification classify(const RussellEquation<K>& r) {
  r.validate();
  const int p = r.p, n = r.n, m = r.m();
  Classification out{Classification::Tag::Undetermined, Classification::QECase::None, -1, ""};

  const long long split = splitting_degree(r);
  if (split == 1) {
    out.tag = Classification::Tag::SplitsToGa;
    out.reason = "all coefficients are p^n-th powers";
    return out;
  }

  if (p == 2) {
    if (n == 1 && m == 1) {
      out.tag = Classification::Tag::QuasiRational;
      out.reason = "u^2 + v + a v^2 with a not a square";
      return out;
    }
    if (n == 1 && m == 2) {
      const K& a1 = r.a[0];
      const K& a2 = r.a[1];
      if (!is_pth_power(a2) && q_span_dimension(std::vector<K>{a1, a2}, 1) == 2) {
        out.tag = Classification::Tag::QuasiElliptic;
        out.qe_case = Classification::QECase::Case1a;
        return out;
      }
    }
    if (n == 2 && m == 1) {
      if (!is_pth_power(r.a[0])) {
        out.tag = Classification::Tag::QuasiElliptic;
        out.qe_case = Classification::QECase::Case1b;
        return out;
      }
    }
    if (n == 2 && m == 2) {
      auto b = is_pth_power(r.a[1]);
      if (b) {
        const K& a1 = r.a[0];
        if (is_pth_power(a1)) {
          // u |-> u + alpha v + b v^2 lowers the genus to zero
          out.tag = Classification::Tag::QuasiRational;
          out.reason = "v^4-coefficient and v^2-coefficient are squares: genus drops to 0";
          return out;
        }
        const long long deg = q_span_dimension(std::vector<K>{a1, *b}, 1);
        out.tag = Classification::Tag::QuasiElliptic;
        if (deg == 4) {
          out.qe_case = Classification::QECase::Case1c;
        } else {
          // c = a alpha^2 + beta^2: normalizes to the case 1(b) shape
          out.qe_case = Classification::QECase::Case1b;
          out.reason = "case 1(c) shape with [F(sqrt a, sqrt b):F] = 2";
        }
        return out;
      }
    }
  }
  if (p == 3 && n == 1 && m == 1) {
    // split > 1 already implies a is not a cube
    out.tag = Classification::Tag::QuasiElliptic;
    out.qe_case = Classification::QECase::Case2;
    return out;
  }

  if (!is_pth_power(r.a.back())) {
    out.tag = Classification::Tag::HigherGenus;
    out.genus = genus(p, n, m);
    out.reason = "regular weighted compactification outside the genus <= 1 normal forms";
    return out;
  }
  out.tag = Classification::Tag::Undetermined;
  out.reason = "non-regular compactification with no specified normalization";
  return out;
}

}  // namespace woundlab
