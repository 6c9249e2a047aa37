#pragma once

#include <limits>
#include <map>
#include <optional>

#include "woundlab/field.hpp"

namespace woundlab {

/// Truncated Laurent series over F_q: a coefficient window starting at the
/// base valuation plus an explicit precision order N meaning "all terms of
/// exponent >= N are unknown". Exact values (Laurent polynomials) carry
/// N = kExact. Arithmetic propagates precision pessimistically; asking for a
/// coefficient at or beyond N raises PrecisionError.
class LaurentSeries {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  explicit LaurentSeries(const FieldSpec* s) : spec_(s), v0_(0), prec_(kExact) {}
  static LaurentSeries zero(const FieldSpec* s) { return LaurentSeries(s); }
  static LaurentSeries one(const FieldSpec* s) {
    return monomial(FieldElement::one(s), 0);
  }
  static LaurentSeries monomial(const FieldElement& c, long exp);
  /// t^1.
  static LaurentSeries variable(const FieldSpec* s) {
    return monomial(FieldElement::one(s), 1);
  }
  static LaurentSeries from_coeff_map(const FieldSpec* s,
                                      const std::map<long, FieldElement>& coeffs,
                                      long prec = kExact);

  const FieldSpec* spec() const { return spec_; }
  long precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  /// True when every known coefficient vanishes (the value is 0 + O(t^N)).
  bool is_zero() const { return c_.empty(); }
  /// Valuation of the known part; PrecisionError when zero-up-to-precision
  /// but inexact (valuation could be anything >= N).
  long valuation() const;
  /// Smallest known exponent, or prec when no known coefficient.
  long min_exponent() const { return c_.empty() ? prec_ : v0_; }
  /// Coefficient at exponent e; throws PrecisionError when e >= precision.
  FieldElement coeff(long e) const;
  const std::map<long, FieldElement> coeff_map() const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  bool operator==(const LaurentSeries& o) const;  // same window, precision, coefficients
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  /// this^(p^s): freshman's dream, exponents and precision scale by p^s.
  LaurentSeries frobenius_pow(long long s) const;
  /// Truncate precision to at most new_prec.
  LaurentSeries truncated(long new_prec) const;
  /// The part with exponents < 0 (exact) and the part with exponents >= 0
  /// (keeps this series' precision).
  LaurentSeries negative_part() const;
  LaurentSeries nonnegative_part() const;
  /// Multiplies by t^shift.
  LaurentSeries shifted(long shift) const;
  /// p^s-th root if every known exponent is divisible by p^s; the result
  /// precision is ceil(prec / p^s). Returns nullopt when a known coefficient
  /// obstructs; exactness of "yes" requires an exact input.
  std::optional<LaurentSeries> pth_root_iter(int s) const;

  std::string to_string() const;

 private:
  void normalize();
  const FieldSpec* spec_;
  long v0_;                       // exponent of c_[0]
  std::vector<FieldElement> c_;   // window; c_.front() nonzero, c_.back() nonzero
  long prec_;
};

}  // namespace woundlab
