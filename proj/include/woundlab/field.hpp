#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "woundlab/error.hpp"

namespace woundlab {

/// Description of a finite field F_{p^e}, given by a monic irreducible
/// modulus of degree e over the prime field. Instances are interned: two
/// calls with the same (p, modulus) return the same pointer, so specs can be
/// compared by address.
class FieldSpec {
 public:
  static constexpr int kMaxExtDegree = 20;  // p^e <= 2^20

  int p;                          // characteristic, one of {2,3,5,7}
  int e;                          // extension degree over F_p
  std::vector<uint8_t> modulus;   // monic, length e+1, coefficients mod p
  std::string name;               // "F4", "F9", ...

  /// Canonical field of size p^e (lexicographically first monic irreducible).
  static const FieldSpec* get(int p, int e);
  /// Field with an explicit modulus (checked for irreducibility).
  static const FieldSpec* get(int p, std::vector<uint8_t> modulus);

  long long size() const;  // p^e
};

/// Element of F_{p^e} in the polynomial basis 1, w, ..., w^{e-1} where w is
/// the class of x modulo the defining polynomial. Immutable value type, no
/// heap allocation.
class FieldElement {
 public:
  FieldElement() : spec_(nullptr) { c_.fill(0); }
  static FieldElement zero(const FieldSpec* s);
  static FieldElement one(const FieldSpec* s);
  /// The image of the integer k (reduction mod p).
  static FieldElement from_int(const FieldSpec* s, long long k);
  /// The generator w (requires e > 1; for e == 1 this is 0, the root of x).
  static FieldElement generator(const FieldSpec* s);
  static FieldElement from_coeffs(const FieldSpec* s, const std::vector<uint8_t>& c);

  const FieldSpec* spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;
  uint8_t coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  std::vector<uint8_t> coeffs() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement pow(long long n) const;
  /// x^(p^s); s may be any integer >= 0 (reduced mod e internally).
  FieldElement frobenius(long long s) const;
  /// Unique y with y^p = x.
  FieldElement pth_root() const;
  /// Unique y with y^(p^s) = x.
  FieldElement pth_root_iter(long long s) const;

  std::string to_string() const;  // "2*w^2+w+1" style, round-trips through the parser

 private:
  const FieldSpec* spec_;
  std::array<uint8_t, FieldSpec::kMaxExtDegree> c_;
  friend struct FieldElementHash;
};

struct FieldElementHash {
  size_t operator()(const FieldElement& x) const;
};

/// All elements of the field, in a fixed order (used by small searches).
std::vector<FieldElement> all_elements(const FieldSpec* s);

}  // namespace woundlab
