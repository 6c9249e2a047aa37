#pragma once

#include <optional>
#include <string>
#include <vector>

#include "woundlab/field.hpp"

namespace woundlab {

/// Homogeneous binary form of degree N: c[i] is the coefficient of
/// t0^i t1^(N-i).
struct BinaryForm {
  const FieldSpec* spec = nullptr;
  long degree = 0;
  std::vector<FieldElement> c;  // size degree + 1

  static BinaryForm zero(const FieldSpec* s, long degree);
  FieldElement coeff(long i) const;
};

/// A p^m-linear operator phi on k^d: phi(lambda x) = lambda^(p^m) phi(x).
/// Convention: column i holds the coordinates of phi(e_i), so
/// phi(x) = A * x^(p^m) with the coordinate vector raised entrywise.
struct SemilinearMatrix {
  const FieldSpec* spec = nullptr;
  int d = 0;
  int twist = 1;  // m
  std::vector<FieldElement> a;  // row-major d*d

  static SemilinearMatrix identity(const FieldSpec* s, int d, int twist);
  static SemilinearMatrix zero(const FieldSpec* s, int d, int twist);
  const FieldElement& at(int row, int col) const { return a[static_cast<size_t>(row * d + col)]; }
  FieldElement& at(int row, int col) { return a[static_cast<size_t>(row * d + col)]; }

  /// Entrywise x -> x^(p^s).
  SemilinearMatrix entry_frobenius(long long s) const;
  SemilinearMatrix multiply(const SemilinearMatrix& o) const;
  /// Applies phi to the column span of B: A * B^(p^m).
  SemilinearMatrix apply_phi(const SemilinearMatrix& b) const;
};

/// Rank over the base field.
int matrix_rank(const SemilinearMatrix& a);

/// The twisted product A * A^(q') * ... * A^(q'^(len-1)), q' = p^twist;
/// this is the matrix of phi^len.
SemilinearMatrix twisted_product(const SemilinearMatrix& a, int len);

/// rank of the d-fold twisted product = dim of the semisimple part.
/// Certified stable: the (d+1)-fold product must have the same rank.
int stable_rank(const SemilinearMatrix& a);

/// Independent route: applies phi to the standard basis d times (coordinates
/// raised to p^m between applications) and returns the rank of the image.
int iterate_oracle(const SemilinearMatrix& a);

/// Basis e_i = t0^(-i) t1^(-(p^n k - i)), i = 1..d, d = p^n k - 1;
/// phi(e_i) = truncation of a * e_i^(p^m) to monomials with both exponents
/// negative. Entry (row j, col i) = c_(p^m i - j). Requires
/// deg(a) = k p^n (p^m - 1).
SemilinearMatrix build_matrix(int p, int n, int m, int k, const BinaryForm& a);

/// F_p-dimension of the kernel of phi - id with coordinates in the degree-ext
/// extension of the base field; optionally returns a basis (coordinates in
/// the extension field).
int fixed_point_kernel_dim(const SemilinearMatrix& a, int ext,
                           std::vector<std::vector<FieldElement>>* basis_out = nullptr);

struct CohomologyReport {
  int d = 0;
  int r = 0;               // stable rank
  long long torsion = 0;   // p^m: H1(C,G) = (Z/p^m)^r
  int h2 = 0;              // always 0
  long h1L_dim = 0;        // k - 1 = h^1(P^1, O(-k))
  bool experimental = false;  // regimes other than (p,n,m) = (3,1,1)
  // kernel of phi - id, when requested: found in F_{q^kernel_ext}, dimension
  // r over F_{p^m}
  int kernel_ext = 0;
  std::vector<std::vector<FieldElement>> kernel_basis;
};

CohomologyReport cohomology_report(int p, int n, int m, int k, const BinaryForm& a,
                                   bool with_kernel = false);

}  // namespace woundlab
