#pragma once

#include <optional>

#include "woundlab/hensel.hpp"

namespace woundlab {

/// Integral local model u^(p^n) + v + a_1 v^p + ... + a_m v^(p^m) over
/// k((t)), all v(a_i) >= 0. Either a single monomial top coefficient
/// a_m = unit * t^k (the shapes with canonical torsor representatives) or a
/// general coefficient list.
struct LocalRussell {
  const FieldSpec* spec = nullptr;
  int p = 2, n = 1, m = 1;
  bool monomial = true;      // a_m = unit * t^k, all other a_i = 0
  int k = 1;
  FieldElement unit;
  std::vector<LaurentSeries> coeffs;  // general mode only: a_1..a_m

  static LocalRussell monomial_shape(const FieldSpec* s, int n, int m, int k,
                                     std::optional<FieldElement> unit = std::nullopt);
  static LocalRussell general(const FieldSpec* s, int n, std::vector<LaurentSeries> a);

  enum class Shape {
    QuasiRational,  // p=2, (n,m)=(1,1), a = t:        every class is trivial
    Lang3,          // p=3, (n,m)=(1,1), a = t^k, k in {1,2,4,5}: support k+3s
    P2Deep4,        // p=2, (n,m)=(1,2), a = t^k, k in {1,3,5}:   support k+4s
    P2Case7,        // p=2, (n,m)=(2,1), a = t:                   support 2+4s
    P2Case9,        // p=2, (n,m)=(2,1), a = t^3:                 support 6+4s
    General
  };
  Shape shape() const;
  /// True exactly for the shapes whose canonical representatives are unique.
  bool supported_unique() const;
  /// Terminal support {k0 + step*s}, when the shape has one.
  std::optional<std::pair<long, long>> terminal_progression() const;
  bool is_terminal_depth(long j) const;

  /// a_1..a_m as series over `spec`.
  std::vector<LaurentSeries> coefficient_list() const;
  /// u^(p^n) + v + sum a_i v^(p^i); operands must live over `spec`.
  LaurentSeries phi(const LaurentSeries& u, const LaurentSeries& v) const;
};

/// A torsor class f mod Phi(K + K), equation Phi(u, v) + f = 0.
struct TorsorClass {
  LocalRussell model;
  LaurentSeries f;
};

struct ReductionMove {
  enum class Kind { UMove, VMoveTrade, VMoveErase, SelfMove, HenselAbsorb, FieldExtension, Normalize };
  Kind kind;
  long depth = 0;          // exponent acted on, as j for t^(-j); for
                           // Normalize, the t-power scaling the class
  LaurentSeries u_piece;   // substitution pieces, over the tower level current
  LaurentSeries v_piece;   // at the time of the move
  std::string note;        // the coefficient equation that was solved
};

/// Canonical representative plus the trace that produced it. Replaying the
/// trace from f reproduces `reduced` (up to the working precision).
struct NormalForm {
  LaurentSeries reduced;
  bool trivial = false;
  std::optional<long> lang_k;
  std::optional<long> lang_degree;  // degree of q in t^(-k) q(t^(-step))
  std::vector<ReductionMove> trace;
  FieldTower tower;  // the field steps the reduction took

  explicit NormalForm(const FieldSpec* s) : reduced(s), tower(s) {}
};

/// Reduces a class to its canonical representative. Supported shapes: the
/// unique-representative monomial shapes and the quasi-rational model.
/// Moves: u-move (kills depths divisible by p^n), v-move in trade or erase
/// direction, additive self-move (may extend the field tower), and a final
/// Hensel absorption of the nonnegative part. Every move strictly decreases
/// the deepest non-terminal depth, which certifies termination.
NormalForm reduce(const TorsorClass& t, long work_precision = 64);

/// f - sum of Phi(moves), evaluated over the final tower field; equals the
/// reduced form up to the precision horizon.
LaurentSeries replay_trace(const TorsorClass& t, const NormalForm& nf);

enum class Verdict { True, False, Unknown };

/// Exact for the supported shapes (via reduce); bounded image-membership
/// search otherwise: True with a witness, never a false negative, Unknown on
/// exhaustion.
Verdict is_trivial(const TorsorClass& t, long search_bound = 12);

/// Searches for (u, v) with negative support down to t^(-bound) whose image
/// matches the negative part of f; the nonnegative remainder is absorbable.
/// This is an F_p-linear solve, not an enumeration.
std::optional<std::pair<LaurentSeries, LaurentSeries>> image_membership_search(
    const LocalRussell& model, const LaurentSeries& f, long bound);

}  // namespace woundlab
