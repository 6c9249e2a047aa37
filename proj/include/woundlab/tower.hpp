#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "woundlab/poly.hpp"

namespace woundlab {

/// A lazily grown tower of finite field extensions standing in for an
/// algebraically closed field: whenever a computation needs a root that the
/// current top field lacks, the tower is extended by one splitting step.
///
/// Each level stores the image of the previous level's generator, so elements
/// lift by evaluating their polynomial-basis expression at that image.
/// Mutable, confined to one computation; concurrent computations use
/// independent towers.
class FieldTower {
 public:
  struct Step {
    const FieldSpec* from;
    const FieldSpec* to;
    std::string reason;  // the polynomial whose root forced the extension
  };

  explicit FieldTower(const FieldSpec* base);

  const FieldSpec* base() const { return levels_.front(); }
  const FieldSpec* top() const { return levels_.back(); }
  int height() const { return static_cast<int>(levels_.size()); }
  const std::vector<Step>& steps() const { return steps_; }

  /// Lifts an element from any tower level into the top field.
  FieldElement lift(const FieldElement& x) const;
  DensePoly lift(const DensePoly& f) const;

  /// Writes a top-field element in terms of a lower level, if it lies in that
  /// subfield's image.
  std::optional<FieldElement> project(const FieldElement& x, const FieldSpec* target) const;

  /// A root of f (a polynomial over some tower level), extending the tower by
  /// one splitting step when f has no root in the current top field.
  /// f must have a positive-degree factor (degree >= 1).
  FieldElement find_root(const DensePoly& f);

 private:
  int level_of(const FieldSpec* s) const;
  void extend(int new_total_degree, const std::string& reason);

  std::vector<const FieldSpec*> levels_;
  std::vector<FieldElement> gen_images_;  // gen_images_[i]: image of levels_[i-1]'s generator in levels_[i]
  std::vector<Step> steps_;
};

/// Embeds `sub` into an extension of total degree sub->e * factor over the
/// prime field; returns the extension spec and the image of sub's generator.
std::pair<const FieldSpec*, FieldElement> extend_field(const FieldSpec* sub, int factor);

}  // namespace woundlab
