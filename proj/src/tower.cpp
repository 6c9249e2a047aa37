#include "woundlab/tower.hpp"

namespace woundlab {

std::pair<const FieldSpec*, FieldElement> extend_field(const FieldSpec* sub, int factor) {
  const FieldSpec* ext = FieldSpec::get(sub->p, sub->e * factor);
  if (sub->e == 1) {
    // prime field embeds canonically; generator of F_p is the root of x
    return {ext, FieldElement::zero(ext)};
  }
  // The defining polynomial of `sub` has prime-field coefficients; any of its
  // roots in `ext` gives an embedding.
  std::vector<FieldElement> cs;
  for (uint8_t c : sub->modulus) cs.push_back(FieldElement::from_int(ext, c));
  DensePoly mod_in_ext(ext, std::move(cs));
  auto roots = poly_roots(mod_in_ext);
  if (roots.empty()) throw DomainError("embedding root not found (unreachable)");
  return {ext, roots.front()};
}

FieldTower::FieldTower(const FieldSpec* base) { levels_.push_back(base); }

int FieldTower::level_of(const FieldSpec* s) const {
  for (int i = 0; i < static_cast<int>(levels_.size()); ++i)
    if (levels_[static_cast<size_t>(i)] == s) return i;
  throw DomainError("element does not belong to any tower level");
}

FieldElement FieldTower::lift(const FieldElement& x) const {
  int lvl = level_of(x.spec());
  FieldElement cur = x;
  for (int i = lvl; i + 1 < static_cast<int>(levels_.size()); ++i) {
    const FieldSpec* next = levels_[static_cast<size_t>(i) + 1];
    const FieldElement& img = gen_images_[static_cast<size_t>(i)];
    FieldElement acc = FieldElement::zero(next);
    // evaluate the polynomial-basis expression of cur at img
    for (int j = cur.spec()->e - 1; j >= 0; --j)
      acc = acc * img + FieldElement::from_int(next, cur.coeff(j));
    cur = acc;
  }
  return cur;
}

DensePoly FieldTower::lift(const DensePoly& f) const {
  std::vector<FieldElement> cs;
  cs.reserve(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) cs.push_back(lift(f.coeff(i)));
  return DensePoly(top(), std::move(cs));
}

std::optional<FieldElement> FieldTower::project(const FieldElement& x,
                                                const FieldSpec* target) const {
  if (x.spec() == target) return x;
  const int tl = level_of(target);
  const int xl = level_of(x.spec());
  if (xl < tl) return std::nullopt;
  // Solve lift(y) = x coefficient-wise over F_p: columns are lifts of the
  // target basis 1, w, ..., w^{e-1}.
  const int p = target->p;
  const int n = x.spec()->e;
  const int m = target->e;
  std::vector<std::vector<int>> mat(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(m) + 1, 0));
  FieldElement w = FieldElement::generator(target);
  FieldElement basis = FieldElement::one(target);
  for (int j = 0; j < m; ++j) {
    FieldElement col = lift(basis);
    for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
    basis = basis * w;
  }
  for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i)][static_cast<size_t>(m)] = x.coeff(i);
  // Gaussian elimination over F_p.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[static_cast<size_t>(pr)], mat[static_cast<size_t>(row)]);
    // normalize
    int inv = 1;
    for (int k = 1; k < p; ++k)
      if (k * mat[static_cast<size_t>(row)][static_cast<size_t>(col)] % p == 1) inv = k;
    for (auto& v : mat[static_cast<size_t>(row)]) v = v * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      const int f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (!f) continue;
      for (int k = 0; k <= m; ++k)
        mat[static_cast<size_t>(r)][static_cast<size_t>(k)] =
            (mat[static_cast<size_t>(r)][static_cast<size_t>(k)] + p * p -
             f * mat[static_cast<size_t>(row)][static_cast<size_t>(k)] % p) %
            p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  // inconsistent rows mean x is outside the subfield
  for (int r = row; r < n; ++r)
    if (mat[static_cast<size_t>(r)][static_cast<size_t>(m)] != 0) return std::nullopt;
  std::vector<uint8_t> sol(static_cast<size_t>(m), 0);
  for (int r = 0; r < row; ++r)
    sol[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
        static_cast<uint8_t>(mat[static_cast<size_t>(r)][static_cast<size_t>(m)]);
  FieldElement y = FieldElement::from_coeffs(target, sol);
  if (!(lift(y) == x)) return std::nullopt;
  return y;
}

void FieldTower::extend(int factor, const std::string& reason) {
  auto [ext, img] = extend_field(top(), factor);
  steps_.push_back({top(), ext, reason});
  gen_images_.push_back(img);
  levels_.push_back(ext);
}

FieldElement FieldTower::find_root(const DensePoly& f_in) {
  DensePoly f = f_in.spec() == top() ? f_in : lift(f_in);
  if (f.degree() < 1) throw DomainError("find_root needs positive degree");
  auto fac = factor(f);
  int min_deg = 0;
  const DensePoly* best = nullptr;
  for (auto& [g, m] : fac.factors) {
    if (best == nullptr || g.degree() < min_deg) {
      best = &g;
      min_deg = g.degree();
    }
  }
  if (min_deg == 1) return -best->coeff(0) * best->coeff(1).inverse();
  // one splitting step: extend so the minimal factor acquires a root
  DensePoly h = *best;
  extend(min_deg, h.to_string());
  DensePoly h_up = lift(h);
  auto roots = poly_roots(h_up);
  if (roots.empty()) throw DomainError("splitting step failed (unreachable)");
  return roots.front();
}

}  // namespace woundlab
