#include "woundlab/hassewitt.hpp"

#include "woundlab/tower.hpp"

namespace woundlab {

namespace {
long long pow_ll(int b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

BinaryForm BinaryForm::zero(const FieldSpec* s, long degree) {
  BinaryForm f;
  f.spec = s;
  f.degree = degree;
  f.c.assign(static_cast<size_t>(degree) + 1, FieldElement::zero(s));
  return f;
}

FieldElement BinaryForm::coeff(long i) const {
  if (i < 0 || i > degree) return FieldElement::zero(spec);
  return c[static_cast<size_t>(i)];
}

SemilinearMatrix SemilinearMatrix::identity(const FieldSpec* s, int d, int twist) {
  SemilinearMatrix m = zero(s, d, twist);
  for (int i = 0; i < d; ++i) m.at(i, i) = FieldElement::one(s);
  return m;
}

SemilinearMatrix SemilinearMatrix::zero(const FieldSpec* s, int d, int twist) {
  SemilinearMatrix m;
  m.spec = s;
  m.d = d;
  m.twist = twist;
  m.a.assign(static_cast<size_t>(d) * static_cast<size_t>(d), FieldElement::zero(s));
  return m;
}

SemilinearMatrix SemilinearMatrix::entry_frobenius(long long s) const {
  SemilinearMatrix m = *this;
  for (auto& x : m.a) x = x.frobenius(s);
  return m;
}

SemilinearMatrix SemilinearMatrix::multiply(const SemilinearMatrix& o) const {
  if (o.d != d || o.spec != spec) throw DomainError("matrix size mismatch");
  SemilinearMatrix r = zero(spec, d, twist);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      const FieldElement& x = at(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < d; ++j) r.at(i, j) = r.at(i, j) + x * o.at(l, j);
    }
  return r;
}

SemilinearMatrix SemilinearMatrix::apply_phi(const SemilinearMatrix& b) const {
  return multiply(b.entry_frobenius(twist));
}

int matrix_rank(const SemilinearMatrix& a) {
  SemilinearMatrix m = a;
  int rank = 0;
  for (int col = 0; col < m.d && rank < m.d; ++col) {
    int pr = -1;
    for (int r = rank; r < m.d; ++r)
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < m.d; ++c) std::swap(m.at(pr, c), m.at(rank, c));
    FieldElement inv = m.at(rank, col).inverse();
    for (int c = 0; c < m.d; ++c) m.at(rank, c) = m.at(rank, c) * inv;
    for (int r = 0; r < m.d; ++r) {
      if (r == rank) continue;
      FieldElement f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < m.d; ++c) m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

SemilinearMatrix twisted_product(const SemilinearMatrix& a, int len) {
  SemilinearMatrix prod = a;
  for (int j = 1; j < len; ++j)
    prod = prod.multiply(a.entry_frobenius(static_cast<long long>(a.twist) * j));
  return prod;
}

int stable_rank(const SemilinearMatrix& a) {
  if (a.d == 0) return 0;
  SemilinearMatrix pd = twisted_product(a, a.d);
  const int r = matrix_rank(pd);
  SemilinearMatrix pd1 = pd.multiply(a.entry_frobenius(static_cast<long long>(a.twist) * a.d));
  if (matrix_rank(pd1) != r)
    throw DomainError("stable rank failed to stabilize at length d (defect)");
  return r;
}

int iterate_oracle(const SemilinearMatrix& a) {
  SemilinearMatrix b = SemilinearMatrix::identity(a.spec, a.d, a.twist);
  for (int step = 0; step < a.d; ++step) b = a.apply_phi(b);
  return matrix_rank(b);
}

SemilinearMatrix build_matrix(int p, int n, int m, int k, const BinaryForm& a) {
  const long long pn = pow_ll(p, n);
  const long long pm = pow_ll(p, m);
  const long long want = static_cast<long long>(k) * pn * (pm - 1);
  if (a.degree != want)
    throw DomainError("binary form degree mismatch: got " + std::to_string(a.degree) +
                      ", the model needs k p^n (p^m - 1) = " + std::to_string(want));
  const int d = static_cast<int>(pn * k - 1);
  SemilinearMatrix out = SemilinearMatrix::zero(a.spec, d, m);
  // a * e_i^(p^m) = sum_l c_l t0^(l - p^m i) t1^(...); the e_j-component picks
  // l = p^m i - j, and the truncation to negative exponents is exactly the
  // range j = 1..d.
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      out.at(j - 1, i - 1) = a.coeff(pm * i - j);
  return out;
}

int fixed_point_kernel_dim(const SemilinearMatrix& a, int ext,
                           std::vector<std::vector<FieldElement>>* basis_out) {
  const FieldSpec* base = a.spec;
  const int p = base->p;
  const FieldSpec* E = base;
  FieldElement gen_img = FieldElement::zero(base);
  if (ext > 1) {
    auto [ext_spec, img] = extend_field(base, ext);
    E = ext_spec;
    gen_img = img;
  }
  auto lift = [&](const FieldElement& x) {
    if (E == base) return x;
    FieldElement acc = FieldElement::zero(E);
    for (int j = base->e - 1; j >= 0; --j)
      acc = acc * gen_img + FieldElement::from_int(E, x.coeff(j));
    return acc;
  };
  const int d = a.d;
  const int D = E->e * d;  // F_p-dimension of E^d
  // columns of the F_p-linear map x -> A x^(p^m) - x
  std::vector<std::vector<int>> mat(static_cast<size_t>(D), std::vector<int>(static_cast<size_t>(D), 0));
  std::vector<FieldElement> lifted(a.a.size(), FieldElement::zero(E));
  for (size_t i = 0; i < a.a.size(); ++i) lifted[i] = lift(a.a[i]);

  FieldElement w = FieldElement::generator(E);
  for (int coord = 0; coord < d; ++coord) {
    FieldElement basis = FieldElement::one(E);
    for (int b = 0; b < E->e; ++b) {
      const int col = coord * E->e + b;
      // x = basis * e_coord; y = A x^(p^m) - x
      FieldElement xq = basis.frobenius(a.twist);
      for (int row = 0; row < d; ++row) {
        FieldElement y = lifted[static_cast<size_t>(row * d + coord)] * xq;
        if (row == coord) y = y - basis;
        for (int rb = 0; rb < E->e; ++rb)
          mat[static_cast<size_t>(row * E->e + rb)][static_cast<size_t>(col)] = y.coeff(rb);
      }
      basis = basis * w;
    }
  }
  // kernel over F_p
  std::vector<int> pivot_of_col(static_cast<size_t>(D), -1);
  int rank = 0;
  for (int col = 0; col < D && rank < D; ++col) {
    int pr = -1;
    for (int r = rank; r < D; ++r)
      if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[static_cast<size_t>(pr)], mat[static_cast<size_t>(rank)]);
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (x * mat[static_cast<size_t>(rank)][static_cast<size_t>(col)] % p == 1) inv = x;
    for (auto& v : mat[static_cast<size_t>(rank)]) v = v * inv % p;
    for (int r = 0; r < D; ++r) {
      if (r == rank) continue;
      const int f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (!f) continue;
      for (int c = 0; c < D; ++c)
        mat[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            (mat[static_cast<size_t>(r)][static_cast<size_t>(c)] + p * p -
             f * mat[static_cast<size_t>(rank)][static_cast<size_t>(c)] % p) %
            p;
    }
    pivot_of_col[static_cast<size_t>(col)] = rank;
    ++rank;
  }
  const int kdim = D - rank;
  if (basis_out) {
    basis_out->clear();
    for (int free_col = 0; free_col < D; ++free_col) {
      if (pivot_of_col[static_cast<size_t>(free_col)] >= 0) continue;
      // back-substitute the free column
      std::vector<int> vec(static_cast<size_t>(D), 0);
      vec[static_cast<size_t>(free_col)] = 1;
      for (int col = 0; col < D; ++col) {
        const int pv = pivot_of_col[static_cast<size_t>(col)];
        if (pv < 0) continue;
        vec[static_cast<size_t>(col)] =
            (p - mat[static_cast<size_t>(pv)][static_cast<size_t>(free_col)] % p) % p;
      }
      std::vector<FieldElement> point;
      for (int coord = 0; coord < d; ++coord) {
        std::vector<uint8_t> cs(static_cast<size_t>(E->e));
        for (int b = 0; b < E->e; ++b)
          cs[static_cast<size_t>(b)] = static_cast<uint8_t>(vec[static_cast<size_t>(coord * E->e + b)]);
        point.push_back(FieldElement::from_coeffs(E, cs));
      }
      basis_out->push_back(std::move(point));
    }
  }
  return kdim;
}

CohomologyReport cohomology_report(int p, int n, int m, int k, const BinaryForm& a,
                                   bool with_kernel) {
  SemilinearMatrix A = build_matrix(p, n, m, k, a);
  CohomologyReport rep;
  rep.d = A.d;
  rep.r = stable_rank(A);
  if (iterate_oracle(A) != rep.r)
    throw DomainError("stable rank disagrees with the iteration oracle (defect)");
  rep.torsion = pow_ll(p, m);
  rep.h2 = 0;
  rep.h1L_dim = k - 1;
  rep.experimental = !(p == 3 && n == 1 && m == 1);
  if (with_kernel) {
    const int target = m * rep.r;  // F_p-dimension of the fixed-point group
    for (int ext = 1; ext <= 12; ++ext) {
      if (static_cast<long long>(a.spec->e) * ext > FieldSpec::kMaxExtDegree) break;
      std::vector<std::vector<FieldElement>> basis;
      int dim = fixed_point_kernel_dim(A, ext, &basis);
      if (dim >= target || ext == 12) {
        rep.kernel_ext = ext;
        rep.kernel_basis = std::move(basis);
        break;
      }
    }
  }
  return rep;
}

}  // namespace woundlab
