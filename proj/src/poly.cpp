#include "woundlab/poly.hpp"

#include <random>

namespace woundlab {

DensePoly::DensePoly(const FieldSpec* s, std::vector<FieldElement> coeffs)
    : spec_(s), c_(std::move(coeffs)) {
  trim();
}

DensePoly DensePoly::constant(const FieldElement& c) {
  DensePoly f(c.spec());
  if (!c.is_zero()) f.c_.push_back(c);
  return f;
}

DensePoly DensePoly::monomial(const FieldElement& c, int deg) {
  DensePoly f(c.spec());
  if (!c.is_zero()) {
    f.c_.assign(static_cast<size_t>(deg) + 1, FieldElement::zero(c.spec()));
    f.c_.back() = c;
  }
  return f;
}

void DensePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement DensePoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(spec_);
  return c_[static_cast<size_t>(i)];
}

FieldElement DensePoly::leading() const {
  if (is_zero()) return FieldElement::zero(spec_);
  return c_.back();
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), FieldElement::zero(spec_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return DensePoly(spec_, std::move(r));
}

DensePoly DensePoly::operator-(const DensePoly& o) const { return *this + (-o); }

DensePoly DensePoly::operator-() const {
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = -x;
  return DensePoly(spec_, std::move(r));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  if (is_zero() || o.is_zero()) return zero(spec_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement::zero(spec_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return DensePoly(spec_, std::move(r));
}

DensePoly DensePoly::operator*(const FieldElement& c) const {
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = x * c;
  return DensePoly(spec_, std::move(r));
}

bool DensePoly::operator==(const DensePoly& o) const {
  if (spec_ != o.spec_ || c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::pair<DensePoly, DensePoly> DensePoly::divmod(const DensePoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  DensePoly r = *this;
  DensePoly q(spec_);
  if (r.degree() >= d.degree())
    q.c_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, FieldElement::zero(spec_));
  const FieldElement lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int k = r.degree() - d.degree();
    const FieldElement f = r.leading() * lead_inv;
    q.c_[static_cast<size_t>(k)] = f;
    for (int i = 0; i <= d.degree(); ++i)
      r.c_[static_cast<size_t>(i + k)] =
          r.c_[static_cast<size_t>(i + k)] - f * d.c_[static_cast<size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

DensePoly DensePoly::derivative() const {
  if (degree() < 1) return zero(spec_);
  std::vector<FieldElement> r(c_.size() - 1, FieldElement::zero(spec_));
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * FieldElement::from_int(spec_, static_cast<long long>(i));
  return DensePoly(spec_, std::move(r));
}

DensePoly DensePoly::pow(long long n) const {
  DensePoly r = one(spec_);
  DensePoly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

DensePoly DensePoly::powmod(long long n, const DensePoly& m) const {
  DensePoly r = one(spec_);
  DensePoly b = *this % m;
  while (n > 0) {
    if (n & 1) r = r * b % m;
    b = b * b % m;
    n >>= 1;
  }
  return r;
}

FieldElement DensePoly::evaluate(const FieldElement& x) const {
  FieldElement r = FieldElement::zero(spec_);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

DensePoly DensePoly::substitute(const DensePoly& x) const {
  DensePoly r = zero(spec_);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + constant(c_[i]);
  return r;
}

DensePoly DensePoly::coeff_frobenius(long long s) const {
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = x.frobenius(s);
  return DensePoly(spec_, std::move(r));
}

std::optional<DensePoly> DensePoly::pth_root() const {
  const int p = spec_->p;
  if (is_zero()) return zero(spec_);
  std::vector<FieldElement> r(static_cast<size_t>(degree() / p) + 1, FieldElement::zero(spec_));
  for (int i = 0; i <= degree(); ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    if (i % p != 0) return std::nullopt;
    r[static_cast<size_t>(i / p)] = c_[static_cast<size_t>(i)].pth_root();
  }
  return DensePoly(spec_, std::move(r));
}

std::string DensePoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = c.to_string();
    const bool wrap = cs.find('+') != std::string::npos;
    if (i == 0) {
      s += wrap ? "(" + cs + ")" : cs;
    } else {
      if (!c.is_one()) s += (wrap ? "(" + cs + ")" : cs) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

DensePoly poly_gcd(DensePoly a, DensePoly b) {
  while (!b.is_zero()) {
    DensePoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::mt19937_64& rng() {
  // thread-local: factorization stays usable from concurrent computations
  thread_local std::mt19937_64 g(0x77057ULL);
  return g;
}

DensePoly random_poly(const FieldSpec* s, int max_deg) {
  const auto elems = all_elements(s);
  std::uniform_int_distribution<size_t> dist(0, elems.size() - 1);
  std::vector<FieldElement> c;
  for (int i = 0; i <= max_deg; ++i) c.push_back(elems[dist(rng())]);
  return DensePoly(s, std::move(c));
}

// F_p-trace of h modulo f, where f is a product of irreducibles of degree d:
// h + h^p + ... + h^(p^(d*e-1)). Maps each root into F_p.
DensePoly fp_trace(const DensePoly& h, const DensePoly& f, int d) {
  const FieldSpec* s = f.spec();
  DensePoly acc = h % f;
  DensePoly tr = acc;
  for (int i = 1; i < d * s->e; ++i) {
    acc = acc.powmod(s->p, f);
    tr = tr + acc;
  }
  return tr % f;
}

// Splits a monic squarefree product of irreducibles all of degree d.
void equal_degree_split(const DensePoly& f, int d, std::vector<DensePoly>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const FieldSpec* s = f.spec();
  DensePoly g = DensePoly::zero(s);
  while (g.degree() <= 0 || g.degree() == f.degree()) {
    DensePoly tr = fp_trace(random_poly(s, f.degree() - 1), f, d);
    if (s->p == 2) {
      g = poly_gcd(f, tr);
    } else {
      DensePoly leg = tr.powmod((s->p - 1) / 2, f) - DensePoly::one(s);
      g = poly_gcd(f, leg);
    }
  }
  equal_degree_split(g, d, out);
  equal_degree_split((f / g).monic(), d, out);
}

// Monic squarefree decomposition valid in characteristic p.
void squarefree_decompose(const DensePoly& f, int mult,
                          std::vector<std::pair<DensePoly, int>>& out) {
  const FieldSpec* s = f.spec();
  if (f.degree() < 1) return;
  DensePoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_decompose(f.pth_root()->monic(), mult * s->p, out);
    return;
  }
  DensePoly c = poly_gcd(f, df);
  DensePoly w = (f / c).monic();
  int i = 1;
  while (w.degree() >= 1) {
    DensePoly y = poly_gcd(w, c);
    DensePoly z = (w / y).monic();
    if (z.degree() >= 1) out.push_back({z, mult * i});
    w = y;
    if (!y.is_zero() && y.degree() >= 0) c = (c / y).monic();
    ++i;
  }
  if (c.degree() >= 1) squarefree_decompose(c.pth_root()->monic(), mult * s->p, out);
}

}  // namespace

Factorization factor(const DensePoly& f_in) {
  Factorization out;
  out.unit = f_in.is_zero() ? FieldElement::one(f_in.spec()) : f_in.leading();
  if (f_in.degree() < 1) return out;
  const FieldSpec* s = f_in.spec();

  std::vector<std::pair<DensePoly, int>> squarefree;
  squarefree_decompose(f_in.monic(), 1, squarefree);

  auto add_factor = [&](const DensePoly& irr, int mult) {
    for (auto& [g, m] : out.factors) {
      if (g == irr) {
        m += mult;
        return;
      }
    }
    out.factors.push_back({irr, mult});
  };

  for (auto& [sf, mult] : squarefree) {
    // distinct-degree on each squarefree part
    DensePoly f = sf;
    DensePoly xq = DensePoly::variable(s);
    int d = 0;
    while (f.degree() >= 1) {
      ++d;
      if (2 * d > f.degree()) {
        add_factor(f.monic(), mult);
        break;
      }
      xq = xq.powmod(s->size(), f);
      DensePoly g = poly_gcd(f, xq - DensePoly::variable(s));
      if (g.degree() >= 1) {
        std::vector<DensePoly> pieces;
        equal_degree_split(g.monic(), d, pieces);
        for (auto& irr : pieces) add_factor(irr, mult);
        f = (f / g).monic();
        if (f.degree() >= 1) xq = xq % f;
      }
    }
  }
  return out;
}

bool is_irreducible(const DensePoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<FieldElement> poly_roots(const DensePoly& f) {
  std::vector<FieldElement> roots;
  auto fac = factor(f);
  for (auto& [g, m] : fac.factors)
    if (g.degree() == 1) roots.push_back(-g.coeff(0) * g.coeff(1).inverse());
  return roots;
}

}  // namespace woundlab
