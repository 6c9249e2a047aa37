#include "woundlab/torsor.hpp"

#include <algorithm>

namespace woundlab {

namespace {

long long pow_ll(int b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

LocalRussell LocalRussell::monomial_shape(const FieldSpec* s, int n, int m, int k,
                                          std::optional<FieldElement> unit) {
  LocalRussell lr;
  lr.spec = s;
  lr.p = s->p;
  lr.n = n;
  lr.m = m;
  lr.monomial = true;
  lr.k = k;
  lr.unit = unit.value_or(FieldElement::one(s));
  if (lr.unit.is_zero()) throw DomainError("unit coefficient must be nonzero");
  if (k < 0) throw DomainError("integral model needs v(a_m) >= 0");
  return lr;
}

LocalRussell LocalRussell::general(const FieldSpec* s, int n, std::vector<LaurentSeries> a) {
  LocalRussell lr;
  lr.spec = s;
  lr.p = s->p;
  lr.n = n;
  lr.m = static_cast<int>(a.size());
  lr.monomial = false;
  lr.coeffs = std::move(a);
  if (lr.coeffs.empty() || lr.coeffs.back().is_zero())
    throw DomainError("malformed local model (a_m = 0)");
  for (auto& ai : lr.coeffs)
    if (!ai.is_zero() && ai.valuation() < 0)
      throw DomainError("integral model needs v(a_i) >= 0");
  return lr;
}

LocalRussell::Shape LocalRussell::shape() const {
  if (!monomial) return Shape::General;
  if (p == 2 && n == 1 && m == 1 && k == 1) return Shape::QuasiRational;
  if (p == 3 && n == 1 && m == 1 && (k == 1 || k == 2 || k == 4 || k == 5)) return Shape::Lang3;
  if (p == 2 && n == 1 && m == 2 && (k == 1 || k == 3 || k == 5)) return Shape::P2Deep4;
  if (p == 2 && n == 2 && m == 1 && k == 1) return Shape::P2Case7;
  if (p == 2 && n == 2 && m == 1 && k == 3) return Shape::P2Case9;
  return Shape::General;
}

bool LocalRussell::supported_unique() const {
  switch (shape()) {
    case Shape::Lang3:
    case Shape::P2Deep4:
    case Shape::P2Case7:
    case Shape::P2Case9:
      return true;
    default:
      return false;
  }
}

std::optional<std::pair<long, long>> LocalRussell::terminal_progression() const {
  switch (shape()) {
    case Shape::Lang3:
      return std::make_pair<long, long>(k, 3);
    case Shape::P2Deep4:
      return std::make_pair<long, long>(k, 4);
    case Shape::P2Case7:
      return std::make_pair<long, long>(2, 4);
    case Shape::P2Case9:
      return std::make_pair<long, long>(6, 4);
    case Shape::QuasiRational:
      return std::nullopt;  // empty terminal set: everything reduces to zero
    default:
      return std::nullopt;
  }
}

bool LocalRussell::is_terminal_depth(long j) const {
  auto prog = terminal_progression();
  if (!prog) return false;
  return j >= prog->first && (j - prog->first) % prog->second == 0;
}

std::vector<LaurentSeries> LocalRussell::coefficient_list() const {
  if (!monomial) return coeffs;
  std::vector<LaurentSeries> a(static_cast<size_t>(m), LaurentSeries::zero(spec));
  a.back() = LaurentSeries::monomial(unit, k);
  return a;
}

LaurentSeries LocalRussell::phi(const LaurentSeries& u, const LaurentSeries& v) const {
  if (u.spec() != spec || v.spec() != spec)
    throw DomainError("phi operands must live over the model's field");
  LaurentSeries acc = u.frobenius_pow(n) + v;
  auto a = coefficient_list();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() && a[i].is_exact()) continue;
    acc = acc + a[i] * v.frobenius_pow(static_cast<long long>(i) + 1);
  }
  return acc;
}

namespace {

LaurentSeries phi_over(const LocalRussell& model, const FieldTower& tower,
                       const LaurentSeries& u, const LaurentSeries& v) {
  LaurentSeries acc = u.frobenius_pow(model.n) + v;
  for (size_t i = 0; i < static_cast<size_t>(model.m); ++i) {
    LaurentSeries ai = lift_series(tower, model.coefficient_list()[i]);
    if (ai.is_zero() && ai.is_exact()) continue;
    acc = acc + ai * v.frobenius_pow(static_cast<long long>(i) + 1);
  }
  return acc;
}

void record_extensions(const FieldTower& tower, size_t& seen, std::vector<ReductionMove>& trace) {
  const auto& steps = tower.steps();
  for (; seen < steps.size(); ++seen) {
    ReductionMove mv{ReductionMove::Kind::FieldExtension, 0,
                     LaurentSeries::zero(steps[seen].to), LaurentSeries::zero(steps[seen].to),
                     steps[seen].from->name + " -> " + steps[seen].to->name +
                         " splitting " + steps[seen].reason};
    trace.push_back(std::move(mv));
  }
}

}  // namespace

NormalForm reduce(const TorsorClass& t, long work_precision) {
  // The one input normalization on offer: for p = 3 the substitution
  // (u, v) -> (t^a u, t^(3a) v) shifts k by 6a and scales the class by
  // t^(-3a), so k >= 7 prime to 3 drops into the Lang range {1,2,4,5}.
  if (t.model.monomial && t.model.p == 3 && t.model.n == 1 && t.model.m == 1 &&
      t.model.k > 5 && t.model.k % 3 != 0) {
    int k0 = t.model.k % 6;
    const long shift = (t.model.k - k0) / 2;  // -3a
    LocalRussell lowered =
        LocalRussell::monomial_shape(t.model.spec, 1, 1, k0, t.model.unit);
    NormalForm nf = reduce({lowered, t.f.shifted(shift)}, work_precision);
    nf.trace.insert(nf.trace.begin(),
                    {ReductionMove::Kind::Normalize, shift, LaurentSeries::zero(t.model.spec),
                     LaurentSeries::zero(t.model.spec),
                     "normalized k = " + std::to_string(t.model.k) + " to " +
                         std::to_string(k0) + " via (u,v) -> (t^a u, t^(3a) v), class scaled by t^" +
                         std::to_string(shift)});
    return nf;
  }

  const LocalRussell& lr = t.model;
  const auto sh = lr.shape();
  if (!lr.supported_unique() && sh != LocalRussell::Shape::QuasiRational)
    throw DomainError("reduce: unsupported local shape (no canonical representative)");
  if (t.f.spec() != lr.spec) throw DomainError("class and model field mismatch");

  const long pmax = static_cast<long>(pow_ll(lr.p, std::max(lr.n, lr.m)));
  if (t.f.precision() < 1)
    throw PrecisionError("reduce: negative coefficients of f are not all known");
  if (!t.f.is_exact() && t.f.precision() < 2 * pmax)
    throw PrecisionError("reduce: precision horizon too close to certify a normal form");

  NormalForm nf(lr.spec);
  size_t seen_steps = 0;

  LaurentSeries work = t.f.negative_part();         // exact, base field
  LaurentSeries junk = t.f.nonnegative_part();      // absorbed at the end
  const long long pn_pow = pow_ll(lr.p, lr.n);
  const long long pm_pow = pow_ll(lr.p, lr.m);
  const FieldElement u_hat = lr.unit;

  long guard = (work.is_zero() ? 0 : -work.min_exponent()) * 4 + 64;
  while (guard-- > 0) {
    // deepest non-terminal depth
    long depth = 0;
    FieldElement c = FieldElement::zero(lr.spec);
    for (auto& [e, ce] : work.coeff_map()) {
      if (e >= 0) break;
      if (!lr.is_terminal_depth(-e)) {
        depth = -e;
        c = ce;
        break;
      }
    }
    if (depth == 0) break;
    const long j = depth;

    if (j % pn_pow == 0) {
      // u-move: u = c^(1/p^n) t^(-j/p^n) cancels c t^(-j) with no side terms
      FieldElement gamma = c.pth_root_iter(lr.n);
      ReductionMove mv{ReductionMove::Kind::UMove, j,
                       LaurentSeries::monomial(gamma, -j / pn_pow), LaurentSeries::zero(lr.spec),
                       "u^" + std::to_string(pn_pow) + " = " + c.to_string() + " t^-" + std::to_string(j)};
      work = work - LaurentSeries::monomial(c, -j);
      nf.trace.push_back(std::move(mv));
      continue;
    }

    if ((j + lr.k) % pm_pow == 0) {
      const long l = (j + lr.k) / pm_pow;
      if (l < j) {
        // trade: v = gamma t^(-l), deep term u_hat gamma^(p^m) t^(-j) cancels c
        FieldElement gamma = (c * u_hat.inverse()).pth_root_iter(lr.m);
        LaurentSeries vp = LaurentSeries::monomial(gamma, -l);
        work = work - LaurentSeries::monomial(gamma, -l) - LaurentSeries::monomial(c, -j);
        nf.trace.push_back({ReductionMove::Kind::VMoveTrade, j, LaurentSeries::zero(lr.spec), vp,
                            "gamma^" + std::to_string(pm_pow) + " = (" + c.to_string() +
                                ")/unit, companion left at t^-" + std::to_string(l)});
        continue;
      }
      if (l == j) {
        // self-move: both contributions sit at t^(-j);
        // solve gamma + u_hat gamma^(p^m) = c (may extend the field)
        DensePoly g = DensePoly::monomial(FieldElement::one(lr.spec), 1) +
                      DensePoly::monomial(u_hat, static_cast<int>(pm_pow)) -
                      DensePoly::constant(c);
        FieldElement gamma = nf.tower.find_root(g);
        record_extensions(nf.tower, seen_steps, nf.trace);
        LaurentSeries vp = LaurentSeries::monomial(gamma, -j);
        work = work - LaurentSeries::monomial(c, -j);
        nf.trace.push_back({ReductionMove::Kind::SelfMove, j, LaurentSeries::zero(nf.tower.top()), vp,
                            "gamma + unit*gamma^" + std::to_string(pm_pow) + " = " + c.to_string() +
                                " over " + nf.tower.top()->name});
        continue;
      }
      // l > j falls through to the erase move below
    }

    if (static_cast<long long>(j) * (pm_pow - 1) < lr.k) {
      // erase: v = c t^(-j) kills the target via its linear term; the deep
      // companion u_hat c^(p^m) t^(k - p^m j) lands strictly shallower
      FieldElement comp = u_hat * c.pow(pm_pow);
      const long ce = lr.k - static_cast<long>(pm_pow) * j;
      LaurentSeries vp = LaurentSeries::monomial(c, -j);
      work = work - LaurentSeries::monomial(c, -j);
      if (ce < 0)
        work = work - LaurentSeries::monomial(comp, ce);
      else
        junk = junk - LaurentSeries::monomial(comp, ce);
      nf.trace.push_back({ReductionMove::Kind::VMoveErase, j, LaurentSeries::zero(lr.spec), vp,
                          "linear term cancels; companion at t^" + std::to_string(ce)});
      continue;
    }

    throw DomainError("reduce: depth " + std::to_string(j) +
                      " escaped the stated terminal shape (defect)");
  }
  if (guard <= 0) throw DomainError("reduce: move loop failed to terminate");

  // absorb the nonnegative remainder: v + sum a_i v^(p^i) = junk
  if (!(junk.is_zero() && junk.is_exact())) {
    long N = std::min(junk.precision(), work_precision);
    std::vector<LaurentSeries> a_list;
    for (auto& ai : lr.coefficient_list()) a_list.push_back(lift_series(nf.tower, ai));
    LaurentSeries vh = hensel_solve(nf.tower, a_list, lift_series(nf.tower, junk), N);
    record_extensions(nf.tower, seen_steps, nf.trace);
    nf.trace.push_back({ReductionMove::Kind::HenselAbsorb, 0, LaurentSeries::zero(nf.tower.top()),
                        vh, "nonnegative part absorbed to precision " + std::to_string(N)});
  }

  nf.reduced = work;
  nf.trivial = work.is_zero();
  if (auto prog = lr.terminal_progression()) {
    nf.lang_k = prog->first;
    if (!work.is_zero())
      nf.lang_degree = (-work.min_exponent() - prog->first) / prog->second;
  }
  // certify the terminal support
  for (auto& [e, ce] : nf.reduced.coeff_map())
    if (!lr.is_terminal_depth(-e))
      throw DomainError("reduce: result support escaped the terminal set (defect)");
  return nf;
}

LaurentSeries replay_trace(const TorsorClass& t, const NormalForm& nf) {
  LocalRussell model = t.model;
  LaurentSeries f = t.f;
  size_t start = 0;
  if (!nf.trace.empty() && nf.trace[0].kind == ReductionMove::Kind::Normalize) {
    const long shift = nf.trace[0].depth;  // k0 = k - 2*shift
    model = LocalRussell::monomial_shape(t.model.spec, t.model.n, t.model.m,
                                         t.model.k - static_cast<int>(2 * shift), t.model.unit);
    f = f.shifted(shift);
    start = 1;
  }
  LaurentSeries acc = lift_series(nf.tower, f);
  for (size_t i = start; i < nf.trace.size(); ++i) {
    auto& mv = nf.trace[i];
    if (mv.kind == ReductionMove::Kind::FieldExtension) continue;
    LaurentSeries u = lift_series(nf.tower, mv.u_piece);
    LaurentSeries v = lift_series(nf.tower, mv.v_piece);
    acc = acc - phi_over(model, nf.tower, u, v);
  }
  return acc;
}

std::optional<std::pair<LaurentSeries, LaurentSeries>> image_membership_search(
    const LocalRussell& model, const LaurentSeries& f, long bound) {
  const FieldSpec* s = model.spec;
  const int p = s->p;
  const int e = s->e;
  const long Bu = bound, Bv = bound;
  const LaurentSeries target = f.negative_part();
  const auto a_list = model.coefficient_list();
  const long long pn_pow = pow_ll(p, model.n);

  // Collect output exponents: images of each unknown coefficient.
  // unknown u_j (j=1..Bu): contributes u_j^(p^n) at -p^n j
  // unknown v_j (j=1..Bv): contributes v_j at -j and a_i v_j^(p^i) spread over
  // the support of a_i shifted by -p^i j.
  std::map<long, int> eq_index;  // negative exponent -> equation block
  auto touch = [&](long exp) {
    if (exp < 0 && !eq_index.count(exp)) {
      int idx = static_cast<int>(eq_index.size());
      eq_index[exp] = idx;
    }
  };
  for (long j = 1; j <= Bu; ++j) touch(-pn_pow * j);
  for (long j = 1; j <= Bv; ++j) {
    touch(-j);
    for (size_t i = 0; i < a_list.size(); ++i) {
      if (a_list[i].is_zero()) continue;
      const long long pi = pow_ll(p, static_cast<int>(i) + 1);
      for (auto& [ae, ac] : a_list[i].coeff_map()) touch(ae - pi * j);
    }
  }
  for (auto& [exp, c] : target.coeff_map()) touch(exp);

  const int unknowns = static_cast<int>((Bu + Bv) * e);
  const int rows = static_cast<int>(eq_index.size()) * e;
  if (rows == 0) {
    auto z = LaurentSeries::zero(s);
    return f.negative_part().is_zero() ? std::optional(std::make_pair(z, z)) : std::nullopt;
  }
  std::vector<std::vector<int>> mat(static_cast<size_t>(rows),
                                    std::vector<int>(static_cast<size_t>(unknowns) + 1, 0));

  // The F_p-linear action of x -> coeff * x^(p^r) on F_q, as an e x e matrix.
  auto add_block = [&](long out_exp, int col_base, const FieldElement& mult, int frob) {
    auto it = eq_index.find(out_exp);
    if (it == eq_index.end()) return;
    const int row_base = it->second * e;
    FieldElement w = FieldElement::generator(s);
    FieldElement basis = FieldElement::one(s);
    for (int cb = 0; cb < e; ++cb) {
      FieldElement img = basis.frobenius(frob) * mult;
      for (int rb = 0; rb < e; ++rb)
        mat[static_cast<size_t>(row_base + rb)][static_cast<size_t>(col_base + cb)] =
            (mat[static_cast<size_t>(row_base + rb)][static_cast<size_t>(col_base + cb)] +
             img.coeff(rb)) %
            p;
      basis = basis * w;
    }
  };

  for (long j = 1; j <= Bu; ++j)
    add_block(-pn_pow * j, static_cast<int>(j - 1) * e, FieldElement::one(s), model.n);
  for (long j = 1; j <= Bv; ++j) {
    const int col = static_cast<int>(Bu + j - 1) * e;
    add_block(-j, col, FieldElement::one(s), 0);
    for (size_t i = 0; i < a_list.size(); ++i) {
      if (a_list[i].is_zero()) continue;
      const long long pi = pow_ll(p, static_cast<int>(i) + 1);
      for (auto& [ae, ac] : a_list[i].coeff_map())
        add_block(ae - pi * j, col, ac, static_cast<int>(i) + 1);
    }
  }
  for (auto& [exp, idx] : eq_index) {
    FieldElement c = target.coeff(exp);
    for (int rb = 0; rb < e; ++rb)
      mat[static_cast<size_t>(idx * e + rb)].back() = c.coeff(rb);
  }

  // Gaussian elimination over F_p.
  std::vector<int> pivot_of_col(static_cast<size_t>(unknowns), -1);
  int row = 0;
  for (int col = 0; col < unknowns && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[static_cast<size_t>(pr)], mat[static_cast<size_t>(row)]);
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (x * mat[static_cast<size_t>(row)][static_cast<size_t>(col)] % p == 1) inv = x;
    for (auto& v : mat[static_cast<size_t>(row)]) v = v * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      const int fct = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (!fct) continue;
      for (int c2 = 0; c2 <= unknowns; ++c2)
        mat[static_cast<size_t>(r)][static_cast<size_t>(c2)] =
            (mat[static_cast<size_t>(r)][static_cast<size_t>(c2)] + p * p -
             fct * mat[static_cast<size_t>(row)][static_cast<size_t>(c2)] % p) %
            p;
    }
    pivot_of_col[static_cast<size_t>(col)] = row;
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (mat[static_cast<size_t>(r)].back()) return std::nullopt;

  std::vector<int> sol(static_cast<size_t>(unknowns), 0);
  for (int col = 0; col < unknowns; ++col)
    if (pivot_of_col[static_cast<size_t>(col)] >= 0)
      sol[static_cast<size_t>(col)] =
          mat[static_cast<size_t>(pivot_of_col[static_cast<size_t>(col)])].back();

  auto unpack = [&](int col_base) {
    std::vector<uint8_t> cs(static_cast<size_t>(e));
    for (int i = 0; i < e; ++i) cs[static_cast<size_t>(i)] = static_cast<uint8_t>(sol[static_cast<size_t>(col_base + i)]);
    return FieldElement::from_coeffs(s, cs);
  };
  std::map<long, FieldElement> um, vm;
  for (long j = 1; j <= Bu; ++j) {
    FieldElement c = unpack(static_cast<int>(j - 1) * e);
    if (!c.is_zero()) um.emplace(-j, c);
  }
  for (long j = 1; j <= Bv; ++j) {
    FieldElement c = unpack(static_cast<int>(Bu + j - 1) * e);
    if (!c.is_zero()) vm.emplace(-j, c);
  }
  return std::make_pair(LaurentSeries::from_coeff_map(s, um),
                        LaurentSeries::from_coeff_map(s, vm));
}

Verdict is_trivial(const TorsorClass& t, long search_bound) {
  const auto sh = t.model.shape();
  const bool k_normalizable = t.model.monomial && t.model.p == 3 && t.model.n == 1 &&
                              t.model.m == 1 && t.model.k % 3 != 0;
  if (t.model.supported_unique() || sh == LocalRussell::Shape::QuasiRational || k_normalizable) {
    NormalForm nf = reduce(t);
    return nf.trivial ? Verdict::True : Verdict::False;
  }
  auto witness = image_membership_search(t.model, t.f, search_bound);
  return witness ? Verdict::True : Verdict::Unknown;
}

}  // namespace woundlab
