#include "woundlab/expr.hpp"

#include <array>
#include <cctype>
#include <map>

namespace woundlab {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::shared_ptr<Expr> parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::shared_ptr<Expr> expr() {
    auto lhs = term();
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        char op = get();
        auto rhs = term();
        auto node = std::make_shared<Expr>();
        node->kind = op == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
        node->args = {lhs, rhs};
        lhs = node;
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<Expr> term() {
    auto lhs = unary();
    while (true) {
      skip_ws();
      if (peek() == '*' || peek() == '/') {
        char op = get();
        auto rhs = unary();
        auto node = std::make_shared<Expr>();
        node->kind = op == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
        node->args = {lhs, rhs};
        lhs = node;
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<Expr> unary() {
    skip_ws();
    if (peek() == '-') {
      get();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Neg;
      node->args = {unary()};
      return node;
    }
    return factor();
  }

  std::shared_ptr<Expr> factor() {
    auto base = primary();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        get();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("exponent must be an integer", pos_);
      long long v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Pow;
      node->exponent = neg ? -v : v;
      node->args = {base};
      return node;
    }
    return base;
  }

  std::shared_ptr<Expr> primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      auto e = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      get();
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Number;
      node->number = v;
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      name += get();
      while (std::isalnum(static_cast<unsigned char>(peek()))) name += get();
      static const std::array<const char*, 7> known{"t", "s", "u", "v", "w", "t0", "t1"};
      bool ok = false;
      for (auto* k : known) ok = ok || name == k;
      if (!ok) throw ParseError("unknown variable '" + name + "'", pos_);
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Variable;
      node->var = name;
      return node;
    }
    throw ParseError("expected a number, variable or '('", pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  const std::string& s_;
  size_t pos_ = 0;
};

// Uniform evaluator over any field-like K given a variable table.
template <class K>
K eval_generic(const Expr& e, const FieldSpec* s, const std::map<std::string, K>& vars) {
  switch (e.kind) {
    case Expr::Kind::Number: {
      K one = K::one(s);
      K acc = K::zero(s);
      long long n = e.number % s->p;
      for (long long i = 0; i < n; ++i) acc = acc + one;
      return acc;
    }
    case Expr::Kind::Variable: {
      auto it = vars.find(e.var);
      if (it == vars.end())
        throw DomainError("variable '" + e.var + "' is not valid in this context");
      return it->second;
    }
    case Expr::Kind::Add:
      return eval_generic(*e.args[0], s, vars) + eval_generic(*e.args[1], s, vars);
    case Expr::Kind::Sub:
      return eval_generic(*e.args[0], s, vars) - eval_generic(*e.args[1], s, vars);
    case Expr::Kind::Neg:
      return -eval_generic(*e.args[0], s, vars);
    case Expr::Kind::Mul:
      return eval_generic(*e.args[0], s, vars) * eval_generic(*e.args[1], s, vars);
    case Expr::Kind::Div:
      return eval_generic(*e.args[0], s, vars) / eval_generic(*e.args[1], s, vars);
    case Expr::Kind::Pow:
      return eval_generic(*e.args[0], s, vars).pow(e.exponent);
  }
  throw DomainError("unreachable expression kind");
}

}  // namespace

std::shared_ptr<Expr> parse_expression(const std::string& text) { return Parser(text).parse(); }

const FieldSpec* parse_field_spec(const std::string& text) {
  if (text.empty() || (text[0] != 'F' && text[0] != 'f'))
    throw DomainError("field spec must look like F9 or F4:w^2+w+1");
  const size_t colon = text.find(':');
  const std::string qs = text.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
  long long q = std::stoll(qs);
  int p = 0, e = 0;
  for (int cand : {2, 3, 5, 7}) {
    long long v = q;
    int deg = 0;
    while (v % cand == 0) {
      v /= cand;
      ++deg;
    }
    if (v == 1 && deg >= 1) {
      p = cand;
      e = deg;
      break;
    }
  }
  if (p == 0) throw DomainError("field size " + std::to_string(q) + " is not a supported prime power");
  if (colon == std::string::npos) return FieldSpec::get(p, e);
  // parse the modulus in w over F_p
  auto ast = parse_expression(text.substr(colon + 1));
  const FieldSpec* prime = FieldSpec::get(p, 1);
  std::map<std::string, RatFunc> vars{{"w", RatFunc::variable(prime)}};
  RatFunc f = eval_generic(*ast, prime, vars);
  if (!f.is_polynomial()) throw DomainError("modulus must be a polynomial in w");
  std::vector<uint8_t> mod;
  for (int i = 0; i <= f.num().degree(); ++i) mod.push_back(f.num().coeff(i).coeff(0));
  return FieldSpec::get(p, mod);
}

FieldElement eval_field_element(const Expr& e, const FieldSpec* s) {
  // evaluate in the field itself; w is the generator
  struct FE {
    FieldElement x;
    static FE zero(const FieldSpec* s) { return {FieldElement::zero(s)}; }
    static FE one(const FieldSpec* s) { return {FieldElement::one(s)}; }
    FE operator+(const FE& o) const { return {x + o.x}; }
    FE operator-(const FE& o) const { return {x - o.x}; }
    FE operator-() const { return {-x}; }
    FE operator*(const FE& o) const { return {x * o.x}; }
    FE operator/(const FE& o) const { return {x / o.x}; }
    FE pow(long long n) const { return {x.pow(n)}; }
  };
  std::map<std::string, FE> vars{{"w", {FieldElement::generator(s)}}};
  return eval_generic(e, s, vars).x;
}

RatFunc eval_ratfunc(const Expr& e, const FieldSpec* s) {
  std::map<std::string, RatFunc> vars{{"t", RatFunc::variable(s)},
                                      {"w", RatFunc::constant(FieldElement::generator(s))}};
  return eval_generic(e, s, vars);
}

BivarRatFunc eval_bivar(const Expr& e, const FieldSpec* s) {
  std::map<std::string, BivarRatFunc> vars{
      {"t", BivarRatFunc::var_t(s)},
      {"s", BivarRatFunc::var_s(s)},
      {"w", BivarRatFunc::constant(FieldElement::generator(s))}};
  return eval_generic(e, s, vars);
}

namespace {

// Laurent evaluation needs division and negative powers restricted to
// invertible values; wrap the series with a monomial-only inverse.
struct LV {
  LaurentSeries x;
  static LV zero(const FieldSpec* s) { return {LaurentSeries::zero(s)}; }
  static LV one(const FieldSpec* s) { return {LaurentSeries::one(s)}; }
  LV operator+(const LV& o) const { return {x + o.x}; }
  LV operator-(const LV& o) const { return {x - o.x}; }
  LV operator-() const { return {-x}; }
  LV operator*(const LV& o) const { return {x * o.x}; }
  LV inverse() const {
    auto m = x.coeff_map();
    if (!x.is_exact() || m.size() != 1)
      throw DomainError("series division is only supported by monomials");
    auto [e, c] = *m.begin();
    return {LaurentSeries::monomial(c.inverse(), -e)};
  }
  LV operator/(const LV& o) const { return *this * o.inverse(); }
  LV pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    LV r = {LaurentSeries::one(x.spec())};
    LV b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }
};

}  // namespace

LaurentSeries eval_laurent(const Expr& e, const FieldSpec* s) {
  std::map<std::string, LV> vars{{"t", {LaurentSeries::variable(s)}},
                                 {"w", {LaurentSeries::monomial(FieldElement::generator(s), 0)}}};
  return eval_generic(e, s, vars).x;
}

BinaryForm eval_binary_form(const Expr& e, const FieldSpec* s) {
  // reuse the bivariate polynomial machinery with s-slot = t0, t-slot = t1
  struct BF {
    BivarPoly x;
    static BF zero(const FieldSpec* s) { return {BivarPoly::zero(s)}; }
    static BF one(const FieldSpec* s) { return {BivarPoly::one(s)}; }
    BF operator+(const BF& o) const { return {x + o.x}; }
    BF operator-(const BF& o) const { return {x - o.x}; }
    BF operator-() const { return {-x}; }
    BF operator*(const BF& o) const { return {x * o.x}; }
    BF operator/(const BF&) const {
      throw DomainError("binary forms do not support division");
    }
    BF pow(long long n) const {
      if (n < 0) throw DomainError("binary forms need nonnegative exponents");
      return {x.pow(n)};
    }
  };
  std::map<std::string, BF> vars{{"t0", {BivarPoly::var_s(s)}},
                                 {"t1", {BivarPoly::var_t(s)}},
                                 {"w", {BivarPoly::monomial(FieldElement::generator(s), 0, 0)}}};
  BivarPoly p = eval_generic(e, s, vars).x;
  if (p.is_zero()) return BinaryForm::zero(s, 0);
  long degree = -1;
  for (auto& [k, c] : p.terms()) {
    long total = k.first + k.second;
    if (degree < 0) degree = total;
    if (total != degree) throw DomainError("binary form is not homogeneous");
  }
  BinaryForm out = BinaryForm::zero(s, degree);
  for (auto& [k, c] : p.terms()) out.c[static_cast<size_t>(k.first)] = c;
  return out;
}

namespace {

// Sparse multinomial in (s, t, u, v) with field coefficients; the carrier for
// reading Russell equations off a parsed expression.
struct Multi {
  const FieldSpec* spec;
  std::map<std::array<int, 4>, FieldElement> m;

  static Multi zero(const FieldSpec* s) { return {s, {}}; }
  static Multi one(const FieldSpec* s) {
    return {s, {{{0, 0, 0, 0}, FieldElement::one(s)}}};
  }
  void insert(std::array<int, 4> k, const FieldElement& c) {
    auto it = m.find(k);
    if (it == m.end()) {
      if (!c.is_zero()) m.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
  Multi operator+(const Multi& o) const {
    Multi r = *this;
    for (auto& [k, c] : o.m) r.insert(k, c);
    return r;
  }
  Multi operator-() const {
    Multi r = *this;
    for (auto& [k, c] : r.m) c = -c;
    return r;
  }
  Multi operator-(const Multi& o) const { return *this + (-o); }
  Multi operator*(const Multi& o) const {
    Multi r = zero(spec);
    for (auto& [ka, ca] : m)
      for (auto& [kb, cb] : o.m)
        r.insert({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]}, ca * cb);
    return r;
  }
  Multi operator/(const Multi&) const {
    throw DomainError("division is not allowed inside Russell equations");
  }
  Multi pow(long long n) const {
    if (n < 0) throw DomainError("negative powers are not allowed inside Russell equations");
    Multi r = one(spec);
    Multi b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }
};

Multi eval_multi(const Expr& e, const FieldSpec* s) {
  std::map<std::string, Multi> vars{
      {"s", {s, {{{1, 0, 0, 0}, FieldElement::one(s)}}}},
      {"t", {s, {{{0, 1, 0, 0}, FieldElement::one(s)}}}},
      {"u", {s, {{{0, 0, 1, 0}, FieldElement::one(s)}}}},
      {"v", {s, {{{0, 0, 0, 1}, FieldElement::one(s)}}}},
      {"w", {s, {{{0, 0, 0, 0}, FieldElement::generator(s)}}}}};
  return eval_generic(e, s, vars);
}

int p_log(long long x, int p) {
  int n = 0;
  while (x > 1 && x % p == 0) {
    x /= p;
    ++n;
  }
  if (x != 1) return -1;
  return n;
}

template <class K, class MonomialToK>
RussellEquation<K> russell_from_multi(const Multi& mm, const FieldSpec* s,
                                      MonomialToK mono_to_k, bool allow_s) {
  const int p = s->p;
  int n = -1;
  std::map<int, std::vector<std::pair<std::array<int, 4>, FieldElement>>> v_groups;
  for (auto& [k, c] : mm.m) {
    if (!allow_s && k[0] != 0) throw DomainError("unexpected variable s in a univariate equation");
    if (k[1] < 0 || k[0] < 0) throw DomainError("negative exponents in a Russell equation");
    const int eu = k[2], ev = k[3];
    if (eu > 0) {
      if (ev != 0 || k[0] != 0 || k[1] != 0 || !c.is_one())
        throw DomainError("the u-part must be a bare power u^(p^n)");
      int nn = p_log(eu, p);
      if (nn < 1) throw DomainError("u-exponent must be p^n with n >= 1");
      if (n >= 0) throw DomainError("multiple u-terms");
      n = nn;
    } else if (ev > 0) {
      int i = p_log(ev, p);
      if (i < 0) throw DomainError("v-exponent must be a power of p");
      v_groups[i].push_back({k, c});
    } else {
      throw DomainError("constant terms are not part of a Russell equation");
    }
  }
  if (n < 0) throw DomainError("missing u^(p^n) term");
  if (!v_groups.count(0)) throw DomainError("missing linear v term");
  // v-term must be exactly v
  if (v_groups[0].size() != 1 || v_groups[0][0].first[0] != 0 || v_groups[0][0].first[1] != 0 ||
      !v_groups[0][0].second.is_one())
    throw DomainError("the linear v term must have coefficient 1");
  int m = 0;
  for (auto& [i, terms] : v_groups) m = std::max(m, i);
  if (m < 1) throw DomainError("the equation needs some a_i v^(p^i) with i >= 1");
  RussellEquation<K> out;
  out.p = p;
  out.n = n;
  out.a.assign(static_cast<size_t>(m), K::zero(s));
  for (auto& [i, terms] : v_groups) {
    if (i == 0) continue;
    K acc = K::zero(s);
    for (auto& [k, c] : terms) acc = acc + mono_to_k(k[0], k[1], c);
    out.a[static_cast<size_t>(i) - 1] = acc;
  }
  out.validate();
  return out;
}

}  // namespace

RussellEquation<RatFunc> eval_russell(const Expr& e, const FieldSpec* s) {
  Multi mm = eval_multi(e, s);
  return russell_from_multi<RatFunc>(
      mm, s,
      [&](int, int et, const FieldElement& c) {
        return RatFunc::from_poly(DensePoly::monomial(c, et));
      },
      false);
}

RussellEquation<BivarRatFunc> eval_russell_bivar(const Expr& e, const FieldSpec* s) {
  Multi mm = eval_multi(e, s);
  return russell_from_multi<BivarRatFunc>(
      mm, s,
      [&](int es, int et, const FieldElement& c) {
        return BivarRatFunc::from_poly(BivarPoly::monomial(c, es, et));
      },
      true);
}

RussellEquation<RatFunc> parse_russell_compact(const std::string& text, const FieldSpec* s) {
  int p = -1, n = -1;
  std::vector<RatFunc> a;
  bool saw_a = false;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    size_t eq = text.find('=', i);
    if (eq == std::string::npos) throw ParseError("expected key=value", i);
    std::string key = text.substr(i, eq - i);
    key.erase(key.find_last_not_of(" \t") + 1);
    i = eq + 1;
    skip_ws();
    if (key == "p" || key == "n") {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected an integer", i);
      (key == "p" ? p : n) = std::stoi(text.substr(start, i - start));
    } else if (key == "a") {
      if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
      ++i;
      size_t close = text.find(']', i);
      if (close == std::string::npos) throw ParseError("missing ']'", i);
      std::string body = text.substr(i, close - i);
      i = close + 1;
      size_t pos = 0;
      while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string item =
            body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.find_first_not_of(" \t") != std::string::npos)
          a.push_back(parse_ratfunc(item, s));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      saw_a = true;
    } else {
      throw ParseError("unknown key '" + key + "'", i);
    }
  }
  if (p < 0 || n < 0 || !saw_a)
    throw DomainError("compact Russell form needs p=, n= and a=[...]");
  if (p != s->p)
    throw DomainError("p=" + std::to_string(p) + " disagrees with the field characteristic");
  RussellEquation<RatFunc> r{p, n, std::move(a)};
  r.validate();
  return r;
}

RatFunc parse_ratfunc(const std::string& text, const FieldSpec* s) {
  return eval_ratfunc(*parse_expression(text), s);
}
BivarRatFunc parse_bivar(const std::string& text, const FieldSpec* s) {
  return eval_bivar(*parse_expression(text), s);
}
LaurentSeries parse_laurent(const std::string& text, const FieldSpec* s) {
  return eval_laurent(*parse_expression(text), s);
}
BinaryForm parse_binary_form(const std::string& text, const FieldSpec* s) {
  return eval_binary_form(*parse_expression(text), s);
}
FieldElement parse_field_element(const std::string& text, const FieldSpec* s) {
  return eval_field_element(*parse_expression(text), s);
}

}  // namespace woundlab
