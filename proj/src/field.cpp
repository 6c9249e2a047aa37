#include "woundlab/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace woundlab {

namespace {

// Arithmetic on small polynomials over Z/p, coefficient vectors with no
// trailing zeros. Only used for spec construction and element arithmetic.

using Raw = std::vector<uint8_t>;

void raw_trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mul(const Raw& a, const Raw& b, int p) {
  if (a.empty() || b.empty()) return {};
  Raw r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint8_t>((r[i + j] + a[i] * b[j]) % p);
  }
  raw_trim(r);
  return r;
}

int mod_inv(int a, int p) {
  int r = 1;
  for (int n = p - 2; n > 0; n >>= 1, a = a * a % p)
    if (n & 1) r = r * a % p;
  return r;
}

// a mod m, m monic-led after scaling (m need not be monic).
Raw raw_mod(Raw a, const Raw& m, int p) {
  raw_trim(a);
  const int lead_inv = mod_inv(m.back(), p);
  while (a.size() >= m.size()) {
    const int q = static_cast<int>(a.back()) * lead_inv % p;
    const size_t off = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[off + i] = static_cast<uint8_t>((a[off + i] + p * p - q * m[i] % p) % p);
    raw_trim(a);
  }
  return a;
}

Raw raw_gcd(Raw a, Raw b, int p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    Raw r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Raw raw_powmod_x(long long n, const Raw& m, int p) {
  // x^n mod m
  Raw base = raw_mod(Raw{0, 1}, m, p);
  Raw r{1};
  while (n > 0) {
    if (n & 1) r = raw_mod(raw_mul(r, base, p), m, p);
    base = raw_mod(raw_mul(base, base, p), m, p);
    n >>= 1;
  }
  return r;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Rabin's test: f of degree e is irreducible over F_p iff x^(p^e) = x mod f
// and gcd(x^(p^(e/l)) - x, f) = 1 for every prime l | e.
bool raw_irreducible(const Raw& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e < 1) return false;
  if (e == 1) return true;
  Raw xq = raw_powmod_x(ipow(p, e), f, p);
  Raw x = raw_mod(Raw{0, 1}, f, p);
  Raw diff = xq;
  diff.resize(std::max(diff.size(), x.size()), 0);
  for (size_t i = 0; i < x.size(); ++i)
    diff[i] = static_cast<uint8_t>((diff[i] + p - x[i]) % p);
  raw_trim(diff);
  if (!diff.empty()) return false;
  for (int l = 2; l <= e; ++l) {
    if (e % l != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    Raw g = raw_powmod_x(ipow(p, e / l), f, p);
    Raw h = g;
    h.resize(std::max(h.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i)
      h[i] = static_cast<uint8_t>((h[i] + p - x[i]) % p);
    raw_trim(h);
    Raw d = raw_gcd(f, h, p);
    if (d.size() != 1) return false;
  }
  return true;
}

Raw find_irreducible(int p, int e) {
  if (e == 1) return Raw{0, 1};  // x
  // Enumerate lower coefficients in counting order; leading coefficient 1.
  const long long count = ipow(p, e);
  for (long long code = 0; code < count; ++code) {
    Raw f(static_cast<size_t>(e) + 1, 0);
    long long c = code;
    for (int i = 0; i < e; ++i) {
      f[static_cast<size_t>(i)] = static_cast<uint8_t>(c % p);
      c /= p;
    }
    f[static_cast<size_t>(e)] = 1;
    if (f[0] == 0) continue;  // divisible by x
    if (raw_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found (unreachable)");
}

std::mutex g_registry_mutex;
std::map<std::pair<int, Raw>, std::unique_ptr<FieldSpec>>& registry() {
  static std::map<std::pair<int, Raw>, std::unique_ptr<FieldSpec>> r;
  return r;
}

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

}  // namespace

const FieldSpec* FieldSpec::get(int p, int e) {
  if (!is_supported_prime(p)) throw DomainError("unsupported characteristic " + std::to_string(p));
  if (e < 1 || e > kMaxExtDegree || ipow(p, e) > (1 << 20))
    throw DomainError("field size out of range");
  return get(p, find_irreducible(p, e));
}

const FieldSpec* FieldSpec::get(int p, Raw modulus) {
  if (!is_supported_prime(p)) throw DomainError("unsupported characteristic " + std::to_string(p));
  raw_trim(modulus);
  const int e = static_cast<int>(modulus.size()) - 1;
  if (e < 1 || e > kMaxExtDegree || ipow(p, e) > (1 << 20))
    throw DomainError("field size out of range");
  for (auto& c : modulus) c = static_cast<uint8_t>(c % p);
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  if (e > 1 && !raw_irreducible(modulus, p)) throw DomainError("modulus is reducible");

  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, modulus);
  auto it = registry().find(key);
  if (it != registry().end()) return it->second.get();
  auto spec = std::make_unique<FieldSpec>();
  spec->p = p;
  spec->e = e;
  spec->modulus = modulus;
  spec->name = "F" + std::to_string(ipow(p, e));
  const FieldSpec* ptr = spec.get();
  registry().emplace(std::move(key), std::move(spec));
  return ptr;
}

long long FieldSpec::size() const { return ipow(p, e); }

FieldElement FieldElement::zero(const FieldSpec* s) {
  FieldElement x;
  x.spec_ = s;
  return x;
}

FieldElement FieldElement::one(const FieldSpec* s) { return from_int(s, 1); }

FieldElement FieldElement::from_int(const FieldSpec* s, long long k) {
  FieldElement x = zero(s);
  long long r = k % s->p;
  if (r < 0) r += s->p;
  x.c_[0] = static_cast<uint8_t>(r);
  return x;
}

FieldElement FieldElement::generator(const FieldSpec* s) {
  FieldElement x = zero(s);
  if (s->e > 1) x.c_[1] = 1;
  return x;
}

FieldElement FieldElement::from_coeffs(const FieldSpec* s, const std::vector<uint8_t>& c) {
  if (static_cast<int>(c.size()) > s->e) throw DomainError("coefficient vector too long");
  FieldElement x = zero(s);
  for (size_t i = 0; i < c.size(); ++i) x.c_[i] = static_cast<uint8_t>(c[i] % s->p);
  return x;
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < spec_->e; ++i)
    if (c_[static_cast<size_t>(i)]) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < spec_->e; ++i)
    if (c_[static_cast<size_t>(i)]) return false;
  return true;
}

std::vector<uint8_t> FieldElement::coeffs() const {
  return std::vector<uint8_t>(c_.begin(), c_.begin() + spec_->e);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  FieldElement r = zero(spec_);
  for (int i = 0; i < spec_->e; ++i)
    r.c_[static_cast<size_t>(i)] =
        static_cast<uint8_t>((c_[static_cast<size_t>(i)] + o.c_[static_cast<size_t>(i)]) % spec_->p);
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
  FieldElement r = zero(spec_);
  for (int i = 0; i < spec_->e; ++i)
    r.c_[static_cast<size_t>(i)] =
        static_cast<uint8_t>((spec_->p - c_[static_cast<size_t>(i)]) % spec_->p);
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  const int p = spec_->p;
  const int e = spec_->e;
  if (e == 1) {
    FieldElement r = zero(spec_);
    r.c_[0] = static_cast<uint8_t>(c_[0] * o.c_[0] % p);
    return r;
  }
  int prod[2 * FieldSpec::kMaxExtDegree] = {0};
  for (int i = 0; i < e; ++i) {
    if (!c_[static_cast<size_t>(i)]) continue;
    for (int j = 0; j < e; ++j)
      prod[i + j] = (prod[i + j] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)]) % p;
  }
  // reduce by the monic modulus
  for (int i = 2 * e - 2; i >= e; --i) {
    const int q = prod[i];
    if (!q) continue;
    prod[i] = 0;
    for (int j = 0; j < e; ++j)
      prod[i - e + j] = (prod[i - e + j] + p * p - q * spec_->modulus[static_cast<size_t>(j)] % p) % p;
  }
  FieldElement r = zero(spec_);
  for (int i = 0; i < e; ++i) r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(prod[i]);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in " + spec_->name);
  // x^(q-2)
  return pow(spec_->size() - 2);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (spec_ != o.spec_) return false;
  for (int i = 0; i < spec_->e; ++i)
    if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
  return true;
}

FieldElement FieldElement::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement r = one(spec_);
  FieldElement b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

FieldElement FieldElement::frobenius(long long s) const {
  s %= spec_->e;
  FieldElement r = *this;
  for (long long i = 0; i < s; ++i) r = r.pow(spec_->p);
  return r;
}

FieldElement FieldElement::pth_root() const {
  // Frobenius is bijective on F_q; its inverse is x -> x^(p^(e-1)).
  return frobenius(spec_->e - 1);
}

FieldElement FieldElement::pth_root_iter(long long s) const {
  FieldElement r = *this;
  for (long long i = 0; i < s; ++i) r = r.pth_root();
  return r;
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = spec_->e - 1; i >= 0; --i) {
    const int c = c_[static_cast<size_t>(i)];
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "w" : "w^" + std::to_string(i);
    }
  }
  return s;
}

size_t FieldElementHash::operator()(const FieldElement& x) const {
  size_t h = std::hash<const void*>()(x.spec_);
  for (int i = 0; i < x.spec_->e; ++i) h = h * 131 + x.c_[static_cast<size_t>(i)];
  return h;
}

std::vector<FieldElement> all_elements(const FieldSpec* s) {
  std::vector<FieldElement> out;
  const long long q = s->size();
  out.reserve(static_cast<size_t>(q));
  for (long long code = 0; code < q; ++code) {
    std::vector<uint8_t> c(static_cast<size_t>(s->e));
    long long v = code;
    for (int i = 0; i < s->e; ++i) {
      c[static_cast<size_t>(i)] = static_cast<uint8_t>(v % s->p);
      v /= s->p;
    }
    out.push_back(FieldElement::from_coeffs(s, c));
  }
  return out;
}

}  // namespace woundlab
