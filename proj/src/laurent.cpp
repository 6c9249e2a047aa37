#include "woundlab/laurent.hpp"

#include <algorithm>

namespace woundlab {

namespace {
long add_clamped(long a, long b) {
  if (a >= LaurentSeries::kExact / 2 || b >= LaurentSeries::kExact / 2) return LaurentSeries::kExact;
  return a + b;
}
long mul_clamped(long a, long long f) {
  if (a >= LaurentSeries::kExact / 2) return LaurentSeries::kExact;
  long long r = static_cast<long long>(a) * f;
  if (r >= LaurentSeries::kExact / 2) return LaurentSeries::kExact;
  if (r <= -(LaurentSeries::kExact / 2)) throw DomainError("exponent underflow");
  return static_cast<long>(r);
}
}  // namespace

void LaurentSeries::normalize() {
  // drop window entries at or beyond precision
  if (!c_.empty() && v0_ + static_cast<long>(c_.size()) > prec_) {
    long keep = prec_ - v0_;
    if (keep <= 0)
      c_.clear();
    else
      c_.resize(static_cast<size_t>(keep));
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    v0_ += static_cast<long>(lead);
  }
  if (c_.empty()) v0_ = 0;
}

LaurentSeries LaurentSeries::monomial(const FieldElement& c, long exp) {
  LaurentSeries r(c.spec());
  if (!c.is_zero()) {
    r.v0_ = exp;
    r.c_.push_back(c);
  }
  return r;
}

LaurentSeries LaurentSeries::from_coeff_map(const FieldSpec* s,
                                            const std::map<long, FieldElement>& coeffs,
                                            long prec) {
  LaurentSeries r(s);
  r.prec_ = prec;
  if (!coeffs.empty()) {
    r.v0_ = coeffs.begin()->first;
    long top = coeffs.rbegin()->first;
    r.c_.assign(static_cast<size_t>(top - r.v0_) + 1, FieldElement::zero(s));
    for (auto& [e, c] : coeffs) r.c_[static_cast<size_t>(e - r.v0_)] = c;
  }
  r.normalize();
  return r;
}

long LaurentSeries::valuation() const {
  if (!c_.empty()) return v0_;
  if (is_exact()) return kExact;  // exact zero: +infinity by convention
  throw PrecisionError("valuation of a series that vanishes to precision " +
                       std::to_string(prec_));
}

FieldElement LaurentSeries::coeff(long e) const {
  if (e >= prec_)
    throw PrecisionError("coefficient at t^" + std::to_string(e) + " beyond precision " +
                         std::to_string(prec_));
  if (c_.empty() || e < v0_ || e >= v0_ + static_cast<long>(c_.size()))
    return FieldElement::zero(spec_);
  return c_[static_cast<size_t>(e - v0_)];
}

const std::map<long, FieldElement> LaurentSeries::coeff_map() const {
  std::map<long, FieldElement> m;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) m.emplace(v0_ + static_cast<long>(i), c_[i]);
  return m;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  LaurentSeries r(spec_);
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) {
    r.normalize();
    return r;
  }
  long lo = std::min(c_.empty() ? o.v0_ : v0_, o.c_.empty() ? v0_ : o.v0_);
  long hi_a = c_.empty() ? lo : v0_ + static_cast<long>(c_.size());
  long hi_b = o.c_.empty() ? lo : o.v0_ + static_cast<long>(o.c_.size());
  long hi = std::min(std::max(hi_a, hi_b), r.prec_ == kExact ? std::max(hi_a, hi_b) : r.prec_);
  if (hi <= lo) {
    r.normalize();
    return r;
  }
  r.v0_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo), FieldElement::zero(spec_));
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = v0_ + static_cast<long>(i);
    if (e < lo || e >= hi) continue;
    r.c_[static_cast<size_t>(e - lo)] = r.c_[static_cast<size_t>(e - lo)] + c_[i];
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    long e = o.v0_ + static_cast<long>(i);
    if (e < lo || e >= hi) continue;
    r.c_[static_cast<size_t>(e - lo)] = r.c_[static_cast<size_t>(e - lo)] + o.c_[i];
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (spec_ != o.spec_) throw DomainError("field mismatch");
  LaurentSeries r(spec_);
  // Result precision: unknown tail of one factor times the other factor's
  // leading term. An all-zero window acts as valuation = precision.
  long va = c_.empty() ? prec_ : v0_;
  long vb = o.c_.empty() ? o.prec_ : o.v0_;
  r.prec_ = std::min(add_clamped(prec_, vb), add_clamped(o.prec_, va));
  if (c_.empty() || o.c_.empty()) {
    r.normalize();
    return r;
  }
  r.v0_ = v0_ + o.v0_;
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(spec_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  return spec_ == o.spec_ && v0_ == o.v0_ && prec_ == o.prec_ && [&] {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }();
}

LaurentSeries LaurentSeries::frobenius_pow(long long s) const {
  long long q = 1;
  for (long long i = 0; i < s; ++i) q *= spec_->p;
  LaurentSeries r(spec_);
  r.prec_ = mul_clamped(prec_, q);
  std::map<long, FieldElement> m;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    m.emplace(mul_clamped(v0_ + static_cast<long>(i), q), c_[i].pow(q));
  }
  LaurentSeries out = from_coeff_map(spec_, m, r.prec_);
  return out;
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
  LaurentSeries r = *this;
  r.prec_ = std::min(prec_, new_prec);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::negative_part() const {
  std::map<long, FieldElement> m;
  for (auto& [e, c] : coeff_map())
    if (e < 0) m.emplace(e, c);
  return from_coeff_map(spec_, m, kExact);
}

LaurentSeries LaurentSeries::nonnegative_part() const {
  std::map<long, FieldElement> m;
  for (auto& [e, c] : coeff_map())
    if (e >= 0) m.emplace(e, c);
  return from_coeff_map(spec_, m, prec_);
}

LaurentSeries LaurentSeries::shifted(long shift) const {
  LaurentSeries r = *this;
  r.v0_ += shift;
  r.prec_ = add_clamped(prec_, shift);
  return r;
}

std::optional<LaurentSeries> LaurentSeries::pth_root_iter(int s) const {
  long long q = 1;
  for (int i = 0; i < s; ++i) q *= spec_->p;
  std::map<long, FieldElement> m;
  for (auto& [e, c] : coeff_map()) {
    if (e % q != 0) return std::nullopt;
    m.emplace(e / q, c.pth_root_iter(s));
  }
  long new_prec = is_exact() ? kExact : (prec_ >= 0 ? (prec_ + q - 1) / q : prec_ / q);
  return from_coeff_map(spec_, m, new_prec);
}

std::string LaurentSeries::to_string() const {
  std::string s;
  for (auto& [e, c] : coeff_map()) {
    if (!s.empty()) s += "+";
    std::string cs = c.to_string();
    const bool wrap = cs.find('+') != std::string::npos;
    if (e == 0) {
      s += wrap ? "(" + cs + ")" : cs;
    } else {
      if (!c.is_one()) s += (wrap ? "(" + cs + ")" : cs) + "*";
      s += (e == 1) ? "t" : "t^" + std::to_string(e);
    }
  }
  if (s.empty()) s = "0";
  if (!is_exact()) s += " + O(t^" + std::to_string(prec_) + ")";
  return s;
}

}  // namespace woundlab
