// Copyright 2026 The ellnb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ellnb/field.hpp"

#include <algorithm>
#include <sstream>

#include "ellnb/errors.hpp"
#include "ellnb/kernels.hpp"
#include "ellnb/poly.hpp"

namespace ellnb {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) return std::nullopt;
    r *= b;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

// ---------------------------------------------------------------- Field

FieldPtr Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p)) {
    fail(ErrorKind::kCompositeCharacteristic,
         std::to_string(p) + " is not a prime below 2^31");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = static_cast<std::uint32_t>(p);
  f->order_ = p;
  f->self_ = f;
  return f;
}

FieldPtr Field::extension(const FieldPtr& base, const std::vector<Element>& modulus) {
  if (!base) fail(ErrorKind::kInvalidArgument, "extension of a null field");
  if (base->level() >= 2) fail(ErrorKind::kInvalidArgument, "tower height is limited to 2");
  Poly h(base, modulus);
  if (h.degree() < 2) fail(ErrorKind::kInvalidArgument, "modulus must have degree >= 2");
  if (!h.is_monic()) fail(ErrorKind::kInvalidArgument, "modulus must be monic");
  if (!poly_irreducible(h)) {
    fail(ErrorKind::kReducibleModulus, "modulus " + h.to_string() + " is reducible");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = base->p_;
  f->base_ = base;
  f->modulus_ = h.coeffs();
  f->degree_ = static_cast<std::size_t>(h.degree());
  f->abs_degree_ = f->degree_ * base->abs_degree_;
  if (base->order_) f->order_ = checked_pow(*base->order_, f->degree_);
  if (base->is_prime_field()) {
    for (const Element& c : f->modulus_) f->modulus_flat_.push_back(c.value());
  }
  f->self_ = f;
  return f;
}

FieldPtr Field::galois(std::uint64_t p, int m) {
  FieldPtr fp = prime(p);
  if (m <= 1) return fp;
  const auto count = checked_pow(p, static_cast<std::size_t>(m));
  if (!count) fail(ErrorKind::kScaleExceeded, "field too large");
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    std::vector<Element> c;
    std::uint64_t r = idx;
    for (int i = 0; i < m; ++i) {
      c.push_back(fp->from_int(static_cast<std::int64_t>(r % p)));
      r /= p;
    }
    c.push_back(fp->one());
    if (poly_irreducible(Poly(fp, c))) return extension(fp, c);
  }
  fail(ErrorKind::kReducibleModulus, "no irreducible polynomial found");
}

std::uint64_t Field::base_order() const {
  if (!base_) return p_;
  return *base_->order_;
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || abs_degree_ != other.abs_degree_ || level() != other.level()) {
    return false;
  }
  if (!base_) return true;
  if (!base_->same_as(*other.base_) || modulus_.size() != other.modulus_.size()) return false;
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (modulus_[i].c_ != other.modulus_[i].c_) return false;
  }
  return true;
}

Element Field::zero() const {
  return Element(self_.lock(), std::vector<std::uint32_t>(abs_degree_, 0));
}

Element Field::one() const { return from_int(1); }

Element Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  std::vector<std::uint32_t> c(abs_degree_, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return Element(self_.lock(), std::move(c));
}

Element Field::from_flat(std::vector<std::uint32_t> flat) const {
  if (flat.size() > abs_degree_) {
    fail(ErrorKind::kInvalidArgument, "too many coefficients for " + describe());
  }
  flat.resize(abs_degree_, 0);
  for (auto& v : flat) v %= p_;
  return Element(self_.lock(), std::move(flat));
}

Element Field::from_base(const std::vector<Element>& coeffs) const {
  if (!base_) {
    if (coeffs.size() != 1) fail(ErrorKind::kLengthMismatch, "prime field takes one coefficient");
    return embed(coeffs[0]);
  }
  if (coeffs.size() > degree_) fail(ErrorKind::kLengthMismatch, "too many base coefficients");
  std::vector<std::uint32_t> c(abs_degree_, 0);
  const std::size_t m = base_->abs_degree_;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Element e = base_->embed(coeffs[j]);
    std::copy(e.c_.begin(), e.c_.end(), c.begin() + static_cast<std::ptrdiff_t>(j * m));
  }
  return Element(self_.lock(), std::move(c));
}

std::vector<Element> Field::to_base(const Element& x) const {
  if (!base_) return {x};
  const std::size_t m = base_->abs_degree_;
  std::vector<Element> out;
  out.reserve(degree_);
  for (std::size_t j = 0; j < degree_; ++j) {
    out.push_back(Element(base_, std::vector<std::uint32_t>(
                                     x.c_.begin() + static_cast<std::ptrdiff_t>(j * m),
                                     x.c_.begin() + static_cast<std::ptrdiff_t>((j + 1) * m))));
  }
  return out;
}

Element Field::gen() const {
  if (!base_) fail(ErrorKind::kInvalidArgument, "prime field has no generator");
  std::vector<Element> c(degree_, base_->zero());
  c[1] = base_->one();
  return from_base(c);
}

Element Field::embed(const Element& x) const {
  if (!x.field_) fail(ErrorKind::kInvalidArgument, "embedding an empty element");
  if (x.field_->same_as(*this)) return Element(self_.lock(), x.c_);
  if (x.field_->level() >= level()) {
    fail(ErrorKind::kInvalidArgument,
         "cannot embed an element of " + x.field_->describe() + " into " + describe());
  }
  if (x.field_->is_prime_field()) return from_int(x.value());
  if (!base_) fail(ErrorKind::kInvalidArgument, "incompatible fields");
  std::vector<Element> c{base_->embed(x)};
  return from_base(c);
}

Element Field::from_index(std::uint64_t index) const {
  std::vector<std::uint32_t> c(abs_degree_, 0);
  for (std::size_t i = 0; i < abs_degree_; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return Element(self_.lock(), std::move(c));
}

std::string Field::describe() const {
  std::ostringstream os;
  if (!base_) {
    os << "F_" << p_;
  } else {
    os << base_->describe() << "[X]/(";
    Poly h(base_, modulus_);
    os << h.to_string() << ")";
  }
  return os.str();
}

void Field::mul_into(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (!base_) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return;
  }
  const std::size_t n = degree_;
  if (base_->is_prime_field()) {
    std::vector<std::uint32_t> prod(2 * n - 1);
    kernels::poly_mul_mod(std::span<const std::uint32_t>(a, n),
                          std::span<const std::uint32_t>(b, n), prod, p_);
    for (std::size_t i = 2 * n - 2; i >= n; --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t sub = c * modulus_flat_[j] % p_;
        std::uint32_t& dst = prod[i - n + j];
        dst = static_cast<std::uint32_t>((dst + p_ - sub) % p_);
      }
    }
    std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n), out);
    return;
  }
  // Generic tower step: schoolbook over the base, then reduce.
  const std::size_t m = base_->abs_degree_;
  auto slice = [&](const std::uint32_t* src, std::size_t j) {
    return Element(base_, std::vector<std::uint32_t>(src + j * m, src + (j + 1) * m));
  };
  std::vector<Element> prod(2 * n - 1, base_->zero());
  for (std::size_t i = 0; i < n; ++i) {
    const Element ai = slice(a, i);
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += ai * slice(b, j);
  }
  for (std::size_t i = 2 * n - 2; i >= n; --i) {
    const Element c = prod[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i - n + j] -= c * modulus_[j];
  }
  for (std::size_t j = 0; j < n; ++j) std::copy(prod[j].c_.begin(), prod[j].c_.end(), out + j * m);
}

void Field::inv_into(const std::uint32_t* a, std::uint32_t* out) const {
  if (!base_) {
    out[0] = inv_mod_p(a[0], p_);
    return;
  }
  std::vector<Element> coeffs = to_base(Element(self_.lock(), std::vector<std::uint32_t>(a, a + abs_degree_)));
  const Poly inv = inverse_mod(Poly(base_, coeffs), Poly(base_, modulus_));
  const Element r = from_base(inv.coeffs());
  std::copy(r.c_.begin(), r.c_.end(), out);
}

// ---------------------------------------------------------------- Element

void Element::check_same(const Element& o) const {
  if (field_.get() == o.field_.get() && field_) return;
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    fail(ErrorKind::kInvalidArgument, "operands belong to different fields");
  }
}

bool Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Element::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::optional<std::uint64_t> Element::index() const {
  const std::uint64_t p = field_->p_;
  std::uint64_t idx = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (idx > (UINT64_MAX - c_[i]) / p) return std::nullopt;
    idx = idx * p + c_[i];
  }
  return idx;
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  const std::uint32_t p = field_->p_;
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    r[i] = s >= p ? s - p : s;
  }
  return Element(field_, std::move(r));
}

Element Element::operator-(const Element& o) const {
  check_same(o);
  const std::uint32_t p = field_->p_;
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  }
  return Element(field_, std::move(r));
}

Element Element::operator-() const {
  const std::uint32_t p = field_->p_;
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] == 0 ? 0 : p - c_[i];
  return Element(field_, std::move(r));
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  std::vector<std::uint32_t> r(c_.size());
  field_->mul_into(c_.data(), o.c_.data(), r.data());
  return Element(field_, std::move(r));
}

Element Element::operator*(std::int64_t k) const { return *this * field_->from_int(k); }

Element Element::inv() const {
  if (is_zero()) fail(ErrorKind::kDivisionByZero, "inverse of zero");
  std::vector<std::uint32_t> r(c_.size());
  field_->inv_into(c_.data(), r.data());
  return Element(field_, std::move(r));
}

Element Element::operator/(const Element& o) const {
  check_same(o);
  return *this * o.inv();
}

Element Element::pow(std::uint64_t e) const {
  Element result = field_->one();
  Element base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Element Element::frobenius() const {
  if (field_->is_prime_field()) return *this;
  return pow(field_->base_order());
}

bool Element::operator==(const Element& o) const {
  if (!field_ || !o.field_) return field_ == o.field_;
  if (field_.get() != o.field_.get() && !field_->same_as(*o.field_)) return false;
  return c_ == o.c_;
}

std::strong_ordering Element::operator<=>(const Element& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  }
  return std::strong_ordering::equal;
}

std::string Element::to_string() const {
  if (!field_) return "<empty>";
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

std::size_t ElementHash::operator()(const Element& x) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : x.flat()) h = (h ^ v) * 1099511628211ull;
  return h;
}

}  // namespace ellnb
