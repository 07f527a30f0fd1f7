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

#include "ellnb/poly.hpp"

#include "ellnb/errors.hpp"

namespace ellnb {

Poly::Poly(FieldPtr field, std::vector<Element> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = field_->embed(c);
  trim();
}

Poly Poly::from_ints(const FieldPtr& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Element> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field->from_int(v));
  return Poly(field, std::move(c));
}

Poly Poly::constant(const Element& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const FieldPtr& field) { return Poly(field, {field->zero(), field->one()}); }

Poly Poly::linear(const Element& r) { return Poly(r.field(), {-r, r.field()->one()}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Element Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

Element Poly::lead() const { return c_.empty() ? field_->zero() : c_.back(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * c_.back().inv();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly(field_);
  std::vector<Element> r(c_.size() + o.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Element& c) const {
  std::vector<Element> r = c_;
  for (auto& v : r) v = v * c;
  return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& m) const {
  if (m.is_zero()) fail(ErrorKind::kDivisionByZero, "polynomial division by zero");
  if (degree() < m.degree()) return {Poly(field_), *this};
  std::vector<Element> r = c_;
  const std::size_t dm = static_cast<std::size_t>(m.degree());
  std::vector<Element> q(r.size() - dm, field_->zero());
  const Element lead_inv = m.lead().inv();
  for (std::size_t i = r.size(); i-- > dm;) {
    if (r[i].is_zero()) continue;
    const Element c = r[i] * lead_inv;
    q[i - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= c * m.c_[j];
  }
  r.resize(dm);
  return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

Element Poly::eval(const Element& x) const {
  const FieldPtr& f = x.field();
  Element r = f->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + f->embed(c_[i]);
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Element> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<std::int64_t>(i));
  return Poly(field_, std::move(r));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const bool unit = c_[i].is_one();
    if (!unit || i == 0) s += c_[i].to_string();
    if (i >= 1) s += (unit ? "" : "*") + std::string("X");
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  const FieldPtr& f = m.field();
  Poly r0 = m, r1 = a % m;
  Poly s0(f), s1 = Poly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) {
    fail(ErrorKind::kNotInvertible, "gcd with modulus is " + r0.monic().to_string());
  }
  return (s0 * r0.lead().inv()) % m;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(a.field()->one()) % m;
  Poly base = a % m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    e >>= 1;
    if (e) base = mul_mod(base, base, m);
  }
  return result;
}

bool poly_irreducible(const Poly& h) {
  const int d = h.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const auto q = h.field()->order();
  if (!q) fail(ErrorKind::kScaleExceeded, "coefficient field too large");
  const Poly x = Poly::x(h.field());
  const Poly hm = h.monic();
  // powers[k] = X^{q^k} mod h
  std::vector<Poly> powers{x % hm};
  for (int k = 1; k <= d; ++k) powers.push_back(pow_mod(powers.back(), *q, hm));
  if (!(powers[static_cast<std::size_t>(d)] == x % hm)) return false;
  for (const auto& [l, e] : factorize(static_cast<std::uint64_t>(d))) {
    (void)e;
    const Poly g = gcd(powers[static_cast<std::size_t>(d) / l] - x, hm);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<Element> roots_by_search(const Poly& h) {
  const auto q = h.field()->order();
  if (!q || *q > (1ull << 24)) fail(ErrorKind::kScaleExceeded, "field too large for root search");
  std::vector<Element> roots;
  for (std::uint64_t i = 0; i < *q; ++i) {
    Element r = h.field()->from_index(i);
    if (h.eval(r).is_zero()) roots.push_back(r);
  }
  return roots;
}

}  // namespace ellnb
