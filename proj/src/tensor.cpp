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

#include "ellnb/tensor.hpp"

#include "ellnb/errors.hpp"
#include "ellnb/kernels.hpp"
#include "ellnb/linalg.hpp"
#include "ellnb/poly.hpp"

namespace ellnb {

namespace {

void check_lengths(const CyclicVector& u, const CyclicVector& v) {
  if (u.size() != v.size()) {
    fail(ErrorKind::kLengthMismatch,
         "vector lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
}

std::vector<std::uint32_t> residues(const CyclicVector& u) {
  std::vector<std::uint32_t> out;
  out.reserve(u.size());
  for (const auto& e : u.entries()) out.push_back(e.value());
  return out;
}

}  // namespace

CyclicVector::CyclicVector(FieldPtr field, std::vector<Element> entries)
    : field_(std::move(field)), v_(std::move(entries)) {
  for (auto& e : v_) e = field_->embed(e);
}

CyclicVector CyclicVector::zeros(const FieldPtr& field, std::size_t n) {
  return CyclicVector(field, std::vector<Element>(n, field->zero()));
}

CyclicVector CyclicVector::unit(const FieldPtr& field, std::size_t n, std::size_t k) {
  std::vector<Element> v(n, field->zero());
  v.at(k) = field->one();
  return CyclicVector(field, std::move(v));
}

CyclicVector CyclicVector::from_ints(const FieldPtr& field, const std::vector<std::int64_t>& values) {
  std::vector<Element> v;
  for (auto x : values) v.push_back(field->from_int(x));
  return CyclicVector(field, std::move(v));
}

CyclicVector CyclicVector::operator+(const CyclicVector& o) const {
  check_lengths(*this, o);
  std::vector<Element> r(v_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = v_[i] + o.v_[i];
  return CyclicVector(field_, std::move(r));
}

CyclicVector CyclicVector::operator-(const CyclicVector& o) const {
  check_lengths(*this, o);
  std::vector<Element> r(v_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = v_[i] - o.v_[i];
  return CyclicVector(field_, std::move(r));
}

CyclicVector CyclicVector::operator*(const Element& c) const {
  std::vector<Element> r(v_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = v_[i] * c;
  return CyclicVector(field_, std::move(r));
}

bool CyclicVector::operator==(const CyclicVector& o) const {
  if (v_.size() != o.v_.size()) return false;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] != o.v_[i]) return false;
  }
  return true;
}

std::vector<std::uint64_t> CyclicVector::indices() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : v_) out.push_back(*e.index());
  return out;
}

std::string CyclicVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += v_[i].to_string();
  }
  return s + ")";
}

CyclicVector convolve(const CyclicVector& u, const CyclicVector& v) {
  check_lengths(u, v);
  const std::size_t n = u.size();
  const FieldPtr& f = u.field();
  if (f->is_prime_field()) {
    const auto a = residues(u), b = residues(v);
    std::vector<std::uint32_t> out(n);
    kernels::cyclic_convolve_mod(a, b, out, f->characteristic());
    std::vector<Element> r;
    r.reserve(n);
    for (auto x : out) r.push_back(f->from_int(x));
    return CyclicVector(f, std::move(r));
  }
  std::vector<Element> r(n, f->zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) r[(i + j) % n] += u[i] * v[j];
  }
  return CyclicVector(f, std::move(r));
}

CyclicVector componentwise(const CyclicVector& u, const CyclicVector& v) {
  check_lengths(u, v);
  std::vector<Element> r(u.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = u[i] * v[i];
  return CyclicVector(u.field(), std::move(r));
}

CyclicVector shift(const CyclicVector& u, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(u.size());
  std::vector<Element> r(u.size());
  for (std::int64_t m = 0; m < n; ++m) {
    r[static_cast<std::size_t>(m)] = u[static_cast<std::size_t>((((m - k) % n) + n) % n)];
  }
  return CyclicVector(u.field(), std::move(r));
}

std::size_t weight(const CyclicVector& u) {
  if (u.field() && u.field()->is_prime_field()) return kernels::count_nonzero(residues(u));
  std::size_t w = 0;
  for (const auto& e : u.entries()) w += !e.is_zero();
  return w;
}

CyclicVector conv_inverse(const CyclicVector& u) {
  const FieldPtr& f = u.field();
  const std::size_t n = u.size();
  std::vector<Element> xn(n + 1, f->zero());
  xn.front() = -f->one();
  xn.back() = f->one();
  const Poly m(f, xn);
  const Poly a(f, u.entries());
  const Poly g = gcd(a, m);
  if (g.degree() != 0) {
    fail(ErrorKind::kNotInvertible, "gcd with X^n - 1 is " + g.to_string());
  }
  const Poly inv = inverse_mod(a, m);
  std::vector<Element> r(n, f->zero());
  for (std::size_t i = 0; i < inv.coeffs().size(); ++i) r[i] = inv.coeffs()[i];
  return CyclicVector(f, std::move(r));
}

CyclicVector overleft_rk(const CyclicVector& r, std::int64_t k) { return componentwise(r, shift(r, k)); }

CyclicVector coords(const Element& x, const EnbParams& params) {
  return CyclicVector(params.fq, vec_mat(params.fqn->to_base(params.fqn->embed(x)), params.basis_inverse));
}

Element uncoords(const CyclicVector& c, const EnbParams& params) {
  if (c.size() != params.basis.size()) fail(ErrorKind::kLengthMismatch, "coordinate length != n");
  Element x = params.fqn->zero();
  for (std::size_t k = 0; k < c.size(); ++k) x += params.basis[k] * params.fqn->embed(c[k]);
  return x;
}

SpecialVectors special_vectors(const EnbParams& params) {
  SpecialVectors sv;
  sv.R = CyclicVector(params.fq, r_vector(params.curve, params.t, params.R, params.n, params.scalar_a,
                                          params.scalar_b));
  std::vector<Element> rx;
  Point p = params.R;
  for (std::uint64_t j = 0; j < params.n; ++j) {
    rx.push_back(p.x());
    p = params.curve.add(p, params.t);
  }
  sv.Rx = CyclicVector(params.fq, std::move(rx));
  sv.Rinv = conv_inverse(sv.R);
  if (!params.basis.empty()) sv.iota = coords(params.b.x(), params);
  return sv;
}

Bounds complexity_bounds(const CyclicVector& r) {
  const CyclicVector rinv = conv_inverse(r);
  const std::size_t n = r.size();
  Bounds b;
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    b.middle_sum += weight(convolve(rinv, overleft_rk(r, static_cast<std::int64_t>(k))));
  }
  b.lower = 3 + b.middle_sum;
  b.upper = 3 * n + b.middle_sum;
  return b;
}

CyclicVector tensor_multiply(const CyclicVector& x, const CyclicVector& y, const SpecialVectors& sv,
                             const Element& scalar_a) {
  check_lengths(x, y);
  check_lengths(x, sv.R);
  const Element a2 = scalar_a * scalar_a;
  const CyclicVector d = componentwise(x - shift(x, 1), y - shift(y, 1));
  const CyclicVector first = convolve(sv.iota * a2, d);
  const CyclicVector inner =
      componentwise(convolve(sv.R, x), convolve(sv.R, y)) - convolve(sv.Rx * a2, d);
  return first + convolve(sv.Rinv, inner);
}

CyclicVector tensor_multiply(const CyclicVector& x, const CyclicVector& y, const EnbParams& params) {
  return tensor_multiply(x, y, special_vectors(params), params.scalar_a);
}

CyclicVector row_k(const EnbParams& params, const SpecialVectors& sv, std::size_t k) {
  const std::size_t n = params.n;
  const CyclicVector row = tensor_multiply(CyclicVector::unit(params.fq, n, 0),
                                           CyclicVector::unit(params.fq, n, k), sv, params.scalar_a);
  const CyclicVector direct = coords(params.basis[0] * params.basis[k], params);
  if (row != direct) {
    fail(ErrorKind::kConsistencyFailure, "row " + std::to_string(k) + " differs from field product: " +
                                             row.to_string() + " vs " + direct.to_string());
  }
  return row;
}

std::size_t ComplexityReport::three_row_weight() const {
  const std::size_t n = rows.size();
  return weight(rows.at(0)) + weight(rows.at(1)) + weight(rows.at(n - 1));
}

ComplexityReport bounds_report(const EnbParams& params) {
  ComplexityReport rep;
  rep.special = special_vectors(params);
  const std::size_t n = params.n;
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    MiddleRow mr;
    mr.k = k;
    mr.vec = convolve(rep.special.Rinv, overleft_rk(rep.special.R, static_cast<std::int64_t>(k)));
    mr.weight = weight(mr.vec);
    rep.middle_sum += mr.weight;
    rep.middle.push_back(std::move(mr));
  }
  rep.lower = 3 + rep.middle_sum;
  rep.upper = 3 * n + rep.middle_sum;
  for (std::size_t k = 1; k <= n; ++k) {
    rep.M.push_back(overleft_rk(rep.special.R, static_cast<std::int64_t>(k)));
  }
  return rep;
}

ComplexityReport exact_complexity(const EnbParams& params) {
  ComplexityReport rep = bounds_report(params);
  for (std::size_t k = 0; k < params.n; ++k) rep.rows.push_back(row_k(params, rep.special, k));
  for (const auto& mr : rep.middle) {
    if (rep.rows[mr.k] != mr.vec) {
      fail(ErrorKind::kConsistencyFailure,
           "middle row " + std::to_string(mr.k) + " differs from Rinv * overleft_rk(R, k)");
    }
  }
  for (const auto& row : rep.rows) rep.exact += weight(row);
  rep.has_exact = true;
  return rep;
}

}  // namespace ellnb
