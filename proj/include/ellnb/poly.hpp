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

#pragma once

// Dense univariate polynomials over a Field, lowest degree first.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellnb/field.hpp"

namespace ellnb {

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Element> coeffs);

  static Poly from_ints(const FieldPtr& field, const std::vector<std::int64_t>& coeffs);
  static Poly constant(const Element& c);
  static Poly x(const FieldPtr& field);
  // X - r
  static Poly linear(const Element& r);

  const FieldPtr& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Element coeff(std::size_t i) const;
  Element lead() const;
  bool is_monic() const;
  Poly monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Element& c) const;
  Poly operator%(const Poly& m) const { return divmod(m).second; }
  Poly operator/(const Poly& m) const { return divmod(m).first; }
  bool operator==(const Poly& o) const;

  // (quotient, remainder); DivisionByZero when m is zero.
  std::pair<Poly, Poly> divmod(const Poly& m) const;

  // Horner evaluation; x may live in any extension of this field.
  Element eval(const Element& x) const;

  Poly derivative() const;

  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Element> c_;
};

// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

// Inverse of a modulo m; NotInvertible when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m);

// Rabin's test over the coefficient field: h monic of degree d >= 1 is
// irreducible iff X^{q^d} = X mod h and gcd(X^{q^{d/l}} - X, h) = 1 for
// every prime l | d.
bool poly_irreducible(const Poly& h);

// Roots lying in the coefficient field, by exhaustive search (small fields).
std::vector<Element> roots_by_search(const Poly& h);

}  // namespace ellnb
