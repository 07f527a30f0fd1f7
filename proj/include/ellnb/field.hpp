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

// Finite fields as a tower of quotient rings: F_p, F_q = F_p[X]/(g) and
// F_{q^n} = F_q[Y]/(h). Elements store their coefficients flattened down to
// F_p, lowest degree first; coefficient j of the top-level polynomial
// occupies the slots [j * m, (j + 1) * m) where m is the absolute degree of
// the base field. All representatives are kept reduced.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ellnb {

class Field;
class Element;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

class Field {
 public:
  // F_p. Throws CompositeCharacteristic unless p is a prime below 2^31.
  static FieldPtr prime(std::uint64_t p);

  // base[X]/(modulus). The modulus is given over `base`, lowest degree
  // first, and must be monic, of degree >= 2 and irreducible
  // (ReducibleModulus otherwise). At most two levels above F_p.
  static FieldPtr extension(const FieldPtr& base, const std::vector<Element>& modulus);

  // F_{p^m} built from the first monic irreducible polynomial of degree m in
  // canonical order. Returns the prime field when m == 1.
  static FieldPtr galois(std::uint64_t p, int m);

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  // Degree over the immediate base (1 for a prime field).
  std::size_t degree() const { return degree_; }
  // Degree over F_p.
  std::size_t abs_degree() const { return abs_degree_; }
  // Tower height: 0 for F_p.
  int level() const { return base_ ? base_->level() + 1 : 0; }
  // |base|; p for a prime field.
  std::uint64_t base_order() const;
  // |F|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const { return order_; }
  // Modulus over the base, monic, lowest degree first. Empty for F_p.
  const std::vector<Element>& modulus() const { return modulus_; }

  bool same_as(const Field& other) const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  // Flat F_p coefficients; shorter input is zero-padded, values reduced.
  Element from_flat(std::vector<std::uint32_t> flat) const;
  // Polynomial over the base with `degree()` coefficients.
  Element from_base(const std::vector<Element>& coeffs) const;
  std::vector<Element> to_base(const Element& x) const;
  // Class of the indeterminate (extension fields only).
  Element gen() const;
  // Image of an element of any subfield in this tower.
  Element embed(const Element& x) const;
  // Element with canonical index i = sum c_j p^j over flat coefficients.
  Element from_index(std::uint64_t index) const;

  std::string describe() const;

 private:
  friend class Element;
  Field() = default;

  void mul_into(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void inv_into(const std::uint32_t* a, std::uint32_t* out) const;

  std::uint32_t p_ = 0;
  FieldPtr base_;
  std::vector<Element> modulus_;
  std::vector<std::uint32_t> modulus_flat_;  // only when base is prime
  std::size_t degree_ = 1;
  std::size_t abs_degree_ = 1;
  std::optional<std::uint64_t> order_;
  std::weak_ptr<const Field> self_;
};

class Element {
 public:
  Element() = default;

  const FieldPtr& field() const { return field_; }
  const std::vector<std::uint32_t>& flat() const { return c_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  // Value of the constant coefficient for prime-field elements.
  std::uint32_t value() const { return c_.empty() ? 0 : c_[0]; }
  // Canonical index, or nullopt when it overflows 64 bits.
  std::optional<std::uint64_t> index() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element operator*(std::int64_t k) const;

  Element inv() const;  // DivisionByZero on zero
  Element pow(std::uint64_t e) const;
  // x^|base|; identity on the prime field.
  Element frobenius() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  // Canonical order: by index.
  std::strong_ordering operator<=>(const Element& o) const;

  std::string to_string() const;

 private:
  friend class Field;
  Element(FieldPtr f, std::vector<std::uint32_t> c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same(const Element& o) const;

  FieldPtr field_;
  std::vector<std::uint32_t> c_;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const;
};

}  // namespace ellnb
