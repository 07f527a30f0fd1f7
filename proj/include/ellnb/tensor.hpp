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

// The group algebra F_q[Z/nZ] acting on normal-basis coordinates, the
// special vectors of an elliptic normal basis and its multiplication table.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ellnb/enb.hpp"
#include "ellnb/field.hpp"

namespace ellnb {

class CyclicVector {
 public:
  CyclicVector() = default;
  CyclicVector(FieldPtr field, std::vector<Element> entries);

  static CyclicVector zeros(const FieldPtr& field, std::size_t n);
  // e_k: 1 in position k. e_0 is the neutral element of convolution.
  static CyclicVector unit(const FieldPtr& field, std::size_t n, std::size_t k);
  static CyclicVector from_ints(const FieldPtr& field, const std::vector<std::int64_t>& values);

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return v_.size(); }
  const Element& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Element>& entries() const { return v_; }

  CyclicVector operator+(const CyclicVector& o) const;
  CyclicVector operator-(const CyclicVector& o) const;
  CyclicVector operator*(const Element& c) const;
  bool operator==(const CyclicVector& o) const;
  bool operator!=(const CyclicVector& o) const { return !(*this == o); }

  // Entry values; for prime fields these are the residues themselves.
  std::vector<std::uint64_t> indices() const;
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Element> v_;
};

// (u * v)_m = sum_{i + j = m mod n} u_i v_j
CyclicVector convolve(const CyclicVector& u, const CyclicVector& v);
// (u o v)_m = u_m v_m
CyclicVector componentwise(const CyclicVector& u, const CyclicVector& v);
// Right cyclic shift by k: (u_{m-k})_m.
CyclicVector shift(const CyclicVector& u, std::int64_t k);
std::size_t weight(const CyclicVector& u);
// Inverse in F_q[X]/(X^n - 1); NotInvertible, with the gcd, otherwise.
CyclicVector conv_inverse(const CyclicVector& u);
// R o shift(R, k)
CyclicVector overleft_rk(const CyclicVector& r, std::int64_t k);

struct SpecialVectors {
  CyclicVector R, Rx, Rinv, iota;
};

// Coordinates in the normal basis, and back.
CyclicVector coords(const Element& x, const EnbParams& params);
Element uncoords(const CyclicVector& c, const EnbParams& params);

// R, Rx and Rinv need only the curve data; iota needs the basis.
SpecialVectors special_vectors(const EnbParams& params);

struct Bounds {
  std::size_t middle_sum = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
};

// S = sum_{k=2}^{n-2} weight(Rinv * overleft_rk(R, k)); bounds (3 + S, 3n + S).
Bounds complexity_bounds(const CyclicVector& r);

// Coordinates of x y from the coordinates of x and y:
//   (iota A^2) * d + Rinv * ((R * x) o (R * y) - (Rx A^2) * d),
//   d = (x - sigma x) o (y - sigma y).
CyclicVector tensor_multiply(const CyclicVector& x, const CyclicVector& y, const SpecialVectors& sv,
                             const Element& scalar_a);
CyclicVector tensor_multiply(const CyclicVector& x, const CyclicVector& y, const EnbParams& params);

// Coordinates of alpha_0 alpha_k by the tensor formula, checked against
// field multiplication (ConsistencyFailure on mismatch).
CyclicVector row_k(const EnbParams& params, const SpecialVectors& sv, std::size_t k);

struct MiddleRow {
  std::size_t k = 0;
  CyclicVector vec;
  std::size_t weight = 0;
};

struct ComplexityReport {
  SpecialVectors special;
  std::vector<MiddleRow> middle;
  // All n rows alpha_0 alpha_k; empty when only bounds were requested.
  std::vector<CyclicVector> rows;
  std::size_t middle_sum = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t exact = 0;
  bool has_exact = false;
  // overleft_rk(R, k) for k = 1..n.
  std::vector<CyclicVector> M;

  std::size_t row_weight(std::size_t k) const { return weight(rows.at(k)); }
  // weight(row 0) + weight(row 1) + weight(row n-1)
  std::size_t three_row_weight() const;
};

ComplexityReport bounds_report(const EnbParams& params);
ComplexityReport exact_complexity(const EnbParams& params);

}  // namespace ellnb
