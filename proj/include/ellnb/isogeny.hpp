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

// Separable isogeny E -> E / <t> with a cyclic kernel, from Velu's formulas
// kept in general Weierstrass form.

#include <cstdint>
#include <vector>

#include "ellnb/curve.hpp"
#include "ellnb/poly.hpp"

namespace ellnb {

struct KernelTerm {
  Element x, y;
  Element gx, gy;  // partial derivatives of the curve equation at Q
  Element v, u;
  bool two_torsion = false;
};

struct IsogenyData {
  Curve domain;
  Curve codomain;
  Point t;
  std::uint64_t n = 0;
  // One point from each {Q, -Q} pair of the nonzero kernel points.
  std::vector<KernelTerm> terms;
  // X(x) = x_num / x_den.
  Poly x_num, x_den;
  // Y(x, y) = (y_num1 * y + y_num0) / y_den.
  Poly y_num1, y_num0, y_den;

  // Image of a point; P may live in an extension of the base field.
  Point map(const Point& p) const;
};

// KernelOrderMismatch when t does not have order exactly n.
IsogenyData velu_quotient(const Curve& e, const Point& t, std::uint64_t n);

// Monic degree-n polynomial whose roots are the x-coordinates of the
// preimages of a.
Poly preimage_poly(const IsogenyData& iso, const Point& a);

// First point of E'(F_q) in canonical order whose preimage polynomial is
// irreducible. NoGeneratorFound when none qualifies within `budget` points.
Point find_generator_point(const IsogenyData& iso, std::uint64_t budget = 10000);

}  // namespace ellnb
