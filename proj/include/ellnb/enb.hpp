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

// Elliptic normal bases: parameter search and basis construction.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellnb/curve.hpp"
#include "ellnb/isogeny.hpp"
#include "ellnb/linalg.hpp"

namespace ellnb {

// Field elements as flat F_p coefficient lists, lowest degree first.
using RawElement = std::vector<std::int64_t>;

struct RawPoint {
  bool infinity = false;
  RawElement x, y;
};

// User-pinned parameters. Anything left empty is found by canonical search.
struct Overrides {
  std::optional<RawElement> q_modulus;  // monic, over F_p
  std::optional<std::array<RawElement, 5>> curve;
  std::optional<RawPoint> t;
  std::optional<RawPoint> R;
  std::optional<RawPoint> a;
  std::optional<RawPoint> b;  // coordinates over F_{q^n}
  std::optional<RawElement> scalar_a;
  std::optional<RawElement> scalar_b;
};

struct SearchConfig {
  std::uint64_t budget_curves = 1000000;
  std::uint64_t budget_points = 10000;
};

struct EnbParams {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  FieldPtr fq;
  Curve curve;
  std::uint64_t group_order = 0;
  Point t;
  IsogenyData iso;
  Point a;  // on the codomain
  Poly modulus;
  FieldPtr fqn;
  Point b;  // over F_{q^n}, phi(b) = b + t
  Element c, scalar_a, scalar_b;
  Point R;
  // alpha_k = A f_{kt,(k+1)t}(-b) + B, so that phi(alpha_k) = alpha_{k+1}.
  std::vector<Element> basis;
  // Inverse of the matrix whose rows are the F_q-coordinates of alpha_k.
  Matrix basis_inverse;
  std::uint64_t nq = 0;
  bool nq_within_sqrt_q = false;
};

Element element_from_raw(const FieldPtr& f, const RawElement& raw);
Point point_from_raw(const FieldPtr& f, const RawPoint& raw);

// First point of exact order n in canonical order.
Point find_torsion_point(const Curve& e, std::uint64_t n);

// (A, B) with A c + n B = 1, preferring B = 0.
std::pair<Element, Element> choose_scalars(const Element& c, std::uint64_t n);

struct Lift {
  FieldPtr fqn;
  Poly modulus;
  Point b;
};

// Builds F_{q^n} from the preimage polynomial of a and returns the preimage
// b of +-a with phi(b) = b + t and nb != O.
Lift lift_b(const IsogenyData& iso, const Point& a);

// alpha_k for k = 0..n-1; NotABasis when dependent or not Frobenius-cyclic.
std::vector<Element> build_basis(const Curve& e, const Point& t, const Point& b, const Element& sa,
                                 const Element& sb, std::uint64_t n);
Matrix basis_matrix_inverse(const std::vector<Element>& basis);

// (A f_{O,t}(R + jt) + B) for j = 0..n-1.
std::vector<Element> r_vector(const Curve& e, const Point& t, const Point& r, std::uint64_t n,
                              const Element& sa, const Element& sb);

// First F_q-point with nR != O whose vector (A f_{O,t}(R + jt) + B)_j is a
// unit of F_q[X]/(X^n - 1).
Point choose_R(const Curve& e, const Point& t, std::uint64_t n, const Element& sa, const Element& sb);

EnbParams params_computation(std::uint64_t q, std::uint64_t n, const Overrides& overrides = {},
                             const SearchConfig& config = {});

// Every structural invariant of a parameter set; returns the violated ones.
std::vector<std::string> check_structure(const EnbParams& params);

}  // namespace ellnb
