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

// Elliptic curves in general Weierstrass form
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over any Field of the tower. Points may live in an extension of the
// curve's field; coefficients are embedded on the fly.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ellnb/field.hpp"

namespace ellnb {

class Point {
 public:
  Point() = default;  // the identity O
  Point(Element x, Element y);

  static Point infinity() { return Point(); }

  bool is_infinity() const { return inf_; }
  const Element& x() const { return x_; }
  const Element& y() const { return y_; }

  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }
  // Canonical order: O first, then by (x, y).
  bool operator<(const Point& o) const;

  std::string to_string() const;

 private:
  bool inf_ = true;
  Element x_, y_;
};

// Largest q for which group_order() will run.
inline constexpr std::uint64_t kMaxCountingFieldOrder = 1ull << 20;
// Above this size group_order() switches to baby-step/giant-step.
inline constexpr std::uint64_t kEnumerationLimit = 4096;

class Curve {
 public:
  Curve() = default;
  // Throws SingularCurve when the discriminant vanishes.
  Curve(FieldPtr field, std::array<Element, 5> a);
  static Curve from_ints(const FieldPtr& field, const std::array<std::int64_t, 5>& a);

  const FieldPtr& field() const { return field_; }
  const std::array<Element, 5>& coeffs() const { return a_; }
  const Element& a1() const { return a_[0]; }
  const Element& a2() const { return a_[1]; }
  const Element& a3() const { return a_[2]; }
  const Element& a4() const { return a_[3]; }
  const Element& a6() const { return a_[4]; }

  Element b2() const;
  Element b4() const;
  Element b6() const;
  Element b8() const;
  Element c4() const;
  Element c6() const;
  Element discriminant() const;
  Element j_invariant() const;

  // Same equation over an extension field.
  Curve base_change(const FieldPtr& ext) const;
  Point embed(const Point& p, const FieldPtr& ext) const;

  bool on_curve(const Point& p) const;
  Point neg(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }
  Point dbl(const Point& p) const { return add(p, p); }
  Point mul(std::int64_t k, const Point& p) const;

  // Number of F_q-rational points; ScaleExceeded above kMaxCountingFieldOrder.
  std::uint64_t group_order() const;
  // Least m >= 1 with mP = O, given a multiple N of it (group order).
  std::uint64_t point_order(const Point& p, std::uint64_t multiple) const;
  std::uint64_t point_order(const Point& p) const;

  // Visits affine F_q-points in canonical order (O excluded) until the
  // callback returns false.
  void for_each_point(const std::function<bool(const Point&)>& fn) const;
  // Affine points with a given x, in canonical order.
  std::vector<Point> points_with_x(const Element& x) const;

  bool operator==(const Curve& o) const;

  std::string to_string() const;

 private:
  Element coef(std::size_t i, const FieldPtr& f) const;
  std::uint64_t count_by_enumeration() const;
  std::uint64_t count_by_bsgs() const;

  FieldPtr field_;
  std::array<Element, 5> a_;
};

// Model obtained by x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
Curve change_coordinates(const Curve& e, const Element& u, const Element& r,
                         const Element& s, const Element& t);

// Whether some (u, r, s, t) with u != 0 maps one model onto the other.
// Characteristic 2 and 3 use a search over (u, r, s) and are limited to
// small fields.
bool isomorphic(const Curve& e1, const Curve& e2);

// f_{A,B}(P): slope of the line through P - A and A - B.
Element eval_f(const Curve& e, const Point& a, const Point& b, const Point& p);

// sum_{k=0}^{n-1} f_{kt,(k+1)t}(P), evaluated at the first two F_q-points
// outside <t> and checked to agree.
Element elliptic_constant_c(const Curve& e, const Point& t, std::uint64_t n);

// Multiples {O, t, 2t, ..., (n-1)t}.
std::vector<Point> multiples(const Curve& e, const Point& t, std::uint64_t n);

std::uint64_t nq(std::uint64_t q, std::uint64_t n);

// l-adic valuation.
int valuation(std::uint64_t l, std::uint64_t n);

}  // namespace ellnb
