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

#include "ellnb/isogeny.hpp"

#include <set>

#include "ellnb/errors.hpp"

namespace ellnb {

namespace {

Poly power(const Poly& p, int e) {
  Poly r = Poly::constant(p.field()->one());
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

IsogenyData velu_quotient(const Curve& e, const Point& t, std::uint64_t n) {
  if (n < 2) fail(ErrorKind::kInvalidArgument, "kernel order must be at least 2");
  if (!e.on_curve(t)) fail(ErrorKind::kNotOnCurve, "kernel generator not on curve");
  const std::vector<Point> kernel = multiples(e, t, n);
  for (std::uint64_t k = 1; k < n; ++k) {
    if (kernel[k].is_infinity()) {
      fail(ErrorKind::kKernelOrderMismatch, "t has order " + std::to_string(k) + ", not " + std::to_string(n));
    }
  }
  if (!e.add(kernel[n - 1], t).is_infinity()) {
    fail(ErrorKind::kKernelOrderMismatch, "nt != O");
  }

  const FieldPtr& f = e.field();
  std::vector<KernelTerm> terms;
  std::set<Point> seen;
  for (std::uint64_t k = 1; k < n; ++k) {
    const Point& q = kernel[k];
    if (seen.count(q)) continue;
    seen.insert(q);
    seen.insert(e.neg(q));
    KernelTerm term;
    term.x = q.x();
    term.y = q.y();
    term.gx = q.x() * q.x() * 3 + e.a2() * q.x() * 2 + e.a4() - e.a1() * q.y();
    term.gy = -(q.y() * 2) - e.a1() * q.x() - e.a3();
    term.two_torsion = e.neg(q) == q;
    term.v = term.two_torsion ? term.gx : term.gx * 2 - e.a1() * term.gy;
    term.u = term.two_torsion ? f->zero() : term.gy * term.gy;
    terms.push_back(term);
  }

  Element v = f->zero(), w = f->zero();
  for (const auto& term : terms) {
    v += term.v;
    w += term.u + term.x * term.v;
  }
  const Curve codomain(f, {e.a1(), e.a2(), e.a3(), e.a4() - v * 5,
                           e.a6() - (e.a1() * e.a1() + e.a2() * 4) * v - w * 7});

  // X = x + sum v_Q / (x - x_Q) + u_Q / (x - x_Q)^2
  Poly x_num = Poly::x(f);
  Poly x_den = Poly::constant(f->one());
  for (const auto& term : terms) {
    const Poly lin = Poly::linear(term.x);
    if (term.two_torsion) {
      x_num = x_num * lin + x_den * term.v;
      x_den = x_den * lin;
    } else {
      x_num = x_num * lin * lin + (lin * term.v + Poly::constant(term.u)) * x_den;
      x_den = x_den * lin * lin;
    }
  }

  // Y = y - sum [ u_Q (2y + a1 x + a3) / (x - x_Q)^3
  //             + v_Q (a1 (x - x_Q) + y - y_Q) / (x - x_Q)^2
  //             + (a1 u_Q - gx_Q gy_Q) / (x - x_Q)^2 ]
  Poly y_den = Poly::constant(f->one());
  for (const auto& term : terms) y_den = y_den * power(Poly::linear(term.x), 3);
  Poly y_num1 = y_den;
  Poly y_num0(f);
  const Poly a1x_a3 = Poly(f, {e.a3(), e.a1()});
  for (const auto& term : terms) {
    const Poly lin = Poly::linear(term.x);
    const Poly cof3 = y_den / power(lin, 3);
    const Poly cof2 = cof3 * lin;
    y_num1 = y_num1 - cof3 * (term.u * 2) - cof2 * term.v;
    const Poly c0 = (lin * e.a1() - Poly::constant(term.y)) * term.v +
                    Poly::constant(e.a1() * term.u - term.gx * term.gy);
    y_num0 = y_num0 - cof3 * a1x_a3 * term.u - cof2 * c0;
  }

  return IsogenyData{e, codomain, t, n, std::move(terms), x_num, x_den, y_num1, y_num0, y_den};
}

Point IsogenyData::map(const Point& p) const {
  if (p.is_infinity()) return p;
  const Element& x = p.x();
  const Element den = x_den.eval(x);
  if (den.is_zero()) return Point::infinity();
  const Element xx = x_num.eval(x) / den;
  const Element yy = (y_num1.eval(x) * p.y() + y_num0.eval(x)) / y_den.eval(x);
  return Point(xx, yy);
}

Poly preimage_poly(const IsogenyData& iso, const Point& a) {
  if (a.is_infinity()) fail(ErrorKind::kInvalidArgument, "preimage of O");
  if (!iso.codomain.on_curve(a)) fail(ErrorKind::kNotOnCurve, "a is not on the codomain");
  const Poly h = iso.x_num - iso.x_den * a.x();
  if (h.degree() != static_cast<int>(iso.n)) {
    fail(ErrorKind::kDegreeCollapse, "preimage polynomial has degree " + std::to_string(h.degree()));
  }
  return h.monic();
}

Point find_generator_point(const IsogenyData& iso, std::uint64_t budget) {
  std::optional<Point> found;
  std::uint64_t tried = 0;
  iso.codomain.for_each_point([&](const Point& a) {
    if (++tried > budget) return false;
    if (poly_irreducible(preimage_poly(iso, a))) {
      found = a;
      return false;
    }
    return true;
  });
  if (!found) fail(ErrorKind::kNoGeneratorFound, "no point of E' has an irreducible preimage");
  return *found;
}

}  // namespace ellnb
