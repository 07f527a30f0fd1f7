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

#include "ellnb/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ellnb/errors.hpp"

namespace ellnb {

namespace {

// Embeds both points into the larger of their two fields.
std::pair<Point, Point> common_field(const Curve& e, const Point& p, const Point& q) {
  if (p.is_infinity() || q.is_infinity()) return {p, q};
  const FieldPtr& fp = p.x().field();
  const FieldPtr& fq = q.x().field();
  if (fp.get() == fq.get() || fp->same_as(*fq)) return {p, q};
  if (fp->level() > fq->level()) return {p, e.embed(q, fp)};
  return {e.embed(p, fq), q};
}

}  // namespace

// ---------------------------------------------------------------- Point

Point::Point(Element x, Element y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {
  if (!x_.valid() || !y_.valid()) fail(ErrorKind::kInvalidArgument, "empty point coordinate");
}

bool Point::operator==(const Point& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return x_ == o.x_ && y_ == o.y_;
}

bool Point::operator<(const Point& o) const {
  if (inf_ || o.inf_) return inf_ && !o.inf_;
  if (x_ != o.x_) return x_ < o.x_;
  return y_ < o.y_;
}

std::string Point::to_string() const {
  if (inf_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

// ---------------------------------------------------------------- Curve

Curve::Curve(FieldPtr field, std::array<Element, 5> a) : field_(std::move(field)), a_(std::move(a)) {
  for (auto& c : a_) c = field_->embed(c);
  if (discriminant().is_zero()) fail(ErrorKind::kSingularCurve, "discriminant vanishes: " + to_string());
}

Curve Curve::from_ints(const FieldPtr& field, const std::array<std::int64_t, 5>& a) {
  return Curve(field, {field->from_int(a[0]), field->from_int(a[1]), field->from_int(a[2]),
                       field->from_int(a[3]), field->from_int(a[4])});
}

Element Curve::b2() const { return a1() * a1() + a2() * 4; }
Element Curve::b4() const { return a4() * 2 + a1() * a3(); }
Element Curve::b6() const { return a3() * a3() + a6() * 4; }
Element Curve::b8() const {
  return a1() * a1() * a6() + a2() * a6() * 4 - a1() * a3() * a4() + a2() * a3() * a3() -
         a4() * a4();
}
Element Curve::c4() const { return b2() * b2() - b4() * 24; }
Element Curve::c6() const {
  const Element b2v = b2();
  return -(b2v * b2v * b2v) + b2v * b4() * 36 - b6() * 216;
}
Element Curve::discriminant() const {
  const Element b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  return -(b2v * b2v * b8v) - b4v * b4v * b4v * 8 - b6v * b6v * 27 + b2v * b4v * b6v * 9;
}
Element Curve::j_invariant() const {
  const Element c = c4();
  return c * c * c / discriminant();
}

Curve Curve::base_change(const FieldPtr& ext) const {
  return Curve(ext, {ext->embed(a_[0]), ext->embed(a_[1]), ext->embed(a_[2]), ext->embed(a_[3]),
                     ext->embed(a_[4])});
}

Point Curve::embed(const Point& p, const FieldPtr& ext) const {
  if (p.is_infinity()) return p;
  return Point(ext->embed(p.x()), ext->embed(p.y()));
}

Element Curve::coef(std::size_t i, const FieldPtr& f) const {
  if (f.get() == field_.get()) return a_[i];
  return f->embed(a_[i]);
}

bool Curve::on_curve(const Point& p) const {
  if (p.is_infinity()) return true;
  const FieldPtr& f = p.x().field();
  const Element& x = p.x();
  const Element& y = p.y();
  const Element lhs = y * y + coef(0, f) * x * y + coef(2, f) * y;
  const Element rhs = ((x + coef(1, f)) * x + coef(3, f)) * x + coef(4, f);
  return lhs == rhs;
}

Point Curve::neg(const Point& p) const {
  if (p.is_infinity()) return p;
  const FieldPtr& f = p.x().field();
  return Point(p.x(), -p.y() - coef(0, f) * p.x() - coef(2, f));
}

Point Curve::add(const Point& p0, const Point& q0) const {
  if (p0.is_infinity()) return q0;
  if (q0.is_infinity()) return p0;
  const auto [p, q] = common_field(*this, p0, q0);
  const FieldPtr& f = p.x().field();
  const Element a1v = coef(0, f), a2v = coef(1, f), a3v = coef(2, f), a4v = coef(3, f);
  Element lambda;
  if (p.x() == q.x()) {
    if (neg(p) == q) return Point::infinity();
    const Element num = p.x() * p.x() * 3 + a2v * p.x() * 2 + a4v - a1v * p.y();
    const Element den = p.y() * 2 + a1v * p.x() + a3v;
    lambda = num / den;
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  const Element x3 = lambda * lambda + a1v * lambda - a2v - p.x() - q.x();
  const Element y3 = -(lambda + a1v) * x3 - (p.y() - lambda * p.x()) - a3v;
  return Point(x3, y3);
}

Point Curve::mul(std::int64_t k, const Point& p) const {
  Point base = k < 0 ? neg(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Point result;
  while (e) {
    if (e & 1) result = add(result, base);
    e >>= 1;
    if (e) base = add(base, base);
  }
  return result;
}

std::vector<Point> Curve::points_with_x(const Element& x) const {
  const FieldPtr& f = field_;
  const Element b = a1() * x + a3();
  const Element c = ((x + a2()) * x + a4()) * x + a6();
  const auto q = *f->order();
  std::vector<Point> out;
  if (f->characteristic() != 2) {
    // y = (-b +- sqrt(b^2 + 4c)) / 2
    const Element d = b * b + c * 4;
    const Element half = f->from_int(2).inv();
    if (d.is_zero()) {
      out.emplace_back(x, -b * half);
      return out;
    }
    if (!d.pow((q - 1) / 2).is_one()) return out;
    // Tonelli-Shanks in F_q.
    std::uint64_t odd = q - 1;
    int s = 0;
    while ((odd & 1) == 0) {
      odd >>= 1;
      ++s;
    }
    Element z = f->from_index(2);
    for (std::uint64_t i = 2; i < q; ++i) {
      z = f->from_index(i);
      if (!z.pow((q - 1) / 2).is_one()) break;
    }
    Element m_c = z.pow(odd);
    Element t = d.pow(odd);
    Element r = d.pow((odd + 1) / 2);
    int m = s;
    while (!t.is_one()) {
      int i = 0;
      Element t2 = t;
      while (!t2.is_one()) {
        t2 = t2 * t2;
        ++i;
      }
      Element bb = m_c;
      for (int j = 0; j < m - i - 1; ++j) bb = bb * bb;
      m = i;
      m_c = bb * bb;
      t = t * m_c;
      r = r * bb;
    }
    Element y1 = (-b + r) * half;
    Element y2 = (-b - r) * half;
    if (y2 < y1) std::swap(y1, y2);
    out.emplace_back(x, y1);
    out.emplace_back(x, y2);
    return out;
  }
  // Characteristic 2.
  if (b.is_zero()) {
    out.emplace_back(x, c.pow(q / 2));
    return out;
  }
  const Element u = c / (b * b);
  const std::size_t m = f->abs_degree();
  Element tr = u, power = u;
  for (std::size_t i = 1; i < m; ++i) {
    power = power * power;
    tr += power;
  }
  if (!tr.is_zero()) return out;
  Element z;
  if (m % 2 == 1) {
    // Half-trace.
    z = u;
    Element w = u;
    for (std::size_t i = 1; i <= (m - 1) / 2; ++i) {
      w = w * w;
      w = w * w;
      z += w;
    }
  } else {
    for (std::uint64_t i = 0; i < q; ++i) {
      const Element cand = f->from_index(i);
      if (cand * cand + cand == u) {
        z = cand;
        break;
      }
    }
  }
  Element y1 = b * z;
  Element y2 = b * (z + f->one());
  if (y2 < y1) std::swap(y1, y2);
  out.emplace_back(x, y1);
  out.emplace_back(x, y2);
  return out;
}

void Curve::for_each_point(const std::function<bool(const Point&)>& fn) const {
  const auto q = field_->order();
  if (!q || *q > kMaxCountingFieldOrder) {
    fail(ErrorKind::kScaleExceeded, "point enumeration limited to q <= 2^20");
  }
  for (std::uint64_t i = 0; i < *q; ++i) {
    for (const Point& p : points_with_x(field_->from_index(i))) {
      if (!fn(p)) return;
    }
  }
}

std::uint64_t Curve::count_by_enumeration() const {
  const FieldPtr& f = field_;
  const std::uint64_t q = *f->order();
  std::uint64_t count = 1;
  if (f->is_prime_field() && q > 2) {
    // Integer fast path with a table of squares.
    std::vector<char> square(q, 0);
    for (std::uint64_t y = 0; y < q; ++y) square[y * y % q] = 1;
    const std::uint64_t a1v = a1().value(), a2v = a2().value(), a3v = a3().value(),
                        a4v = a4().value(), a6v = a6().value();
    for (std::uint64_t x = 0; x < q; ++x) {
      const std::uint64_t b = (a1v * x + a3v) % q;
      const std::uint64_t c = (((x + a2v) * x % q + a4v) * x % q + a6v) % q;
      const std::uint64_t d = (b * b + 4 * c) % q;
      count += d == 0 ? 1 : (square[d] ? 2 : 0);
    }
    return count;
  }
  const bool char2 = f->characteristic() == 2;
  const std::size_t m = f->abs_degree();
  for (std::uint64_t i = 0; i < q; ++i) {
    const Element x = f->from_index(i);
    const Element b = a1() * x + a3();
    const Element c = ((x + a2()) * x + a4()) * x + a6();
    if (!char2) {
      const Element d = b * b + c * 4;
      if (d.is_zero()) {
        count += 1;
      } else if (d.pow((q - 1) / 2).is_one()) {
        count += 2;
      }
      continue;
    }
    if (b.is_zero()) {
      count += 1;
      continue;
    }
    const Element u = c / (b * b);
    Element tr = u, power = u;
    for (std::size_t k = 1; k < m; ++k) {
      power = power * power;
      tr += power;
    }
    if (tr.is_zero()) count += 2;
  }
  return count;
}

namespace {

std::pair<std::uint64_t, std::uint64_t> point_key(const Point& p) {
  if (p.is_infinity()) return {UINT64_MAX, UINT64_MAX};
  return {*p.x().index(), *p.y().index()};
}

std::uint64_t isqrt(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::uint64_t Curve::count_by_bsgs() const {
  const std::uint64_t q = *field_->order();
  const std::uint64_t spread = isqrt(4 * q);  // floor(2 sqrt q)
  const std::uint64_t lo = q + 1 - spread, hi = q + 1 + spread;
  const std::uint64_t width = hi - lo + 1;
  const std::uint64_t s = isqrt(width) + 1;
  std::uint64_t lcm = 1;
  int tried = 0;
  std::optional<std::uint64_t> answer;
  for_each_point([&](const Point& p) {
    if (++tried > 64) return false;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> baby;
    Point jp;
    for (std::uint64_t j = 0; j < s; ++j) {
      baby.emplace(point_key(jp), j);
      jp = add(jp, p);
    }
    const Point step = mul(static_cast<std::int64_t>(s), p);
    Point giant = mul(static_cast<std::int64_t>(lo), p);
    std::optional<std::uint64_t> multiple;
    for (std::uint64_t i = 0; i * s <= width; ++i) {
      auto it = baby.find(point_key(neg(giant)));
      if (it != baby.end()) {
        multiple = lo + i * s + it->second;
        break;
      }
      giant = add(giant, step);
    }
    if (!multiple) return false;
    const std::uint64_t ord = point_order(p, *multiple);
    lcm = std::lcm(lcm, ord);
    std::uint64_t first = (lo + lcm - 1) / lcm * lcm;
    if (first <= hi && first + lcm > hi) {
      answer = first;
      return false;
    }
    return true;
  });
  return answer ? *answer : count_by_enumeration();
}

std::uint64_t Curve::group_order() const {
  const auto q = field_->order();
  if (!q || *q > kMaxCountingFieldOrder) {
    fail(ErrorKind::kScaleExceeded, "point counting limited to q <= 2^20");
  }
  if (*q <= kEnumerationLimit) return count_by_enumeration();
  return count_by_bsgs();
}

std::uint64_t Curve::point_order(const Point& p, std::uint64_t multiple) const {
  std::uint64_t m = multiple;
  for (const auto& [l, e] : factorize(multiple)) {
    for (int i = 0; i < e; ++i) {
      if (!mul(static_cast<std::int64_t>(m / l), p).is_infinity()) break;
      m /= l;
    }
  }
  return m;
}

std::uint64_t Curve::point_order(const Point& p) const { return point_order(p, group_order()); }

bool Curve::operator==(const Curve& o) const {
  if (!field_->same_as(*o.field_)) return false;
  for (std::size_t i = 0; i < 5; ++i) {
    if (a_[i] != o.a_[i]) return false;
  }
  return true;
}

std::string Curve::to_string() const {
  return "y^2 + " + a1().to_string() + "xy + " + a3().to_string() + "y = x^3 + " +
         a2().to_string() + "x^2 + " + a4().to_string() + "x + " + a6().to_string();
}

Curve change_coordinates(const Curve& e, const Element& u, const Element& r, const Element& s,
                         const Element& t) {
  const Element ui = u.inv();
  const Element ui2 = ui * ui, ui3 = ui2 * ui, ui4 = ui2 * ui2, ui6 = ui3 * ui3;
  const Element& a1 = e.a1();
  const Element& a2 = e.a2();
  const Element& a3 = e.a3();
  const Element& a4 = e.a4();
  const Element& a6 = e.a6();
  return Curve(e.field(),
               {(a1 + s * 2) * ui, (a2 - s * a1 + r * 3 - s * s) * ui2, (a3 + r * a1 + t * 2) * ui3,
                (a4 - s * a3 + r * a2 * 2 - (t + r * s) * a1 + r * r * 3 - s * t * 2) * ui4,
                (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) * ui6});
}

bool isomorphic(const Curve& e1, const Curve& e2) {
  if (!e1.field()->same_as(*e2.field())) return false;
  if (e1.j_invariant() != e2.j_invariant()) return false;
  const FieldPtr& f = e1.field();
  const std::uint64_t q = *f->order();
  if (f->characteristic() > 3) {
    const Element c4a = e1.c4(), c6a = e1.c6(), c4b = e2.c4(), c6b = e2.c6();
    for (std::uint64_t i = 1; i < q; ++i) {
      const Element u = f->from_index(i);
      const Element u2 = u * u, u4 = u2 * u2;
      if (c4b * u4 == c4a && c6b * u4 * u2 == c6a) return true;
    }
    return false;
  }
  if (q > 256) fail(ErrorKind::kScaleExceeded, "isomorphism search limited to q <= 256");
  for (std::uint64_t iu = 1; iu < q; ++iu) {
    const Element u = f->from_index(iu);
    for (std::uint64_t is = 0; is < q; ++is) {
      const Element s = f->from_index(is);
      if ((e1.a1() + s * 2) != e2.a1() * u) continue;
      for (std::uint64_t ir = 0; ir < q; ++ir) {
        const Element r = f->from_index(ir);
        if ((e1.a2() - s * e1.a1() + r * 3 - s * s) != e2.a2() * u * u) continue;
        for (std::uint64_t it = 0; it < q; ++it) {
          if (change_coordinates(e1, u, r, s, f->from_index(it)) == e2) return true;
        }
      }
    }
  }
  return false;
}

Element eval_f(const Curve& e, const Point& a, const Point& b, const Point& p) {
  if (a == b) fail(ErrorKind::kInvalidArgument, "f_{A,B} needs A != B");
  if (common_field(e, p, a).first == common_field(e, p, a).second ||
      common_field(e, p, b).first == common_field(e, p, b).second) {
    fail(ErrorKind::kPoleEvaluation, "P is a pole of f_{A,B}");
  }
  const Point u = e.sub(p, a);
  const Point v = e.sub(a, b);
  const auto [u2, v2] = common_field(e, u, v);
  if (u2.x() == v2.x()) {
    if (u2.y() == v2.y()) fail(ErrorKind::kDegenerateSlope, "P - A = A - B");
    fail(ErrorKind::kVerticalSlope, "P - A and A - B share an x-coordinate");
  }
  return (u2.y() - v2.y()) / (u2.x() - v2.x());
}

std::vector<Point> multiples(const Curve& e, const Point& t, std::uint64_t n) {
  std::vector<Point> out;
  Point acc;
  for (std::uint64_t k = 0; k < n; ++k) {
    out.push_back(acc);
    acc = e.add(acc, t);
  }
  return out;
}

Element elliptic_constant_c(const Curve& e, const Point& t, std::uint64_t n) {
  const std::vector<Point> kt = multiples(e, t, n);
  const std::set<Point> kernel(kt.begin(), kt.end());
  std::vector<Point> safe;
  e.for_each_point([&](const Point& p) {
    if (!kernel.count(p)) safe.push_back(p);
    return safe.size() < 2;
  });
  if (safe.size() < 2) {
    fail(ErrorKind::kNoSafeEvaluationPoint, "fewer than two F_q-points outside <t>");
  }
  std::optional<Element> value;
  for (const Point& p : safe) {
    Element sum = e.field()->zero();
    for (std::uint64_t k = 0; k < n; ++k) {
      sum += eval_f(e, kt[k], kt[(k + 1) % n], p);
    }
    if (value && *value != sum) {
      fail(ErrorKind::kConsistencyFailure, "sum of f_{kt,(k+1)t} is not constant");
    }
    value = sum;
  }
  return *value;
}

int valuation(std::uint64_t l, std::uint64_t n) {
  if (n == 0 || l < 2) return 0;
  int v = 0;
  while (n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

std::uint64_t nq(std::uint64_t q, std::uint64_t n) {
  std::uint64_t result = 1;
  for (const auto& [l, vn] : factorize(n)) {
    int e = vn;
    if ((q - 1) % l == 0) e = std::max(2 * valuation(l, q - 1) + 1, 2 * vn);
    for (int i = 0; i < e; ++i) result *= l;
  }
  return result;
}

}  // namespace ellnb
