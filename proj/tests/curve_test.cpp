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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ellnb/errors.hpp"
#include "test_support.hpp"

namespace ellnb {
namespace {

FieldPtr f13() { return Field::prime(13); }
FieldPtr f7() { return Field::prime(7); }
Curve e1() { return Curve::from_ints(f13(), {4, 1, 9, 3, 8}); }
Curve e2() { return Curve::from_ints(f7(), {3, 1, 2, 2, 4}); }
Curve e3() { return Curve::from_ints(f7(), {3, 6, 4, 0, 1}); }
Point P(const FieldPtr& f, std::int64_t x, std::int64_t y) { return Point(f->from_int(x), f->from_int(y)); }

// Every affine point by testing all (x, y) pairs.
std::vector<Point> brute_points(const Curve& e) {
  const FieldPtr& f = e.field();
  std::vector<Point> out;
  for (std::uint64_t i = 0; i < *f->order(); ++i) {
    for (std::uint64_t j = 0; j < *f->order(); ++j) {
      Point p(f->from_index(i), f->from_index(j));
      if (e.on_curve(p)) out.push_back(p);
    }
  }
  return out;
}

std::vector<Curve> small_curves() {
  const FieldPtr f8 = Field::galois(2, 3);
  const FieldPtr f9 = Field::galois(3, 2);
  const FieldPtr f4 = Field::galois(2, 2);
  return {e1(),
          e2(),
          e3(),
          Curve::from_ints(Field::prime(2), {1, 0, 0, 0, 1}),
          Curve::from_ints(Field::prime(3), {0, 0, 0, 2, 1}),
          Curve(f8, {f8->one(), f8->from_index(3), f8->zero(), f8->zero(), f8->from_index(5)}),
          Curve(f4, {f4->zero(), f4->zero(), f4->one(), f4->one(), f4->one()}),
          Curve(f9, {f9->from_index(4), f9->from_index(2), f9->from_index(7), f9->from_index(1), f9->from_index(2)}),
          Curve::from_ints(Field::prime(17), {0, 0, 0, 3, 5})};
}

TEST(CurveTest, OnCurveExamples) {
  EXPECT_TRUE(e1().on_curve(P(f13(), 0, 10)));
  EXPECT_FALSE(e1().on_curve(P(f13(), 0, 0)));
  EXPECT_TRUE(e1().on_curve(Point::infinity()));
}

TEST(CurveTest, SingularCurveRejected) {
  try {
    Curve::from_ints(f7(), {0, 0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSingularCurve);
  }
}

TEST(CurveTest, GroupLawExamples) {
  const Curve e = e1();
  const Point t = P(f13(), 0, 10);
  const Point t2 = e.dbl(t);
  EXPECT_EQ(t2, P(f13(), 5, 1));
  EXPECT_TRUE(e.on_curve(t2));
  EXPECT_EQ(e.point_order(t2), 7u);
  EXPECT_EQ(e.add(t, Point::infinity()), t);
  EXPECT_TRUE(e.mul(7, t).is_infinity());
  EXPECT_EQ(e.mul(-1, t), e.neg(t));
  EXPECT_TRUE(e.add(t, e.neg(t)).is_infinity());
}

TEST(CurveTest, GroupOrders) {
  EXPECT_EQ(e1().group_order(), 14u);
  EXPECT_EQ(e2().group_order(), 12u);
  EXPECT_EQ(e3().group_order(), 12u);
  EXPECT_EQ(e3().point_order(P(f7(), 4, 5)), 6u);
  EXPECT_EQ(e2().point_order(P(f7(), 2, 2)), 6u);
}

TEST(CurveTest, GroupOrderMatchesBruteForce) {
  for (const Curve& e : small_curves()) {
    const auto pts = brute_points(e);
    EXPECT_EQ(e.group_order(), pts.size() + 1) << e.to_string() << " over " << e.field()->describe();
    std::vector<Point> enumerated;
    e.for_each_point([&](const Point& p) {
      enumerated.push_back(p);
      return true;
    });
    std::set<Point> a(pts.begin(), pts.end()), b(enumerated.begin(), enumerated.end());
    EXPECT_EQ(a, b);
    EXPECT_TRUE(std::is_sorted(enumerated.begin(), enumerated.end()));
  }
}

TEST(CurveTest, BabyStepGiantStepMatchesCounting) {
  // q above the enumeration threshold; oracle counts solutions of
  // (2y + b)^2 = b^2 + 4c with integer arithmetic.
  for (std::int64_t q : {4099, 8191}) {
    const FieldPtr f = Field::prime(static_cast<std::uint64_t>(q));
    for (std::array<std::int64_t, 5> a : {std::array<std::int64_t, 5>{0, 0, 0, 2, 3},
                                          std::array<std::int64_t, 5>{1, 2, 3, 4, 5}}) {
      const Curve e = Curve::from_ints(f, a);
      std::vector<int> roots(static_cast<std::size_t>(q), 0);
      for (std::int64_t y = 0; y < q; ++y) roots[static_cast<std::size_t>(y * y % q)]++;
      std::uint64_t want = 1;
      for (std::int64_t x = 0; x < q; ++x) {
        const std::int64_t b = (a[0] * x + a[2]) % q;
        const std::int64_t c = ((x * x % q * x) + a[1] * x % q * x + a[3] * x + a[4]) % q;
        want += static_cast<std::uint64_t>(roots[static_cast<std::size_t>((b * b + 4 * c) % q)]);
      }
      EXPECT_EQ(e.group_order(), want);
    }
  }
}

TEST(CurveTest, ScaleExceeded) {
  const Curve e = Curve::from_ints(Field::prime(2097143), {0, 0, 0, 1, 1});
  try {
    e.group_order();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kScaleExceeded);
  }
}

TEST(CurveTest, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(21);
  for (const Curve& e : small_curves()) {
    std::vector<Point> pts{Point::infinity()};
    e.for_each_point([&](const Point& p) {
      pts.push_back(p);
      return true;
    });
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    const std::uint64_t n = e.group_order();
    for (int i = 0; i < 200; ++i) {
      const Point& a = pts[pick(rng)];
      const Point& b = pts[pick(rng)];
      const Point& c = pts[pick(rng)];
      ASSERT_EQ(e.add(e.add(a, b), c), e.add(a, e.add(b, c)));
      ASSERT_EQ(e.add(a, b), e.add(b, a));
      ASSERT_TRUE(e.on_curve(e.add(a, b)));
      ASSERT_TRUE(e.mul(static_cast<std::int64_t>(n), a).is_infinity());
    }
  }
}

TEST(CurveTest, HasseBound) {
  for (const Curve& e : small_curves()) {
    const auto q = static_cast<std::int64_t>(*e.field()->order());
    const auto n = static_cast<std::int64_t>(e.group_order());
    EXPECT_LE((n - q - 1) * (n - q - 1), 4 * q);
  }
}

TEST(CurveTest, IsomorphismUnderCoordinateChange) {
  std::mt19937_64 rng(22);
  for (const Curve& e : small_curves()) {
    const FieldPtr& f = e.field();
    std::uniform_int_distribution<std::uint64_t> d(0, *f->order() - 1);
    const Element u = f->from_index(1 + d(rng) % (*f->order() - 1));
    const Curve e2 = change_coordinates(e, u, f->from_index(d(rng)), f->from_index(d(rng)), f->from_index(d(rng)));
    EXPECT_TRUE(isomorphic(e, e2));
    EXPECT_EQ(e.group_order(), e2.group_order());
  }
  EXPECT_FALSE(isomorphic(e2(), Curve::from_ints(f7(), {3, 1, 2, 3, 1})));
}

TEST(CurveTest, EvalFExamples) {
  const Curve e = e1();
  const FieldPtr f = f13();
  const Point t = P(f, 0, 10);
  const Point r = P(f, 9, 0);
  EXPECT_EQ(eval_f(e, Point::infinity(), t, r), f->from_int(5));
  EXPECT_EQ(f->from_int(6) * eval_f(e, Point::infinity(), t, r), f->from_int(4));
  const std::vector<std::int64_t> want{4, 0, 8, 10, 10, 8, 0};
  Point p = r;
  for (std::size_t j = 0; j < 7; ++j) {
    EXPECT_EQ(f->from_int(6) * eval_f(e, Point::infinity(), t, p), f->from_int(want[j]));
    p = e.add(p, t);
  }
  try {
    eval_f(e, t, Point::infinity(), t);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kPoleEvaluation);
  }
  EXPECT_THROW(eval_f(e, t, Point::infinity(), Point::infinity()), Error);
}

TEST(CurveTest, EvalFMatchesBruteForceSlope) {
  for (const Curve& e : {e1(), e2(), e3()}) {
    const FieldPtr& f = e.field();
    std::vector<Point> pts{Point::infinity()};
    e.for_each_point([&](const Point& p) {
      pts.push_back(p);
      return true;
    });
    const Point& a = pts[1];
    const Point& b = pts[2];
    for (const Point& p : pts) {
      if (p == a || p == b) continue;
      const Point u = e.sub(p, a), v = e.sub(a, b);
      if (u.is_infinity() || v.is_infinity() || u.x() == v.x()) continue;
      // The slope is the unique lambda with y_u - y_v = lambda (x_u - x_v).
      std::optional<Element> lambda;
      for (std::uint64_t i = 0; i < *f->order(); ++i) {
        const Element l = f->from_index(i);
        if (u.y() - v.y() == l * (u.x() - v.x())) lambda = l;
      }
      ASSERT_TRUE(lambda.has_value());
      EXPECT_EQ(eval_f(e, a, b, p), *lambda);
    }
  }
}

TEST(CurveTest, TranslationIdentity) {
  // f_{kt,(k+1)t}(P) = f_{O,t}(P - kt) and f_{O,t}(P) = f_{O,t}(t - P).
  const Curve e = e1();
  const Point t = P(f13(), 0, 10);
  const auto kt = multiples(e, t, 7);
  const std::set<Point> kernel(kt.begin(), kt.end());
  e.for_each_point([&](const Point& p) {
    if (kernel.count(p)) return true;
    for (std::size_t k = 0; k < 7; ++k) {
      EXPECT_EQ(eval_f(e, kt[k], kt[(k + 1) % 7], p), eval_f(e, Point::infinity(), t, e.sub(p, kt[k])));
    }
    EXPECT_EQ(eval_f(e, Point::infinity(), t, p), eval_f(e, Point::infinity(), t, e.sub(t, p)));
    return true;
  });
}

TEST(CurveTest, EllipticConstant) {
  EXPECT_EQ(elliptic_constant_c(e1(), P(f13(), 0, 10), 7), f13()->from_int(11));
  const Element c2 = elliptic_constant_c(e2(), P(f7(), 2, 2), 6);
  EXPECT_EQ(c2, f7()->from_int(4));
  EXPECT_TRUE((c2 * f7()->from_int(2)).is_one());
}

TEST(CurveTest, EllipticConstantIsConstant) {
  for (const auto& [e, t, n] : {std::tuple{e1(), P(f13(), 0, 10), 7}, std::tuple{e2(), P(f7(), 2, 2), 6},
                                std::tuple{e3(), P(f7(), 4, 5), 6}}) {
    const auto kt = multiples(e, t, n);
    const std::set<Point> kernel(kt.begin(), kt.end());
    std::optional<Element> value;
    e.for_each_point([&](const Point& p) {
      if (kernel.count(p)) return true;
      Element s = e.field()->zero();
      for (int k = 0; k < n; ++k) s += eval_f(e, kt[k], kt[(k + 1) % n], p);
      if (value) {
        EXPECT_EQ(*value, s);
      }
      value = s;
      return true;
    });
    EXPECT_EQ(*value, elliptic_constant_c(e, t, n));
  }
}

TEST(CurveTest, NqExamples) {
  EXPECT_EQ(nq(13, 7), 7u);
  EXPECT_EQ(nq(7, 6), 216u);
  EXPECT_EQ(nq(8, 3), 3u);
}

TEST(CurveTest, NqValuationCases) {
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 49}) {
    for (std::uint64_t n = 2; n <= 24; ++n) {
      const std::uint64_t v = nq(q, n);
      for (std::uint64_t l : primes) {
        if (l > n) break;
        const int vn = valuation(l, n);
        int want;
        if ((q - 1) % l != 0) {
          want = vn;
        } else if (vn == 0) {
          want = 0;
        } else {
          want = std::max(2 * valuation(l, q - 1) + 1, 2 * vn);
        }
        EXPECT_EQ(valuation(l, v), want) << "q=" << q << " n=" << n << " l=" << l;
      }
    }
  }
}

TEST(CurveTest, PointsOverExtensionField) {
  const EnbParams& p = testing::example1();
  const Curve ext = p.curve.base_change(p.fqn);
  EXPECT_TRUE(ext.on_curve(p.b));
  EXPECT_TRUE(p.curve.on_curve(p.b));
  const Point q = ext.add(p.b, ext.embed(p.t, p.fqn));
  EXPECT_EQ(p.curve.add(p.b, p.t), q);
}

}  // namespace
}  // namespace ellnb
