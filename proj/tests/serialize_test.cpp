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

#include "ellnb/serialize.hpp"

#include <gtest/gtest.h>

#include "ellnb/errors.hpp"
#include "test_support.hpp"

namespace ellnb {
namespace {

void expect_same(const EnbParams& a, const EnbParams& b) {
  EXPECT_EQ(a.curve, b.curve);
  EXPECT_EQ(a.t, b.t);
  EXPECT_EQ(a.R, b.R);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.modulus.to_string(), b.modulus.to_string());
  EXPECT_EQ(a.b.x().flat(), b.b.x().flat());
  EXPECT_EQ(a.b.y().flat(), b.b.y().flat());
  EXPECT_EQ(a.scalar_a, b.scalar_a);
  EXPECT_EQ(a.scalar_b, b.scalar_b);
  ASSERT_EQ(a.basis.size(), b.basis.size());
  for (std::size_t k = 0; k < a.basis.size(); ++k) EXPECT_EQ(a.basis[k].flat(), b.basis[k].flat());
}

TEST(SerializeTest, ParamsRoundTrip) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{13, 7}, {9, 4}, {8, 3}, {7, 6}}) {
    SCOPED_TRACE("q=" + std::to_string(q) + " n=" + std::to_string(n));
    const EnbParams p = params_computation(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n));
    const Json j = to_json(p);
    const OverridesFile f = parse_overrides(Json::parse(j.dump()));
    ASSERT_TRUE(f.q && f.n);
    EXPECT_EQ(*f.q, p.q);
    EXPECT_EQ(*f.n, p.n);
    ASSERT_TRUE(f.overrides.b.has_value());
    const EnbParams r = params_computation(*f.q, *f.n, f.overrides);
    expect_same(p, r);
    EXPECT_EQ(to_json(r).dump(), j.dump());
  }
}

TEST(SerializeTest, ElementAndPointEncoding) {
  const FieldPtr f = Field::prime(13);
  EXPECT_EQ(to_json(f->from_int(5)).dump(), "5");
  EXPECT_EQ(to_json(Point::infinity()).dump(), "\"O\"");
  EXPECT_TRUE(raw_point_from_json(Json("O")).infinity);
  const FieldPtr f9 = Field::galois(3, 2);
  EXPECT_EQ(to_json(f9->from_index(5)).dump(), "[2,1]");
  EXPECT_EQ(raw_element_from_json(Json::parse("[2,1]")), (RawElement{2, 1}));
  EXPECT_THROW(raw_point_from_json(Json::parse("[1]")), Error);
  EXPECT_THROW(raw_element_from_json(Json::parse("\"x\"")), Error);
}

TEST(SerializeTest, ReportKeys) {
  const EnbParams& p = testing::example3();
  const Json j = to_json(exact_complexity(p), p);
  for (const char* key : {"R", "Rx", "Rinv", "iota", "middle", "middle_sum", "rows", "row_weights",
                          "three_row_weight", "lower", "upper", "exact", "M"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["lower"], 11);
  EXPECT_EQ(j["upper"], 26);
  EXPECT_TRUE(to_json(bounds_report(p), p)["exact"].is_null());
}

TEST(SerializeTest, OverridesFileFormat) {
  const OverridesFile f = load_overrides(std::string(ELLNB_EXAMPLES_DIR) + "/example1.json");
  EXPECT_EQ(f.q, 13u);
  EXPECT_EQ(f.n, 7u);
  ASSERT_TRUE(f.overrides.curve.has_value());
  EXPECT_EQ((*f.overrides.curve)[3], RawElement{3});
  ASSERT_TRUE(f.overrides.t.has_value());
  EXPECT_EQ(f.overrides.t->y, RawElement{10});
  EXPECT_EQ(f.expected.lower, 25u);
  EXPECT_THROW(load_overrides("/nonexistent/file.json"), Error);
}

TEST(SerializeTest, DiscrepancyDetection) {
  const EnbParams& p = testing::example1();
  const ComplexityReport r = exact_complexity(p);
  Expected e;
  e.lower = r.lower;
  e.upper = r.upper + 1;
  e.codomain = std::array<RawElement, 5>{RawElement{4}, {1}, {9}, {0}, {6}};
  auto d = compare_expected(e, r, p);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].quantity, "upper");
  EXPECT_EQ(d[0].expected, r.upper + 1);
  EXPECT_EQ(d[0].computed, r.upper);

  const EnbParams& p2 = testing::example2();
  Expected e2;
  e2.codomain = std::array<RawElement, 5>{RawElement{3}, {1}, {2}, {2}, {4}};
  d = compare_expected(e2, bounds_report(p2), p2);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].quantity, "codomain");
  EXPECT_EQ(to_json(d)[0]["quantity"], "codomain");
}

}  // namespace
}  // namespace ellnb
