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

// JSON encoding of field elements, curves, parameter sets and reports.
// Prime-field elements are bare integers; other elements are flat F_p
// coefficient arrays, lowest degree first. Points are [x, y] or "O".

#include <optional>
#include <string>
#include <vector>

#include "ellnb/enb.hpp"
#include "ellnb/tensor.hpp"
#include "json.hpp"

namespace ellnb {

using Json = nlohmann::ordered_json;

Json to_json(const Element& x);
Json to_json(const Point& p);
Json to_json(const Curve& e);
Json to_json(const Poly& p);
Json to_json(const CyclicVector& v);
Json to_json(const EnbParams& params);
Json to_json(const ComplexityReport& report, const EnbParams& params);

RawElement raw_element_from_json(const Json& j);
RawPoint raw_point_from_json(const Json& j);

// Values printed in the source material for a parameter set, used to flag
// disagreements with the computed report.
struct Expected {
  std::optional<std::size_t> lower, upper, exact, middle_sum, three_row_weight;
  std::optional<std::array<RawElement, 5>> codomain;
};

struct OverridesFile {
  std::optional<std::uint64_t> q, n;
  Overrides overrides;
  Expected expected;
};

// Accepts both hand-written override files and `params` output.
OverridesFile parse_overrides(const Json& j);
OverridesFile load_overrides(const std::string& path);

struct Discrepancy {
  std::string quantity;
  Json expected;
  Json computed;
};

std::vector<Discrepancy> compare_expected(const Expected& expected, const ComplexityReport& report,
                                          const EnbParams& params);
Json to_json(const std::vector<Discrepancy>& d);

}  // namespace ellnb
