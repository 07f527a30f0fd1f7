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

#include <fstream>

#include "ellnb/errors.hpp"

namespace ellnb {

Json to_json(const Element& x) {
  if (x.field()->is_prime_field()) return x.value();
  Json arr = Json::array();
  for (auto c : x.flat()) arr.push_back(c);
  return arr;
}

Json to_json(const Point& p) {
  if (p.is_infinity()) return "O";
  return Json::array({to_json(p.x()), to_json(p.y())});
}

Json to_json(const Curve& e) {
  Json j;
  const FieldPtr& f = e.field();
  j["p"] = f->characteristic();
  if (f->is_prime_field()) {
    j["q_modulus"] = nullptr;
  } else {
    Json mod = Json::array();
    for (const auto& c : f->modulus()) mod.push_back(c.value());
    j["q_modulus"] = mod;
  }
  Json a = Json::array();
  for (const auto& c : e.coeffs()) a.push_back(to_json(c));
  j["a"] = a;
  return j;
}

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const CyclicVector& v) {
  Json arr = Json::array();
  for (const auto& e : v.entries()) arr.push_back(to_json(e));
  return arr;
}

Json to_json(const EnbParams& p) {
  Json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["curve"] = to_json(p.curve);
  j["group_order"] = p.group_order;
  j["t"] = to_json(p.t);
  j["codomain"] = to_json(p.iso.codomain);
  j["isogeny"] = {{"x_num", to_json(p.iso.x_num)},   {"x_den", to_json(p.iso.x_den)},
                  {"y_num1", to_json(p.iso.y_num1)}, {"y_num0", to_json(p.iso.y_num0)},
                  {"y_den", to_json(p.iso.y_den)}};
  j["a"] = to_json(p.a);
  j["modulus"] = to_json(p.modulus);
  j["b"] = to_json(p.b);
  j["c"] = to_json(p.c);
  j["scalar_a"] = to_json(p.scalar_a);
  j["scalar_b"] = to_json(p.scalar_b);
  j["R"] = to_json(p.R);
  Json basis = Json::array();
  for (const auto& alpha : p.basis) basis.push_back(to_json(alpha));
  j["basis"] = basis;
  j["nq"] = p.nq;
  j["nq_within_sqrt_q"] = p.nq_within_sqrt_q;
  return j;
}

Json to_json(const ComplexityReport& r, const EnbParams& params) {
  Json j;
  j["q"] = params.q;
  j["n"] = params.n;
  j["R"] = to_json(r.special.R);
  j["Rx"] = to_json(r.special.Rx);
  j["Rinv"] = to_json(r.special.Rinv);
  j["iota"] = to_json(r.special.iota);
  Json middle = Json::array();
  for (const auto& m : r.middle) middle.push_back({{"k", m.k}, {"vec", to_json(m.vec)}, {"weight", m.weight}});
  j["middle"] = middle;
  j["middle_sum"] = r.middle_sum;
  if (r.has_exact) {
    const std::size_t n = params.n;
    j["rows"] = {{"0", to_json(r.rows[0])}, {"1", to_json(r.rows[1])}, {"n-1", to_json(r.rows[n - 1])}};
    j["row_weights"] = {{"0", r.row_weight(0)}, {"1", r.row_weight(1)}, {"n-1", r.row_weight(n - 1)}};
    j["three_row_weight"] = r.three_row_weight();
  }
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.has_exact) {
    j["exact"] = r.exact;
  } else {
    j["exact"] = nullptr;
  }
  Json m = Json::array();
  for (const auto& row : r.M) m.push_back(to_json(row));
  j["M"] = m;
  j["modulus"] = to_json(params.modulus);
  return j;
}

RawElement raw_element_from_json(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (j.is_array()) {
    RawElement out;
    for (const auto& c : j) {
      if (!c.is_number_integer()) fail(ErrorKind::kInvalidArgument, "element coefficients must be integers");
      out.push_back(c.get<std::int64_t>());
    }
    return out;
  }
  fail(ErrorKind::kInvalidArgument, "element must be an integer or an array: " + j.dump());
}

RawPoint raw_point_from_json(const Json& j) {
  RawPoint p;
  if (j.is_string() && j.get<std::string>() == "O") {
    p.infinity = true;
    return p;
  }
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::kInvalidArgument, "point must be [x, y] or \"O\"");
  p.x = raw_element_from_json(j[0]);
  p.y = raw_element_from_json(j[1]);
  return p;
}

namespace {

std::array<RawElement, 5> raw_curve(const Json& j) {
  const Json& a = j.is_object() ? j.at("a") : j;
  if (!a.is_array() || a.size() != 5) fail(ErrorKind::kInvalidArgument, "curve needs five coefficients");
  std::array<RawElement, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = raw_element_from_json(a[i]);
  return out;
}

std::optional<std::size_t> opt_size(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::size_t>();
}

}  // namespace

OverridesFile parse_overrides(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::kInvalidArgument, "overrides must be a JSON object");
  OverridesFile out;
  try {
    if (j.contains("q")) out.q = j["q"].get<std::uint64_t>();
    if (j.contains("n")) out.n = j["n"].get<std::uint64_t>();
    Overrides& ov = out.overrides;
    if (j.contains("curve")) {
      const Json& c = j["curve"];
      ov.curve = raw_curve(c);
      if (c.is_object() && c.contains("q_modulus") && !c["q_modulus"].is_null()) {
        ov.q_modulus = raw_element_from_json(c["q_modulus"]);
      }
    }
    if (j.contains("t")) ov.t = raw_point_from_json(j["t"]);
    if (j.contains("R")) ov.R = raw_point_from_json(j["R"]);
    if (j.contains("a")) ov.a = raw_point_from_json(j["a"]);
    if (j.contains("b")) ov.b = raw_point_from_json(j["b"]);
    if (j.contains("scalar_a")) ov.scalar_a = raw_element_from_json(j["scalar_a"]);
    if (j.contains("scalar_b")) ov.scalar_b = raw_element_from_json(j["scalar_b"]);
    if (j.contains("expected")) {
      const Json& e = j["expected"];
      out.expected.lower = opt_size(e, "lower");
      out.expected.upper = opt_size(e, "upper");
      out.expected.exact = opt_size(e, "exact");
      out.expected.middle_sum = opt_size(e, "middle_sum");
      out.expected.three_row_weight = opt_size(e, "three_row_weight");
      if (e.contains("codomain")) out.expected.codomain = raw_curve(e["codomain"]);
    }
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorKind::kInvalidArgument, std::string("malformed overrides: ") + err.what());
  }
  return out;
}

OverridesFile load_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidArgument, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorKind::kInvalidArgument, path + ": " + err.what());
  }
  return parse_overrides(j);
}

std::vector<Discrepancy> compare_expected(const Expected& e, const ComplexityReport& r,
                                          const EnbParams& params) {
  std::vector<Discrepancy> out;
  auto cmp = [&](const char* name, const std::optional<std::size_t>& want, std::size_t got) {
    if (want && *want != got) out.push_back({name, *want, got});
  };
  cmp("lower", e.lower, r.lower);
  cmp("upper", e.upper, r.upper);
  cmp("middle_sum", e.middle_sum, r.middle_sum);
  if (r.has_exact) {
    cmp("exact", e.exact, r.exact);
    cmp("three_row_weight", e.three_row_weight, r.three_row_weight());
  }
  if (e.codomain) {
    std::array<Element, 5> coeffs;
    for (std::size_t i = 0; i < 5; ++i) coeffs[i] = element_from_raw(params.fq, (*e.codomain)[i]);
    Json printed = Json::array();
    for (const auto& c : coeffs) printed.push_back(to_json(c));
    bool same = false;
    try {
      same = isomorphic(Curve(params.fq, coeffs), params.iso.codomain);
    } catch (const Error&) {
      same = false;  // singular printed curve
    }
    if (!same) out.push_back({"codomain", printed, to_json(params.iso.codomain)["a"]});
  }
  return out;
}

Json to_json(const std::vector<Discrepancy>& d) {
  Json arr = Json::array();
  for (const auto& x : d) {
    arr.push_back({{"quantity", x.quantity}, {"expected", x.expected}, {"computed", x.computed}});
  }
  return arr;
}

}  // namespace ellnb
