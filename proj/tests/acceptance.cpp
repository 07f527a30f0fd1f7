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

// Acceptance checks. Usage: acceptance [criterion]. With no argument every
// criterion runs. Prints PASS/FAIL per check and per criterion; the exit
// status is nonzero when any selected criterion fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ellnb/curve.hpp"
#include "ellnb/enb.hpp"
#include "ellnb/errors.hpp"
#include "ellnb/linalg.hpp"
#include "ellnb/serialize.hpp"
#include "ellnb/tensor.hpp"
#include "test_support.hpp"

namespace {

using namespace ellnb;
using V = std::vector<std::int64_t>;
using testing::ints;

std::string str(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

class Checker {
 public:
  void check(bool ok, const std::string& what, const std::string& detail = {}) {
    std::cout << "  " << (ok ? "PASS " : "FAIL ") << what;
    if (!ok && !detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++failures_;
  }
  void vec(const V& got, const V& want, const std::string& what) {
    check(got == want, what, "computed " + str(got) + ", expected " + str(want));
  }
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << "computed " << got << ", expected " << want;
    check(got == static_cast<A>(want), what, os.str());
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::uint64_t hasse_upper(std::uint64_t q) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) <= 4 * q) ++s;
  return q + 1 + s;
}

// Parameter sets from plain canonical search.
const std::vector<EnbParams>& searched() {
  static const std::vector<EnbParams> sets = [] {
    std::vector<EnbParams> out;
    for (std::uint64_t q : {5, 7, 11, 13, 17}) {
      for (std::uint64_t n = 2; 2 * n <= hasse_upper(q); ++n) {
        try {
          out.push_back(params_computation(q, n));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kParameterSearchExhausted) throw;
        }
      }
    }
    return out;
  }();
  return sets;
}

std::vector<const EnbParams*> every_params() {
  std::vector<const EnbParams*> ps{&testing::example1(), &testing::example2(), &testing::example3()};
  for (const auto& p : searched()) ps.push_back(&p);
  return ps;
}

std::string label(const EnbParams& p) {
  return "q=" + std::to_string(p.q) + " n=" + std::to_string(p.n) + " E=" + p.curve.to_string();
}

void middle_vectors(Checker& c, const ComplexityReport& r, const std::vector<V>& want) {
  c.eq(r.middle.size(), want.size(), "number of middle vectors");
  for (std::size_t i = 0; i < want.size() && i < r.middle.size(); ++i) {
    c.vec(ints(r.middle[i].vec), want[i], "middle vector k=" + std::to_string(r.middle[i].k));
  }
}

void criterion1(Checker& c) {
  const EnbParams& p = testing::example1();
  const ComplexityReport r = exact_complexity(p);
  c.vec(ints(r.special.R), {4, 0, 8, 10, 10, 8, 0}, "R");
  c.vec(ints(r.special.Rx), {9, 3, 6, 1, 6, 3, 9}, "Rx");
  c.vec(ints(r.special.Rinv), {12, 8, 6, 0, 0, 8, 8}, "Rinv");
  middle_vectors(c, r, {{3, 5, 3, 11, 11, 11, 11}, {6, 1, 1, 6, 0, 0, 0}, {6, 0, 0, 0, 6, 1, 1},
                        {3, 11, 11, 11, 11, 3, 5}});
  c.eq(r.middle_sum, 22, "middle weight sum");
  c.eq(r.lower, 25, "lower bound");
  c.eq(r.upper, 43, "upper bound");
  c.eq(r.exact, 43, "exact complexity");
}

void criterion2(Checker& c) {
  const EnbParams& p = testing::example2();
  const ComplexityReport r = exact_complexity(p);
  c.vec(ints(r.special.Rx), {4, 4, 3, 1, 1, 3}, "Rx");
  c.vec(ints(r.special.R), {4, 2, 4, 0, 5, 0}, "R");
  c.vec(ints(r.special.Rinv), {1, 0, 3, 0, 1, 3}, "Rinv");
  middle_vectors(c, r, {{5, 6, 5, 4, 4, 4}, {4, 3, 3, 4, 3, 3}, {5, 4, 4, 4, 5, 6}});
  c.eq(r.middle_sum, 18, "middle weight sum");
  c.eq(r.lower, 21, "lower bound");
  c.eq(r.upper, 36, "upper bound from the formula");
  Expected printed;
  printed.upper = 31;
  bool flagged = false;
  for (const auto& d : compare_expected(printed, r, p)) flagged = flagged || d.quantity == "upper";
  c.check(flagged, "printed upper bound 31 flagged as a discrepancy");
  c.eq(r.three_row_weight(), 12, "three-row weight total");
  c.eq(r.exact, 30, "exact complexity");
}

void criterion3(Checker& c) {
  const EnbParams& p = testing::example3();
  const ComplexityReport r = exact_complexity(p);
  c.vec(ints(r.special.Rx), {1, 1, 6, 2, 2, 6}, "Rx");
  c.vec(ints(r.special.R), {2, 5, 2, 1, 4, 1}, "R");
  c.vec(ints(r.special.Rinv), {0, 3, 1, 3, 0, 1}, "Rinv");
  middle_vectors(c, r, {{3, 4, 3, 0, 0, 0}, {3, 0, 0, 3, 0, 0}, {3, 0, 0, 0, 3, 4}});
  c.eq(r.middle_sum, 8, "middle weight sum");
  c.eq(r.lower, 11, "lower bound");
  c.eq(r.upper, 26, "upper bound");
  c.eq(r.exact, 20, "exact complexity");
}

void criterion4(Checker& c) {
  const std::vector<V> m2{{0, 1, 1, 0, 0, 0}, {6, 0, 2, 0, 6, 0}, {0, 3, 0, 0, 3, 0},
                          {2, 0, 6, 0, 6, 0}, {1, 1, 0, 0, 0, 0}, {2, 4, 2, 0, 4, 0}};
  const std::vector<V> m3{{2, 3, 3, 2, 4, 4}, {1, 5, 4, 5, 1, 1}, {2, 6, 2, 2, 6, 2},
                          {4, 5, 1, 1, 1, 5}, {3, 3, 2, 4, 4, 2}, {4, 4, 4, 1, 2, 1}};
  const ComplexityReport r2 = bounds_report(testing::example2());
  const ComplexityReport r3 = bounds_report(testing::example3());
  c.eq(r2.M.size(), 6, "M2 row count");
  c.eq(r3.M.size(), 6, "M3 row count");
  for (std::size_t k = 0; k < 6 && k < r2.M.size(); ++k) c.vec(ints(r2.M[k]), m2[k], "M2 row " + std::to_string(k + 1));
  for (std::size_t k = 0; k < 6 && k < r3.M.size(); ++k) c.vec(ints(r3.M[k]), m3[k], "M3 row " + std::to_string(k + 1));
}

V rotate(const V& v, std::size_t s, bool reflect) {
  const std::size_t n = v.size();
  V out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = reflect ? (n - i) % n : i;
    out[(j + s) % n] = v[i];
  }
  return out;
}

std::size_t nonzero(const V& v) {
  std::size_t w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

void rows_match(Checker& c, const std::string& name, const EnbParams& p, const V& sq, const V& r1, const V& rl,
                const std::array<std::size_t, 3>& weights) {
  const ComplexityReport r = exact_complexity(p);
  const std::size_t n = p.n;
  const V c0 = ints(r.rows[0]), c1 = ints(r.rows[1]), cl = ints(r.rows[n - 1]);
  // A relabeling alpha_k -> alpha_{k+s} rotates every row by s; reversing the
  // index order also swaps rows 1 and n-1.
  bool found = false;
  for (std::size_t s = 0; s < n && !found; ++s) {
    found = (rotate(c0, s, false) == sq && rotate(c1, s, false) == r1 && rotate(cl, s, false) == rl) ||
            (rotate(c0, s, true) == sq && rotate(cl, s, true) == r1 && rotate(c1, s, true) == rl);
  }
  c.check(found, name + " rows alpha_0^2, alpha_0 alpha_1, alpha_0 alpha_{n-1}",
          "computed " + str(c0) + " " + str(c1) + " " + str(cl) + ", expected " + str(sq) + " " + str(r1) +
              " " + str(rl));
  std::ostringstream got, want;
  got << r.row_weight(0) << "/" << r.row_weight(1) << "/" << r.row_weight(n - 1);
  want << weights[0] << "/" << weights[1] << "/" << weights[2];
  c.check(got.str() == want.str(), name + " row weights", "computed " + got.str() + ", expected " + want.str());
  // The expected weights are those of the expected vectors.
  c.check(nonzero(sq) == weights[0] && nonzero(r1) == weights[1] && nonzero(rl) == weights[2],
          name + " expected weights consistent with expected vectors");
}

void criterion5(Checker& c) {
  rows_match(c, "example 1", testing::example1(), {9, 6, 3, 11, 1, 5, 10}, {9, 11, 6, 4, 12, 6, 10},
             {10, 6, 4, 12, 6, 10, 10}, {7, 7, 7});
  rows_match(c, "example 2", testing::example2(), {4, 2, 6, 0, 2, 0}, {3, 6, 4, 0, 2, 1}, {5, 0, 4, 0, 2, 0},
             {4, 5, 3});
  rows_match(c, "example 3", testing::example3(), {4, 6, 0, 1, 2, 0}, {6, 0, 2, 1, 5, 0}, {6, 2, 1, 5, 0, 0},
             {4, 4, 4});
}

void criterion6(Checker& c) {
  std::mt19937_64 rng(6);
  for (const EnbParams* p : every_params()) {
    const SpecialVectors sv = special_vectors(*p);
    int product = 0, roundtrip = 0, frob = 0;
    const int pairs = 100;
    for (int i = 0; i < pairs; ++i) {
      const CyclicVector x = testing::random_vector(p->fq, p->n, rng);
      const CyclicVector y = testing::random_vector(p->fq, p->n, rng);
      const Element fx = uncoords(x, *p), fy = uncoords(y, *p);
      product += uncoords(tensor_multiply(x, y, sv, p->scalar_a), *p) == fx * fy;
      const Element z = testing::random_element(p->fqn, rng);
      roundtrip += uncoords(coords(z, *p), *p) == z && coords(fx, *p) == x;
      frob += coords(z.frobenius(), *p) == shift(coords(z, *p), 1);
    }
    c.check(product == pairs && roundtrip == pairs && frob == pairs, label(*p),
            std::to_string(product) + "/" + std::to_string(roundtrip) + "/" + std::to_string(frob) + " of " +
                std::to_string(pairs));
  }
}

void criterion7(Checker& c) {
  const auto& sets = searched();
  c.check(sets.size() >= 20, "at least 20 parameter sets", std::to_string(sets.size()) + " found");
  std::cout << "  (" << sets.size() << " parameter sets)\n";
  for (const EnbParams& p : sets) {
    const ComplexityReport r = exact_complexity(p);
    const std::size_t n = p.n;
    const std::size_t wr = weight(r.special.R);
    const std::size_t zeros = n - wr;
    bool prop6 = weight(r.special.Rx) + 2 >= n && wr + 2 >= n;
    if (!p.scalar_b.is_zero()) prop6 = prop6 && wr + 1 >= n;
    bool overleft = true;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t w = weight(overleft_rk(r.special.R, static_cast<std::int64_t>(k)));
      if (zeros == 1) prop6 = prop6 && w + 2 >= n;
      if (zeros == 2) prop6 = prop6 && w + 4 >= n;
      overleft = overleft && w <= wr;
    }
    const bool movw_lower = r.exact >= 2 * n - 1;
    const bool movw_upper = r.exact <= n * n - n + 1;
    const bool sandwich = r.lower <= r.exact && r.exact <= r.upper;
    std::ostringstream os;
    os << "prop6=" << prop6 << " movw_lower=" << movw_lower << " movw_upper=" << movw_upper << " sandwich=" << sandwich << " overleft=" << overleft
       << " (lower " << r.lower << ", exact " << r.exact << ", upper " << r.upper << ")";
    c.check(prop6 && movw_lower && movw_upper && sandwich && overleft, label(p), os.str());
  }
}

// Valuation by repeated division.
int val(std::uint64_t l, std::uint64_t x) {
  int v = 0;
  while (x % l == 0) {
    x /= l;
    ++v;
  }
  return v;
}

void criterion8(Checker& c) {
  const std::vector<std::array<std::uint64_t, 3>> cases{{13, 7, 7}, {7, 6, 216}, {8, 3, 3}};
  for (const auto& [q, n, want] : cases) {
    const std::uint64_t got = nq(q, n);
    c.eq(got, want, "nq(" + std::to_string(q) + "," + std::to_string(n) + ")");
    bool ok = true;
    std::uint64_t rebuilt = 1;
    for (std::uint64_t l = 2; l <= std::max(n, q); ++l) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= l; ++d) prime = prime && l % d != 0;
      if (!prime) continue;
      int expect;
      if ((q - 1) % l != 0) {
        expect = val(l, n);
      } else if (n % l != 0) {
        expect = 0;
      } else {
        expect = std::max(2 * val(l, q - 1) + 1, 2 * val(l, n));
      }
      ok = ok && val(l, got) == expect;
      for (int i = 0; i < expect; ++i) rebuilt *= l;
    }
    c.check(ok && rebuilt == got,
            "valuations of nq(" + std::to_string(q) + "," + std::to_string(n) + ") per case",
            "rebuilt " + std::to_string(rebuilt));
  }
}

void criterion9(Checker& c) {
  for (const EnbParams* pp : every_params()) {
    const EnbParams& p = *pp;
    const Curve ext = p.curve.base_change(p.fqn);
    const auto n = static_cast<std::int64_t>(p.n);
    std::vector<std::string> bad;
    if (p.curve.point_order(p.t) != p.n) bad.push_back("order(t) != n");
    if (p.curve.mul(n, p.R).is_infinity()) bad.push_back("nR = O");
    const Point phi_b(p.b.x().frobenius(), p.b.y().frobenius());
    if (phi_b != ext.add(p.b, ext.embed(p.t, p.fqn))) bad.push_back("phi(b) != b + t");
    if (ext.mul(n, p.b).is_infinity()) bad.push_back("nb = O");
    if (!(p.scalar_a * p.c + p.fq->from_int(n) * p.scalar_b).is_one()) bad.push_back("Ac + nB != 1");
    Matrix m;
    for (const auto& alpha : p.basis) m.push_back(p.fqn->to_base(alpha));
    if (p.basis.size() != p.n || rank(m) != p.n) bad.push_back("basis dependent");
    for (const auto& s : check_structure(p)) bad.push_back(s);
    std::string detail;
    for (const auto& s : bad) detail += (detail.empty() ? "" : "; ") + s;
    c.check(bad.empty(), label(p), detail);
  }
}

const std::vector<std::function<void(Checker&)>>& criteria() {
  static const std::vector<std::function<void(Checker&)>> all{criterion1, criterion2, criterion3,
                                                              criterion4, criterion5, criterion6,
                                                              criterion7, criterion8, criterion9};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::cerr << "usage: acceptance [1-" << criteria().size() << "]\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 1; k <= criteria().size(); ++k) selected.push_back(k);
  }
  int failed = 0;
  for (std::size_t k : selected) {
    std::cout << "criterion " << k << "\n";
    Checker c;
    try {
      criteria()[k - 1](c);
    } catch (const std::exception& e) {
      c.check(false, "unexpected error", e.what());
    }
    const bool ok = c.failures() == 0;
    std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "\n";
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
