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

#include "ellnb/report_table.hpp"

#include <iomanip>
#include <sstream>

namespace ellnb {

namespace {

void line(std::ostringstream& os, const std::string& label, const CyclicVector& v) {
  os << std::left << std::setw(16) << label << std::setw(40) << v.to_string() << weight(v) << "\n";
}

}  // namespace

std::string render_table(const ComplexityReport& r, const EnbParams& p) {
  std::ostringstream os;
  os << "q = " << p.q << ", n = " << p.n << ", E: " << p.curve.to_string() << "\n";
  os << "t = " << p.t.to_string() << ", R = " << p.R.to_string() << ", a = " << p.a.to_string()
     << ", c = " << p.c.to_string() << ", A = " << p.scalar_a.to_string()
     << ", B = " << p.scalar_b.to_string() << "\n\n";
  os << std::left << std::setw(16) << "vector" << std::setw(40) << "entries" << "weight\n";
  line(os, "R", r.special.R);
  line(os, "Rx", r.special.Rx);
  line(os, "Rinv", r.special.Rinv);
  if (r.special.iota.size()) line(os, "iota", r.special.iota);
  for (const auto& m : r.middle) line(os, "Rinv*R_" + std::to_string(m.k), m.vec);
  os << "\nmiddle sum " << r.middle_sum << "\n";
  os << "bounds " << r.lower << " <= C <= " << r.upper << "\n";
  if (r.has_exact) {
    os << "\n";
    line(os, "a0*a0", r.rows[0]);
    line(os, "a0*a1", r.rows[1]);
    line(os, "a0*a" + std::to_string(p.n - 1), r.rows[p.n - 1]);
    os << "\nexact complexity " << r.exact << "\n";
  }
  os << "\nM\n";
  for (std::size_t k = 0; k < r.M.size(); ++k) line(os, "R_" + std::to_string(k + 1), r.M[k]);
  return os.str();
}

std::string render_params_table(const EnbParams& p) {
  std::ostringstream os;
  os << "q          " << p.q << "\n";
  os << "n          " << p.n << "\n";
  os << "E          " << p.curve.to_string() << "\n";
  os << "#E         " << p.group_order << "\n";
  os << "t          " << p.t.to_string() << "\n";
  os << "E'         " << p.iso.codomain.to_string() << "\n";
  os << "a          " << p.a.to_string() << "\n";
  os << "modulus    " << p.modulus.to_string() << "\n";
  os << "b          " << p.b.to_string() << "\n";
  os << "c, A, B    " << p.c.to_string() << ", " << p.scalar_a.to_string() << ", "
     << p.scalar_b.to_string() << "\n";
  os << "R          " << p.R.to_string() << "\n";
  for (std::size_t k = 0; k < p.basis.size(); ++k) {
    os << "alpha_" << k << std::string(k < 10 ? 4 : 3, ' ') << p.basis[k].to_string() << "\n";
  }
  os << "n_q        " << p.nq << (p.nq_within_sqrt_q ? " (<= sqrt q)" : " (> sqrt q, advisory)") << "\n";
  return os.str();
}

}  // namespace ellnb
