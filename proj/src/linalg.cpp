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

#include "ellnb/linalg.hpp"

#include "ellnb/errors.hpp"

namespace ellnb {

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Element inv = m[r][c].inv();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Element f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Matrix{};
  const FieldPtr& f = m[0][0].field();
  Matrix a = m;
  Matrix inv(n, std::vector<Element>(n, f->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail(ErrorKind::kLengthMismatch, "matrix is not square");
    inv[i][i] = f->one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Element s = a[c][c].inv();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Element g = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

std::vector<Element> vec_mat(const std::vector<Element>& v, const Matrix& m) {
  if (v.size() != m.size()) fail(ErrorKind::kLengthMismatch, "vector/matrix size mismatch");
  if (m.empty()) return {};
  std::vector<Element> out(m[0].size(), v[0].field()->zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

}  // namespace ellnb
