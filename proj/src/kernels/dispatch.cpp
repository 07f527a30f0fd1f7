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

#include <cassert>
#include <cstdlib>
#include <vector>

#include "ellnb/kernels.hpp"

namespace ellnb::kernels {

namespace {

constexpr KernelTable kScalarTable{&scalar::dot_mod, &scalar::count_nonzero};
#if defined(ELLNB_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{&avx2::dot_mod, &avx2::count_nonzero};
#endif

Backend detect_backend() {
  const char* force = std::getenv("ELLNB_FORCE_SCALAR");
  if (force != nullptr && *force != '\0') return Backend::kScalar;
  return avx2_available() ? Backend::kAvx2 : Backend::kScalar;
}

const KernelTable& active_table() {
  static const KernelTable& table = table_for(active_backend());
  return table;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(ELLNB_HAVE_AVX2_KERNELS)
  static const bool available = __builtin_cpu_supports("avx2");
  return available;
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend backend = detect_backend();
  return backend;
}

const KernelTable& table_for(Backend backend) {
#if defined(ELLNB_HAVE_AVX2_KERNELS)
  if (backend == Backend::kAvx2 && avx2_available()) return kAvx2Table;
#else
  (void)backend;
#endif
  return kScalarTable;
}

void poly_mul_mod(const KernelTable& table, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p) {
  assert(!a.empty() && !b.empty());
  assert(out.size() == a.size() + b.size() - 1);
  // out[k] = sum_i a[i] * b[k - i]; reversing b turns every output into a
  // contiguous dot product.
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::uint32_t> rb(nb);
  for (std::size_t j = 0; j < nb; ++j) rb[j] = b[nb - 1 - j];
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t lo = k + 1 >= nb ? k + 1 - nb : 0;  // first i
    const std::size_t hi = k < na - 1 ? k : na - 1;       // last i
    // b[k - i] for i in [lo, hi] is rb[nb - 1 - k + i].
    out[k] = table.dot_mod(a.subspan(lo, hi - lo + 1),
                           std::span<const std::uint32_t>(rb).subspan(nb - 1 - k + lo, hi - lo + 1),
                           p);
  }
}

void cyclic_convolve_mod(const KernelTable& table,
                         std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b,
                         std::span<std::uint32_t> out, std::uint32_t p) {
  const std::size_t n = a.size();
  assert(b.size() == n && out.size() == n);
  // doubled[j] = b[(n - j) mod n], so b[(m - i) mod n] = doubled[n - m + i].
  std::vector<std::uint32_t> doubled(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) doubled[j] = b[(2 * n - j) % n];
  const std::span<const std::uint32_t> view(doubled);
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = table.dot_mod(a, view.subspan(n - m, n), p);
  }
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t p) {
  return active_table().dot_mod(a, b, p);
}

std::size_t count_nonzero(std::span<const std::uint32_t> a) {
  return active_table().count_nonzero(a);
}

void poly_mul_mod(std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p) {
  poly_mul_mod(active_table(), a, b, out, p);
}

void cyclic_convolve_mod(std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b,
                         std::span<std::uint32_t> out, std::uint32_t p) {
  cyclic_convolve_mod(active_table(), a, b, out, p);
}

}  // namespace ellnb::kernels
