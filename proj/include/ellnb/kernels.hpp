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

// Word-level arithmetic kernels over F_p.
//
// Every kernel has a portable scalar reference implementation in
// `ellnb::kernels::scalar`. When the library is built with AVX2 support the
// same entry points exist in `ellnb::kernels::avx2`, and the unqualified
// functions in `ellnb::kernels` dispatch to the fastest variant the running
// CPU supports. All variants return bit-identical results; the test suite
// checks this on random inputs.
//
// Inputs are canonical residues in [0, p) with p < 2^31.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ellnb::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend backend);

// Backend chosen for this process. The choice is made once, on first use:
// AVX2 when compiled in and reported by cpuid, unless the environment
// variable ELLNB_FORCE_SCALAR is set to a non-empty value.
Backend active_backend();

// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

// sum_i a[i] * b[i] mod p. Requires a.size() == b.size().
std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t p);

// Full (acyclic) product of two coefficient sequences, lowest degree first.
// out.size() must be a.size() + b.size() - 1 (both inputs non-empty).
void poly_mul_mod(std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p);

// out[m] = sum_{i + j = m (mod n)} a[i] * b[j] mod p, with n = a.size().
void cyclic_convolve_mod(std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b,
                         std::span<std::uint32_t> out, std::uint32_t p);

// Number of nonzero entries.
std::size_t count_nonzero(std::span<const std::uint32_t> a);

namespace scalar {
std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t p);
std::size_t count_nonzero(std::span<const std::uint32_t> a);
}  // namespace scalar

#if defined(ELLNB_HAVE_AVX2_KERNELS)
namespace avx2 {
// Falls back to the scalar reference when p >= 2^16 (the vector path keeps
// 32-bit lane products exact only below that bound).
std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t p);
std::size_t count_nonzero(std::span<const std::uint32_t> a);
}  // namespace avx2
#endif

// Composite kernels parameterized by the primitive variant; used by the
// dispatcher and by the equivalence tests.
struct KernelTable {
  std::uint32_t (*dot_mod)(std::span<const std::uint32_t>,
                           std::span<const std::uint32_t>, std::uint32_t);
  std::size_t (*count_nonzero)(std::span<const std::uint32_t>);
};

const KernelTable& table_for(Backend backend);

void poly_mul_mod(const KernelTable& table, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p);
void cyclic_convolve_mod(const KernelTable& table,
                         std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b,
                         std::span<std::uint32_t> out, std::uint32_t p);

}  // namespace ellnb::kernels
