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

#include "ellnb/kernels.hpp"

#include <cassert>

namespace ellnb::kernels::scalar {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t p) {
  assert(a.size() == b.size());
  // Each product is below 2^62, so a 128-bit accumulator never overflows.
  u128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
  }
  return static_cast<std::uint32_t>(acc % p);
}

std::size_t count_nonzero(std::span<const std::uint32_t> a) {
  std::size_t count = 0;
  for (std::uint32_t v : a) count += (v != 0);
  return count;
}

}  // namespace ellnb::kernels::scalar
