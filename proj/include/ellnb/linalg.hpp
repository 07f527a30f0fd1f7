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

// Dense linear algebra over a finite field, Gaussian elimination.

#include <optional>
#include <vector>

#include "ellnb/field.hpp"

namespace ellnb {

using Matrix = std::vector<std::vector<Element>>;

std::size_t rank(Matrix m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// Row vector times matrix: out[j] = sum_i v[i] m[i][j].
std::vector<Element> vec_mat(const std::vector<Element>& v, const Matrix& m);

}  // namespace ellnb
