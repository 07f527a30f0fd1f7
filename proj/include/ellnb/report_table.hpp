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

#include <string>

#include "ellnb/enb.hpp"
#include "ellnb/tensor.hpp"

namespace ellnb {

// Plain-text rendering laid out like the usual special-vector tables:
// one line per vector with its weight, then bounds and rows.
std::string render_table(const ComplexityReport& report, const EnbParams& params);

std::string render_params_table(const EnbParams& params);

}  // namespace ellnb
