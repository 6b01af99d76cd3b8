// Copyright 2026 The graphmin Authors
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

#ifndef GRAPHMIN_SRC_VARIANTS_HPP_
#define GRAPHMIN_SRC_VARIANTS_HPP_

#include "graphmin/de_operators.hpp"

namespace graphmin::detail {

// Runs ctx.config().algorithm until the budget is spent.
void run_variant(RunContext& ctx);

}  // namespace graphmin::detail

#endif  // GRAPHMIN_SRC_VARIANTS_HPP_
