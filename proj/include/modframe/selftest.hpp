// Copyright 2026 The modframe Authors
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

#include <cstdint>
#include <string>
#include <vector>

namespace modframe {

struct SelfTestCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Seeded randomized checks of the library's core identities at reduced sample
/// counts: reconstruction, bound formulas, dual parametrization, Parseval
/// extension, the non-unital verdict equivalence and the eigensolver.
std::vector<SelfTestCheck> run_selftest(std::uint64_t seed);

}  // namespace modframe
