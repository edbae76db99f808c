/**************************************************************************
 * Copyright 2026 The moritakit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moritakit::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit = 0;
};

/// core: 1-5, morita: 12-13, brauer: 6, 7, 11, galois: 8-10, all: 1-13.
bool known_suite(const std::string& suite);
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int id, std::uint64_t seed);
/// Criteria run in parallel; results come back in criterion order.
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed);

/// One line per criterion; timings only when `with_times`.
std::string format_result(const CriterionResult& r, bool with_times);

} // namespace moritakit::acceptance
