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

// Runs every acceptance criterion and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "moritakit/acceptance/criteria.hpp"

int main(int argc, char** argv) {
    const std::string suite = argc > 1 ? argv[1] : "all";
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
    if (!moritakit::acceptance::known_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
    }
    bool ok = true;
    for (const auto& r : moritakit::acceptance::run_suite(suite, seed)) {
        std::cout << moritakit::acceptance::format_result(r, true) << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
    return ok ? 0 : 1;
}
