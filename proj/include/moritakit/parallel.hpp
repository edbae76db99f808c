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

#include <cstddef>
#include <functional>

namespace moritakit {

/// Worker count: MORITAKIT_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Callers write
/// results by index, so the outcome does not depend on scheduling. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace moritakit
