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
#include <vector>

#include "moritakit/envelopes.hpp"
#include "moritakit/lincat.hpp"

namespace moritakit::acceptance {

/// Brute force over a finite field: every base object y is a retract of a
/// direct sum of at most `max_word` images, found by enumerating all pairs
/// (i,p) of block morphisms with p∘i = 1_y. Images are single-letter.
bool retract_oracle(const KCategory& b, const std::vector<SatObject>& images, std::size_t max_word);
bool is_retract_of_sum(const KCategory& b, const std::vector<SatObject>& images, std::size_t y, std::size_t max_word);

/// Rank of a ⊗ b -> (x -> a·x·b) assembled from products of basis elements.
std::size_t sandwich_rank_oracle(const Algebra& a);

/// m^k, the number of functions from a k-set to an m-set.
std::size_t power(std::size_t m, std::size_t k);

} // namespace moritakit::acceptance
