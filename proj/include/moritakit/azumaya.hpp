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
#include <cstdint>
#include <optional>
#include <string>

#include "moritakit/algebra.hpp"
#include "moritakit/lincat.hpp"
#include "moritakit/morita.hpp"

namespace moritakit {

/// The map A ⊗ A^op -> End_K(A), a⊗b -> (x -> a·x·b). Column a*d+b, row i*d+j
/// holds the coefficient of e_i in e_a·e_j·e_b, so rows follow the matrix-unit
/// basis of Algebra::matrix(K, d).
Matrix sandwich_map(const Algebra& a);

struct AzumayaCertificate {
    bool azumaya = false;
    std::size_t rank = 0;
    std::size_t expected = 0;  // dim²
};

AzumayaCertificate azumaya_certificate(const Algebra& a);
bool is_azumaya(const Algebra& a);

/// A certified Azumaya algebra.
class BrauerElement {
public:
    /// Throws NotAzumaya.
    explicit BrauerElement(Algebra representative);
    const Algebra& representative() const noexcept { return rep_; }
    const AzumayaCertificate& certificate() const noexcept { return cert_; }

private:
    Algebra rep_;
    AzumayaCertificate cert_;
};

/// A ⊗ B and A^op, both re-certified; throws NotAzumaya.
Algebra brauer_mul(const Algebra& a, const Algebra& b);
Algebra brauer_inv(const Algebra& a);

struct TrivializeOptions {
    std::uint64_t budget = 1u << 16;
    std::uint64_t seed = 42;
    /// A known algebra isomorphism A -> M_n(K) (matrix-unit basis); e_11 is pulled back.
    std::optional<Matrix> known_iso;
};

/// e with e² = e, dim eAe = 1 and AeA = A. `stage` names the search step that
/// produced it; on Unknown, `examined` counts candidates and `box_exhausted`
/// records that the whole enumeration region was covered without a hit.
struct Trivialization {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Vector> idempotent;
    std::string stage;
    std::uint64_t examined = 0;
    bool box_exhausted = false;
    std::string region;
    std::vector<TraceTerm> trace;
};

Trivialization morita_trivialize(const Algebra& a, const TrivializeOptions& opts = {});
/// Checks a trivialization witness without searching.
bool verify_trivialization(const Algebra& a, const Vector& e);

/// [A] = [B] when A ⊗ B^op trivializes. Never answers `no`.
Trivialization same_brauer_class(const Algebra& a, const Algebra& b, const TrivializeOptions& opts = {});

/// K -> SatView(A), * -> (•, e).
HoMap corner_homap(const Algebra& a, const Vector& e);

} // namespace moritakit
