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
#include <random>
#include <vector>

#include "moritakit/algebra.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/envelopes.hpp"
#include "moritakit/lincat.hpp"

namespace moritakit::acceptance {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t n);
Elem random_scalar(const Field& k, Rng& rng);
Vector random_vector(const Field& k, std::size_t n, Rng& rng);
/// Uniform over GL_n for finite fields; entries in {-2..2} over Q.
Matrix random_invertible(const Field& k, std::size_t n, Rng& rng);

/// The same category in new hom bases: column a of p[x*n+y] is the new
/// basis element a of Hom(x,y) in old coordinates.
CategoryPtr rebase(const KCategory& c, const std::vector<Matrix>& p);
/// rebase with uniformly random bases; `change` receives the matrices.
CategoryPtr random_rebase(const KCategory& c, Rng& rng, std::vector<Matrix>* change = nullptr);
/// F followed by the identification of the target with its rebased copy.
KFunctor retarget(const KFunctor& f, const CategoryPtr& rebased, const std::vector<Matrix>& change);

/// Nonzero idempotents of End(x), enumerated when q^dim ≤ 4096.
std::vector<Vector> idempotents(const KCategory& c, std::size_t x);

/// A valid category with 1..max_objects objects and every hom of dimension
/// ≤ max_hom_dim: a full subcategory of the saturation of a seed category,
/// in random hom bases. Finite fields only.
CategoryPtr random_category(const FieldPtr& k, std::size_t max_objects, std::size_t max_hom_dim, Rng& rng);

/// Single-letter objects (x,e) of SatView(c) with nonzero idempotents e.
std::vector<SatObject> random_images(const KCategory& c, Rng& rng, std::size_t max_images);

/// A valid functor into a random category: full, object-collapsing or
/// discrete inclusions, with random source bases.
KFunctor random_functor(const FieldPtr& k, std::size_t max_objects, std::size_t max_hom_dim, Rng& rng);

/// Functors that are Morita equivalences by construction: identities, corner
/// embeddings into karoubi envelopes, inclusions into materialized
/// saturations and mapping-cylinder collapses.
KFunctor random_morita_equivalence(const FieldPtr& k, Rng& rng);

/// A rank-one idempotent P e_11 P⁻¹ of M_n.
Vector random_rank_one_idempotent(const FieldPtr& k, std::size_t n, Rng& rng);
/// The same bimodule in a random basis.
Bimodule random_conjugate(const Bimodule& m, Rng& rng);
/// A finitely generated projective bimodule over small algebras on k.
Bimodule random_projective_bimodule(const FieldPtr& k, Rng& rng);

} // namespace moritakit::acceptance
