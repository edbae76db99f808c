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
#include <optional>
#include <string>
#include <vector>

#include "moritakit/algebra.hpp"
#include "moritakit/envelopes.hpp"
#include "moritakit/lincat.hpp"

namespace moritakit {

/// A finite-dimensional R–S bimodule. left_action[i] is the matrix of
/// m -> r_i·m and right_action[j] the matrix of m -> m·s_j, for the basis
/// elements r_i of R and s_j of S.
struct Bimodule {
    Algebra left;
    Algebra right;
    std::size_t dim = 0;
    std::vector<Matrix> left_action;
    std::vector<Matrix> right_action;

    const Field& field() const { return *left.field; }
    Matrix act_left(const Vector& r) const;
    Matrix act_right(const Vector& s) const;

    /// Violated axioms; empty iff the actions are unital, associative and commute.
    std::vector<std::string> validate() const;
    void require_valid() const;

    /// S as an S–S bimodule.
    static Bimodule regular(const Algebra& s);
    /// S^n with diagonal actions, an S–S bimodule.
    static Bimodule free(const Algebra& s, std::size_t n);
    /// e·S as a K–S bimodule.
    static Bimodule row_ideal(const Algebra& s, const Vector& e);
    /// S·e as an S–K bimodule.
    static Bimodule column_ideal(const Algebra& s, const Vector& e);
    /// S as an R–S bimodule through an algebra map phi : R -> S.
    static Bimodule from_homomorphism(const Algebra& r, const Algebra& s, const Matrix& phi);
};

bool same_algebra(const Algebra& a, const Algebra& b);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

/// M ⊗_S N as the cokernel of μ_M ⊗ 1 - 1 ⊗ μ_N on M ⊗_K N (index i*dim N + j).
struct TensorOver {
    Bimodule module;
    Quotient quotient;
};
TensorOver tensor_over(const Bimodule& m, const Bimodule& n);

/// f : a -> b (dim b x dim a) commutes with both actions.
bool is_bimodule_hom(const Bimodule& a, const Bimodule& b, const Matrix& f);
/// Basis of Hom(a,b) as columns of row-major vec(f).
Matrix bimodule_hom_space(const Bimodule& a, const Bimodule& b);

struct BimoduleIso {
    Verdict verdict = Verdict::no;
    std::optional<Matrix> map;
    std::size_t space_dim = 0;
};
BimoduleIso bimodule_iso(const Bimodule& a, const Bimodule& b, const SearchOptions& opts = {});

/// M ≅ e·S^n together with the functor R -> SatView(S), * -> (*^n, e).
struct ProjectiveFunctor {
    ViewFunctor functor;
    std::vector<Vector> generators;
    Matrix section;     // M -> S^n, right S-linear
    Matrix surjection;  // S^n -> M
    Vector idempotent;  // ambient, block (j,k) = σ(m_k)_j
};

/// Unless given, a single generator is tried first, then basis vectors are
/// added greedily. Throws
/// NotFinitelyGenerated when the given set does not generate M_S, and
/// NotProjective when the surjection S^n -> M has no S-linear section.
ProjectiveFunctor bimodule_to_functor(const Bimodule& m, const std::optional<std::vector<Vector>>& generators = std::nullopt);
/// M = Hom((*,1), G*) with R acting through G and S by precomposition.
Bimodule functor_to_bimodule(const ViewFunctor& g);

} // namespace moritakit
