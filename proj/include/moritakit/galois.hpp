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
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "moritakit/algebra.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/galois_extension.hpp"
#include "moritakit/lincat.hpp"

namespace moritakit {

using ExtensionPtr = std::shared_ptr<const GaloisExtension>;

/// An L-vector space stored on its K-underlying space. The standard module
/// L^m uses index i*n + a for the a-th K-basis element of L in slot i;
/// scalars[a] is the K-matrix of v -> b_a·v.
struct LModule {
    ExtensionPtr ext;
    std::size_t dim = 0;  // over L
    std::vector<Matrix> scalars;

    std::size_t k_dim() const { return dim * ext->degree(); }
    const Field& base() const { return *ext->base(); }
    Matrix scalar(const Elem& x) const;
    std::vector<std::string> validate() const;

    static LModule standard(const ExtensionPtr& ext, std::size_t dim);
};

/// K-matrix of an L-matrix acting on standard modules (cols -> rows).
Matrix l_matrix(const GaloisExtension& e, std::size_t rows, std::size_t cols, const std::vector<Elem>& entries);

/// ^σV: x·v := σ⁻¹(x)v.
LModule twist(const LModule& v, std::size_t sigma);
LModule direct_sum(const LModule& v, const LModule& w);

/// V ⊗_L W as the quotient of V ⊗_K W (index i*k_dim(W)+j) by x·v⊗w - v⊗x·w.
struct LTensor {
    LModule module;
    Quotient quotient;
};
LTensor tensor_l(const LModule& v, const LModule& w);

/// An L-module with a skew-linear action: action[σ](x·w) = σ(x)·action[σ](w).
struct GaloisModule {
    LModule carrier;
    std::vector<Matrix> action;

    std::vector<std::string> validate() const;

    /// σ coordinatewise on L^m.
    static GaloisModule natural(const ExtensionPtr& ext, std::size_t dim);
    /// w -> P⁻¹σ(Pw) for a random invertible L-matrix P.
    static GaloisModule random(const ExtensionPtr& ext, std::size_t dim, std::mt19937_64& rng);
};

/// K-basis of W^G as columns.
Matrix fixed_points(const GaloisModule& w);
/// L ⊗_K W^G -> W, ℓ_a ⊗ w_c -> ℓ_a·w_c, column a*dim(W^G)+c.
Matrix counit(const GaloisModule& w, const Matrix& fixed);
/// action(σ)∘counit = counit∘(σ ⊗ 1) for every σ.
bool counit_is_equivariant(const GaloisModule& w, const Matrix& fixed, const Matrix& eps);

/// ⊗_σ-slot transport. A tensor over s slots of width d has index
/// Σ i_σ·d^(s-1-σ) (first group element most significant).
Vector transport_linear(const Field& k, std::size_t slots, const Vector& x, std::size_t d_in, const Matrix& phi);
/// phi : K^{d1·d2} -> K^{d3}, column i*d2+j, applied in every slot to x ⊗ y.
Vector transport_bilinear(const Field& k, std::size_t slots, const Vector& x, std::size_t d1, const Vector& y,
                          std::size_t d2, const Matrix& phi);

/// Cor(V) = (⊗_{σ∈G} ^σV)^G with τ(⊗v_σ) = ⊗v_{τ⁻¹σ}.
struct CorModule {
    LModule module;
    std::size_t slots = 0;
    Quotient quotient;                // of the K-tensor power, width module.k_dim()
    std::vector<Matrix> action;       // on quotient coordinates
    std::vector<Matrix> l_action;     // b_a acting on quotient coordinates
    Subspace fixed;                   // Cor(V) inside quotient coordinates

    std::size_t dim() const { return fixed.dim(); }
    std::size_t width() const { return module.k_dim(); }
    /// A representative in the K-tensor power.
    Vector ambient(const Vector& coords) const;
    /// Cor coordinates of a G-fixed class; throws invalid_input otherwise.
    Vector coordinates(const Vector& ambient) const;
};

CorModule cor_module(const LModule& v);

/// Cor(V) ⊗_K Cor(W) -> Cor(V ⊗_L W), column c*dim Cor(W) + d.
struct CorMonoidal {
    CorModule v, w, vw;
    LTensor tensor;
    Matrix map;
    bool bijective = false;
};
CorMonoidal cor_monoidal(const LModule& v, const LModule& w);

/// Cor(V^{⊕m}) -> Cor(V)^{⊕ m^|G|}. Functions f : G -> {0..m-1} are ordered
/// lexicographically; each G-orbit of functions with least element g and
/// stabilizer H contributes summands y_k = Σ_j ρ_j(b_k)·x^{ρ_j·g}, where ρ_j
/// runs over coset representatives in group order and b_k over a K-basis of L^H.
struct CorDimensionIso {
    CorModule source;
    CorModule summand;
    std::size_t copies = 0;
    Matrix map;
    bool bijective = false;
};
CorDimensionIso cor_dimension_iso(const LModule& v, std::size_t m);

/// S over L, given as an Algebra over ext->field(), viewed as a K-algebra.
Algebra restrict_scalars(const Algebra& s, const GaloisExtension& e);
Algebra cor_algebra(const Algebra& s, const ExtensionPtr& ext);
/// Actions transported slotwise; certified projective over Cor(S).
Bimodule cor_bimodule(const Bimodule& m, const ExtensionPtr& ext);
CategoryPtr cor_category(const KCategory& a, const ExtensionPtr& ext);

/// Cor(M) ⊗_{Cor S} Cor(N) -> Cor(M ⊗_S N), induced by the slotwise map.
struct TensorCompatibility {
    Bimodule lhs;  // Cor(M) ⊗_{Cor S} Cor(N)
    Bimodule rhs;  // Cor(M ⊗_S N)
    Matrix map;
    bool well_defined = false;
    bool bijective = false;
    bool bimodule_hom = false;
    bool holds() const { return well_defined && bijective && bimodule_hom; }
};
TensorCompatibility cor_tensor_compatibility(const Bimodule& m, const Bimodule& n, const ExtensionPtr& ext);

} // namespace moritakit
