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
#include <string>
#include <vector>

#include "moritakit/field.hpp"
#include "moritakit/linalg.hpp"

namespace moritakit {

/// A finite-dimensional associative unital algebra over a field, given by
/// structure constants: basis_i * basis_j = sum_k mult[(i*d+j)*d+k] basis_k.
struct Algebra {
    FieldPtr field;
    std::size_t dim = 0;
    Vector mult;
    Vector unit;

    const Elem& constant(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector basis(std::size_t i) const { return moritakit::unit_vector(*field, dim, i); }
    /// Matrix of x -> a*x, and of x -> x*a.
    Matrix left_multiplication(const Vector& a) const;
    Matrix right_multiplication(const Vector& a) const;

    /// Violated axioms; empty iff associative and unital with a well-formed table.
    std::vector<std::string> validate() const;
    void require_valid() const;
    bool is_commutative() const;

    /// The ground field as a 1-dimensional algebra.
    static Algebra ground(FieldPtr f);
    /// M_n(K) with matrix units e_ij at index i*n+j.
    static Algebra matrix(FieldPtr f, std::size_t n);
    /// The quaternion algebra (a,b) with basis {1,i,j,k}, i^2=a, j^2=b, ij=k=-ji.
    static Algebra quaternion(FieldPtr f, const Elem& a, const Elem& b);
    /// K x K x ... (n factors) with idempotent basis.
    static Algebra split(FieldPtr f, std::size_t n);
    /// K[x]/(f) for a monic f given low-to-high; basis {1, x, ..., x^(deg-1)}.
    static Algebra polynomial_quotient(FieldPtr f, const Vector& monic);
    /// A field extension L viewed as an algebra over its base.
    static Algebra field_over_base(const FieldPtr& L);

    Algebra opposite() const;
};

/// A ⊗ B with basis a*dim(B)+b.
Algebra tensor(const Algebra& a, const Algebra& b);
/// A x B with basis A-block then B-block.
Algebra direct_product(const Algebra& a, const Algebra& b);

/// True iff the K-linear map `phi` (columns = images of basis vectors) is
/// unital and multiplicative from `a` to `b`.
bool is_algebra_homomorphism(const Algebra& a, const Algebra& b, const Matrix& phi);

} // namespace moritakit
