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

/// A finite Galois extension L/K with an explicit automorphism group.
///
/// L is a Field of kind extension over K; every group element is the
/// K-matrix of an automorphism in the K-basis of L (column j = image of the
/// j-th basis vector). The identity comes first and the order is fixed.
class GaloisExtension {
public:
    /// Validates the group: automorphisms fixing K, closed, |G| = [L:K], and
    /// fixed field exactly K.
    GaloisExtension(FieldPtr L, std::vector<Matrix> group);

    /// GF(p^n)/GF(p) with group {1, Frob, Frob^2, ...}.
    static GaloisExtension finite(std::uint64_t p, unsigned n);
    /// Q(sqrt d)/Q with basis {1, sqrt d}; d must not be a rational square.
    static GaloisExtension quadratic(long d);

    const FieldPtr& base() const noexcept { return K_; }
    const FieldPtr& field() const noexcept { return L_; }
    std::size_t degree() const noexcept { return n_; }
    std::size_t order() const noexcept { return group_.size(); }
    const std::vector<Matrix>& group() const noexcept { return group_; }
    const Matrix& matrix(std::size_t sigma) const;

    Elem apply(std::size_t sigma, const Elem& x) const;
    std::size_t compose(std::size_t sigma, std::size_t tau) const;  // sigma∘tau
    std::size_t inverse(std::size_t sigma) const;
    std::size_t identity() const noexcept { return 0; }
    /// The index of x -> x^|K| when K is finite; throws otherwise.
    std::size_t frobenius() const;

    /// K-coordinates of an element of L, and the inverse map.
    Vector coords(const Elem& x) const { return L_->coordinates(x); }
    Elem element(const Vector& c) const { return L_->from_coordinates(c); }
    /// K-matrix of multiplication by the a-th basis element of L.
    const Matrix& basis_multiplication(std::size_t a) const { return mult_by_basis_.at(a); }
    /// K-matrix of multiplication by x.
    Matrix multiplication(const Elem& x) const;

    /// Basis (K-coordinates, as columns) of the fixed field of a subgroup.
    Matrix fixed_field(const std::vector<std::size_t>& subgroup) const;

    bool same_as(const GaloisExtension& other) const;
    std::string describe() const;

private:
    FieldPtr K_;
    FieldPtr L_;
    std::size_t n_ = 0;
    std::vector<Matrix> group_;
    std::vector<std::size_t> compose_table_;
    std::vector<std::size_t> inverse_table_;
    std::vector<Matrix> mult_by_basis_;
};

} // namespace moritakit
