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
#include <optional>
#include <utility>
#include <vector>

#include "moritakit/field.hpp"

namespace moritakit {

/// Dense row-major matrix of field elements. The field is passed to every
/// operation; a Matrix does not know which field it lives over.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Elem& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) {
        return Matrix(rows, cols, f.zero());
    }
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);
    void set_row(std::size_t i, const Vector& v);

    const std::vector<Elem>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Field& f, const Vector& v);
bool equal(const Field& f, const Vector& a, const Vector& b);
bool equal(const Field& f, const Matrix& a, const Matrix& b);
Vector add(const Field& f, const Vector& a, const Vector& b);
Vector sub(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, const Elem& c, const Vector& v);
/// y += c * x
void axpy(const Field& f, const Elem& c, const Vector& x, Vector& y);

Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vector apply(const Field& f, const Matrix& a, const Vector& v);
Matrix transpose(const Matrix& a);
Matrix vstack(const Field& f, const std::vector<Matrix>& blocks);
Matrix hstack(const Field& f, const std::vector<Matrix>& blocks);
/// Embeds every entry through a field embedding (e.g. K -> L).
Matrix map_entries(const Matrix& a, const std::function<Elem(const Elem&)>& fn);

/// Basis of {F : F·A = B·F for every pair (A,B)}, F of shape rows x cols,
/// returned as columns of row-major vec(F). The system is reduced one pair
/// at a time on the current solution space.
Matrix intertwiners(const Field& f, std::size_t rows, std::size_t cols, const std::vector<std::pair<Matrix, Matrix>>& pairs);
/// Reshapes a row-major vec(F) into F.
Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vector& v);
Vector flatten(const Matrix& m);

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_echelon(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);
/// Basis of the right kernel, as columns. Free variables in increasing order.
Matrix kernel(const Field& f, const Matrix& m);
std::optional<Vector> solve(const Field& f, const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);
bool is_invertible(const Field& f, const Matrix& m);

/// A subspace of K^n with a fixed basis (columns) and a coordinate map.
class Subspace {
public:
    Subspace() = default;
    /// Basis = the pivot columns of `spanning` (columns in their given order).
    static Subspace span(const Field& f, const Matrix& spanning);
    /// `basis` columns must be linearly independent.
    static Subspace from_basis(const Field& f, Matrix basis);
    static Subspace whole(const Field& f, std::size_t n);

    std::size_t dim() const noexcept { return basis_.cols(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    const Matrix& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.column(i); }

    /// Coordinates of v in the basis, or nullopt when v is not in the subspace.
    std::optional<Vector> coordinates(const Field& f, const Vector& v) const;
    /// Coordinates of v, assuming membership (no verification).
    Vector coordinates_unchecked(const Field& f, const Vector& v) const;
    bool contains(const Field& f, const Vector& v) const { return coordinates(f, v).has_value(); }
    Vector embed(const Field& f, const Vector& coords) const { return apply(f, basis_, coords); }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> rows_;  // rows where basis_ restricts to an invertible block
    Matrix block_inverse_;
};

/// K^n modulo the span of a set of relator rows. The quotient basis is given
/// by the non-pivot coordinates of the reduced relator matrix.
class Quotient {
public:
    Quotient() = default;
    Quotient(const Field& f, std::size_t ambient, const Matrix& relator_rows);

    std::size_t dim() const noexcept { return free_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t relation_rank() const noexcept { return pivots_.size(); }
    const std::vector<std::size_t>& free_coordinates() const noexcept { return free_; }

    Vector project(const Field& f, Vector v) const;
    /// Canonical representative: zeros on pivot coordinates.
    Vector lift(const Field& f, const Vector& q) const;

private:
    std::size_t ambient_ = 0;
    Matrix reduced_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_;
};

} // namespace moritakit
