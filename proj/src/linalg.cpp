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

#include "moritakit/linalg.hpp"

#include <cassert>

namespace moritakit {

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m = zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m = zero(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m = zero(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw Error(ErrorCode::index_out_of_range, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != cols_) throw Error(ErrorCode::index_out_of_range, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v(n, f.zero());
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Field& f, const Vector& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

bool equal(const Field& f, const Vector& a, const Vector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.equal(a[i], b[i])) return false;
    return true;
}

bool equal(const Field& f, const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && equal(f, a.data(), b.data());
}

Vector add(const Field& f, const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vector sub(const Field& f, const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vector scale(const Field& f, const Elem& c, const Vector& v) {
    Vector r(v.size(), f.zero());
    if (f.is_zero(c)) return r;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(c, v[i]);
    return r;
}

void axpy(const Field& f, const Elem& c, const Vector& x, Vector& y) {
    assert(x.size() == y.size());
    if (f.is_zero(c)) return;
    const bool unit = f.is_one(c);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.is_zero(x[i])) continue;
        y[i] = f.add(y[i], unit ? x[i] : f.mul(c, x[i]));
    }
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix r = Matrix::zero(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
    return r;
}

Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix r = Matrix::zero(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
    return r;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::index_out_of_range, "matrix shape mismatch");
    Matrix r = Matrix::zero(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Elem& bkj = b(k, j);
                if (f.is_zero(bkj)) continue;
                r(i, j) = f.add(r(i, j), f.mul(aik, bkj));
            }
        }
    }
    return r;
}

Vector apply(const Field& f, const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw Error(ErrorCode::index_out_of_range, "matrix-vector shape mismatch");
    Vector r(a.rows(), f.zero());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (f.is_zero(v[k])) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Elem& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            r[i] = f.add(r[i], f.mul(aik, v[k]));
        }
    }
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows(), Elem{});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix vstack(const Field& f, const std::vector<Matrix>& blocks) {
    std::size_t rows = 0;
    std::size_t cols = blocks.empty() ? 0 : blocks.front().cols();
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw Error(ErrorCode::index_out_of_range, "vstack width mismatch");
        rows += b.rows();
    }
    Matrix r = Matrix::zero(f, rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) r(at + i, j) = b(i, j);
        at += b.rows();
    }
    return r;
}

Matrix hstack(const Field& f, const std::vector<Matrix>& blocks) {
    std::size_t cols = 0;
    std::size_t rows = blocks.empty() ? 0 : blocks.front().rows();
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw Error(ErrorCode::index_out_of_range, "hstack height mismatch");
        cols += b.cols();
    }
    Matrix r = Matrix::zero(f, rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, at + j) = b(i, j);
        at += b.cols();
    }
    return r;
}

Matrix map_entries(const Matrix& a, const std::function<Elem(const Elem&)>& fn) {
    Matrix r(a.rows(), a.cols(), Elem{});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = fn(a(i, j));
    return r;
}

Echelon row_echelon(const Field& f, Matrix m) {
    Echelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && f.is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(inv, m(r, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (f.is_zero(m(r, j))) continue;
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vector& v) {
    if (v.size() != rows * cols) throw Error(ErrorCode::index_out_of_range, "unflatten: length mismatch");
    Matrix m = Matrix::zero(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

Vector flatten(const Matrix& m) { return m.data(); }

Matrix intertwiners(const Field& f, std::size_t rows, std::size_t cols, const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    const std::size_t n = rows * cols;
    Matrix basis = Matrix::identity(f, n);
    for (const auto& [a, b] : pairs) {
        if (basis.cols() == 0) break;
        if (a.rows() != cols || a.cols() != cols || b.rows() != rows || b.cols() != rows)
            throw Error(ErrorCode::index_out_of_range, "intertwiners: shape mismatch");
        std::vector<Vector> images;
        images.reserve(basis.cols());
        for (std::size_t c = 0; c < basis.cols(); ++c) {
            const Matrix x = unflatten(f, rows, cols, basis.column(c));
            images.push_back(flatten(sub(f, multiply(f, x, a), multiply(f, b, x))));
        }
        const Matrix ker = kernel(f, Matrix::from_columns(f, n, images));
        basis = ker.cols() == 0 ? Matrix::zero(f, n, 0) : multiply(f, basis, ker);
    }
    return basis;
}

std::size_t rank(const Field& f, const Matrix& m) { return row_echelon(f, m).pivots.size(); }

Matrix kernel(const Field& f, const Matrix& m) {
    const Echelon e = row_echelon(f, m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(f, cols, basis);
}

std::optional<Vector> solve(const Field& f, const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::index_out_of_range, "solve: rhs length mismatch");
    Matrix aug = Matrix::zero(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon e = row_echelon(f, std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols(), f.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug = hstack(f, {m, Matrix::identity(f, n)});
    const Echelon e = row_echelon(f, std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv = Matrix::zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

bool is_invertible(const Field& f, const Matrix& m) {
    return m.rows() == m.cols() && rank(f, m) == m.rows();
}

Subspace Subspace::span(const Field& f, const Matrix& spanning) {
    const Echelon e = row_echelon(f, spanning);
    std::vector<Vector> cols;
    for (auto c : e.pivots) cols.push_back(spanning.column(c));
    return from_basis(f, Matrix::from_columns(f, spanning.rows(), cols));
}

Subspace Subspace::from_basis(const Field& f, Matrix basis) {
    Subspace s;
    s.ambient_ = basis.rows();
    const std::size_t d = basis.cols();
    if (d > 0) {
        const Echelon e = row_echelon(f, transpose(basis));
        if (e.pivots.size() != d)
            throw Error(ErrorCode::invalid_input, "Subspace::from_basis: columns are dependent");
        s.rows_ = e.pivots;
        Matrix block = Matrix::zero(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) block(i, j) = basis(s.rows_[i], j);
        s.block_inverse_ = *inverse(f, block);
    }
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::whole(const Field& f, std::size_t n) {
    Subspace s;
    s.ambient_ = n;
    s.basis_ = Matrix::identity(f, n);
    s.block_inverse_ = Matrix::identity(f, n);
    s.rows_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.rows_[i] = i;
    return s;
}

Vector Subspace::coordinates_unchecked(const Field& f, const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::index_out_of_range, "Subspace: vector length mismatch");
    const std::size_t d = dim();
    Vector restricted(d, f.zero());
    for (std::size_t i = 0; i < d; ++i) restricted[i] = v[rows_[i]];
    if (d == 0) return {};
    return apply(f, block_inverse_, restricted);
}

std::optional<Vector> Subspace::coordinates(const Field& f, const Vector& v) const {
    Vector c = coordinates_unchecked(f, v);
    Vector back = embed(f, c);
    if (!equal(f, back, v)) return std::nullopt;
    return c;
}

Quotient::Quotient(const Field& f, std::size_t ambient, const Matrix& relator_rows) : ambient_(ambient) {
    std::vector<bool> is_pivot(ambient, false);
    if (relator_rows.rows() > 0) {
        if (relator_rows.cols() != ambient)
            throw Error(ErrorCode::index_out_of_range, "Quotient: relator width mismatch");
        Echelon e = row_echelon(f, relator_rows);
        pivots_ = e.pivots;
        reduced_ = Matrix::zero(f, pivots_.size(), ambient);
        for (std::size_t r = 0; r < pivots_.size(); ++r)
            for (std::size_t j = 0; j < ambient; ++j) reduced_(r, j) = e.reduced(r, j);
        for (auto c : pivots_) is_pivot[c] = true;
    }
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_pivot[j]) free_.push_back(j);
}

Vector Quotient::project(const Field& f, Vector v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::index_out_of_range, "Quotient: vector length mismatch");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Elem c = v[pivots_[r]];
        if (f.is_zero(c)) continue;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
            const Elem& x = reduced_(r, j);
            if (f.is_zero(x)) continue;
            v[j] = f.sub(v[j], f.mul(c, x));
        }
    }
    Vector q;
    q.reserve(free_.size());
    for (auto j : free_) q.push_back(v[j]);
    return q;
}

Vector Quotient::lift(const Field& f, const Vector& q) const {
    if (q.size() != free_.size()) throw Error(ErrorCode::index_out_of_range, "Quotient: class length mismatch");
    Vector v(ambient_, f.zero());
    for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
    return v;
}

} // namespace moritakit
