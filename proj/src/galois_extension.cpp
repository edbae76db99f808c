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

#include "moritakit/galois_extension.hpp"

namespace moritakit {

GaloisExtension::GaloisExtension(FieldPtr L, std::vector<Matrix> group) : L_(std::move(L)), group_(std::move(group)) {
    if (!L_ || L_->kind() != FieldKind::extension)
        throw Error(ErrorCode::invalid_presentation, "Galois extension needs an extension field L over K");
    K_ = L_->base();
    n_ = L_->degree();
    const Field& K = *K_;
    if (group_.size() != n_)
        throw Error(ErrorCode::invalid_presentation, "group order must equal [L:K]");
    for (std::size_t a = 0; a < n_; ++a) {
        std::vector<Vector> cols;
        const Elem ea = L_->from_coordinates(moritakit::unit_vector(K, n_, a));
        for (std::size_t b = 0; b < n_; ++b) {
            const Elem eb = L_->from_coordinates(moritakit::unit_vector(K, n_, b));
            cols.push_back(L_->coordinates(L_->mul(ea, eb)));
        }
        mult_by_basis_.push_back(Matrix::from_columns(K, n_, cols));
    }
    const Matrix id = Matrix::identity(K, n_);
    for (const auto& g : group_) {
        if (g.rows() != n_ || g.cols() != n_)
            throw Error(ErrorCode::invalid_presentation, "group matrix has the wrong shape");
        if (!is_invertible(K, g)) throw Error(ErrorCode::invalid_presentation, "group matrix is singular");
        if (!equal(K, moritakit::apply(K, g, L_->unit_vector()), L_->unit_vector()))
            throw Error(ErrorCode::invalid_presentation, "group element does not fix 1");
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                const Elem ga = L_->from_coordinates(g.column(a));
                const Elem gb = L_->from_coordinates(g.column(b));
                const Vector lhs = moritakit::apply(K, g, mult_by_basis_[a].column(b));
                if (!equal(K, lhs, L_->coordinates(L_->mul(ga, gb))))
                    throw Error(ErrorCode::invalid_presentation, "group element is not multiplicative");
            }
        }
    }
    if (!equal(K, group_.front(), id))
        throw Error(ErrorCode::invalid_presentation, "the first group element must be the identity");
    const std::size_t m = group_.size();
    compose_table_.assign(m * m, m);
    inverse_table_.assign(m, m);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < m; ++t) {
            const Matrix st = multiply(K, group_[s], group_[t]);
            for (std::size_t u = 0; u < m; ++u)
                if (equal(K, st, group_[u])) {
                    compose_table_[s * m + t] = u;
                    break;
                }
            if (compose_table_[s * m + t] == m)
                throw Error(ErrorCode::invalid_presentation, "group is not closed under composition");
            if (compose_table_[s * m + t] == 0) inverse_table_[s] = t;
        }
        if (inverse_table_[s] == m) throw Error(ErrorCode::invalid_presentation, "group element without inverse");
    }
    std::vector<std::size_t> all(m);
    for (std::size_t s = 0; s < m; ++s) all[s] = s;
    if (fixed_field(all).cols() != 1)
        throw Error(ErrorCode::invalid_presentation, "fixed field of the group is larger than K");
}

GaloisExtension GaloisExtension::finite(std::uint64_t p, unsigned n) {
    if (n < 2) throw Error(ErrorCode::invalid_presentation, "GF(p^n)/GF(p) needs n >= 2");
    FieldPtr L = Field::galois_field(p, n);
    const Field& K = *L->base();
    std::vector<Vector> cols;
    for (unsigned j = 0; j < n; ++j) {
        const Elem e = L->from_coordinates(moritakit::unit_vector(K, n, j));
        Elem x = L->one();
        for (std::uint64_t k = 0; k < p; ++k) x = L->mul(x, e);
        cols.push_back(L->coordinates(x));
    }
    const Matrix frob = Matrix::from_columns(K, n, cols);
    std::vector<Matrix> group{Matrix::identity(K, n)};
    for (unsigned k = 1; k < n; ++k) group.push_back(multiply(K, frob, group.back()));
    return GaloisExtension(L, std::move(group));
}

GaloisExtension GaloisExtension::quadratic(long d) {
    FieldPtr Q = Field::rationals();
    Vector mult(8, Q->zero());
    // basis {1, r} with r^2 = d
    mult[(0 * 2 + 0) * 2 + 0] = Q->one();
    mult[(0 * 2 + 1) * 2 + 1] = Q->one();
    mult[(1 * 2 + 0) * 2 + 1] = Q->one();
    mult[(1 * 2 + 1) * 2 + 0] = Q->from_int(d);
    Vector unit{Q->one(), Q->zero()};
    FieldPtr L = Field::extension(Q, 2, std::move(mult), std::move(unit));
    Matrix conj = Matrix::identity(*Q, 2);
    conj(1, 1) = Q->from_int(-1);
    return GaloisExtension(L, {Matrix::identity(*Q, 2), conj});
}

const Matrix& GaloisExtension::matrix(std::size_t sigma) const {
    if (sigma >= group_.size()) throw Error(ErrorCode::index_out_of_range, "group index out of range");
    return group_[sigma];
}

Elem GaloisExtension::apply(std::size_t sigma, const Elem& x) const {
    return L_->from_coordinates(moritakit::apply(*K_, matrix(sigma), L_->coordinates(x)));
}

std::size_t GaloisExtension::compose(std::size_t sigma, std::size_t tau) const {
    if (sigma >= group_.size() || tau >= group_.size())
        throw Error(ErrorCode::index_out_of_range, "group index out of range");
    return compose_table_[sigma * group_.size() + tau];
}

std::size_t GaloisExtension::inverse(std::size_t sigma) const {
    if (sigma >= group_.size()) throw Error(ErrorCode::index_out_of_range, "group index out of range");
    return inverse_table_[sigma];
}

std::size_t GaloisExtension::frobenius() const {
    if (!K_->is_finite()) throw Error(ErrorCode::unsupported, "Frobenius needs a finite base field");
    const Field& K = *K_;
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n_; ++j) {
        const Elem e = L_->from_coordinates(moritakit::unit_vector(K, n_, j));
        Elem x = L_->one();
        for (std::uint64_t k = 0; k < K.order(); ++k) x = L_->mul(x, e);
        cols.push_back(L_->coordinates(x));
    }
    const Matrix frob = Matrix::from_columns(K, n_, cols);
    for (std::size_t s = 0; s < group_.size(); ++s)
        if (equal(K, frob, group_[s])) return s;
    throw Error(ErrorCode::invalid_presentation, "Frobenius is not in the group");
}

Matrix GaloisExtension::multiplication(const Elem& x) const {
    const Field& K = *K_;
    const Vector c = L_->coordinates(x);
    Matrix m = Matrix::zero(K, n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
        if (K.is_zero(c[a])) continue;
        const Matrix& ma = mult_by_basis_[a];
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = K.add(m(i, j), K.mul(c[a], ma(i, j)));
    }
    return m;
}

Matrix GaloisExtension::fixed_field(const std::vector<std::size_t>& subgroup) const {
    const Field& K = *K_;
    std::vector<Matrix> blocks;
    for (auto s : subgroup) blocks.push_back(sub(K, matrix(s), Matrix::identity(K, n_)));
    if (blocks.empty()) return Matrix::identity(K, n_);
    return kernel(K, vstack(K, blocks));
}

bool GaloisExtension::same_as(const GaloisExtension& other) const {
    if (this == &other) return true;
    if (!same_field(L_, other.L_) || group_.size() != other.group_.size()) return false;
    for (std::size_t s = 0; s < group_.size(); ++s)
        if (!equal(*K_, group_[s], other.group_[s])) return false;
    return true;
}

std::string GaloisExtension::describe() const {
    return L_->describe() + " over " + K_->describe() + " with |G| = " + std::to_string(group_.size());
}

} // namespace moritakit
