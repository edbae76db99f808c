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

#include "moritakit/algebra.hpp"

namespace moritakit {

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
    const Field& f = *field;
    Vector r(dim, f.zero());
    for (std::size_t i = 0; i < dim; ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (f.is_zero(b[j])) continue;
            const Elem c = f.mul(a[i], b[j]);
            const std::size_t base = (i * dim + j) * dim;
            for (std::size_t k = 0; k < dim; ++k) {
                const Elem& m = mult[base + k];
                if (!f.is_zero(m)) r[k] = f.add(r[k], f.mul(c, m));
            }
        }
    }
    return r;
}

Matrix Algebra::left_multiplication(const Vector& a) const {
    std::vector<Vector> cols;
    cols.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) cols.push_back(multiply(a, basis(j)));
    return Matrix::from_columns(*field, dim, cols);
}

Matrix Algebra::right_multiplication(const Vector& a) const {
    std::vector<Vector> cols;
    cols.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) cols.push_back(multiply(basis(j), a));
    return Matrix::from_columns(*field, dim, cols);
}

std::vector<std::string> Algebra::validate() const {
    std::vector<std::string> out;
    if (!field) return {"missing field"};
    const Field& f = *field;
    if (mult.size() != dim * dim * dim) return {"structure constant tensor has the wrong size"};
    if (unit.size() != dim) return {"unit vector has the wrong size"};
    for (const auto& c : mult)
        if (!f.contains(c)) return {"structure constant outside the field"};
    for (const auto& c : unit)
        if (!f.contains(c)) return {"unit coordinate outside the field"};
    for (std::size_t i = 0; i < dim && out.size() < 8; ++i) {
        const Vector ei = basis(i);
        if (!equal(f, multiply(unit, ei), ei) || !equal(f, multiply(ei, unit), ei))
            out.push_back("unit law fails on basis element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < dim && out.size() < 8; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Vector eij = multiply(basis(i), basis(j));
            for (std::size_t k = 0; k < dim; ++k) {
                const Vector ek = basis(k);
                if (!equal(f, multiply(eij, ek), multiply(basis(i), multiply(basis(j), ek)))) {
                    out.push_back("associativity fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
                    break;
                }
            }
        }
    }
    return out;
}

void Algebra::require_valid() const {
    const auto v = validate();
    if (!v.empty()) throw Error(ErrorCode::invalid_algebra, v.front());
}

bool Algebra::is_commutative() const {
    const Field& f = *field;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (!f.equal(constant(i, j, k), constant(j, i, k))) return false;
    return true;
}

Algebra Algebra::ground(FieldPtr f) {
    Algebra a;
    a.dim = 1;
    a.mult = {f->one()};
    a.unit = {f->one()};
    a.field = std::move(f);
    return a;
}

Algebra Algebra::matrix(FieldPtr f, std::size_t n) {
    Algebra a;
    a.dim = n * n;
    a.mult.assign(a.dim * a.dim * a.dim, f->zero());
    a.unit.assign(a.dim, f->zero());
    for (std::size_t i = 0; i < n; ++i) {
        a.unit[i * n + i] = f->one();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                // e_ij * e_jl = e_il
                const std::size_t x = i * n + j;
                const std::size_t y = j * n + l;
                a.mult[(x * a.dim + y) * a.dim + (i * n + l)] = f->one();
            }
    }
    a.field = std::move(f);
    return a;
}

Algebra Algebra::quaternion(FieldPtr f, const Elem& qa, const Elem& qb) {
    const Field& F = *f;
    Algebra a;
    a.dim = 4;
    a.mult.assign(64, F.zero());
    a.unit = {F.one(), F.zero(), F.zero(), F.zero()};
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Elem& c) { a.mult[(i * 4 + j) * 4 + k] = c; };
    const Elem ab = F.mul(qa, qb);
    for (std::size_t x = 0; x < 4; ++x) {
        set(0, x, x, F.one());
        set(x, 0, x, F.one());
    }
    // i=1, j=2, k=3
    set(1, 1, 0, qa);
    set(2, 2, 0, qb);
    set(3, 3, 0, F.neg(ab));
    set(1, 2, 3, F.one());
    set(2, 1, 3, F.neg(F.one()));
    set(1, 3, 2, qa);
    set(3, 1, 2, F.neg(qa));
    set(3, 2, 1, qb);
    set(2, 3, 1, F.neg(qb));
    a.field = std::move(f);
    a.require_valid();
    return a;
}

Algebra Algebra::split(FieldPtr f, std::size_t n) {
    Algebra a;
    a.dim = n;
    a.mult.assign(n * n * n, f->zero());
    a.unit.assign(n, f->one());
    for (std::size_t i = 0; i < n; ++i) a.mult[(i * n + i) * n + i] = f->one();
    a.field = std::move(f);
    return a;
}

Algebra Algebra::polynomial_quotient(FieldPtr f, const Vector& monic) {
    const Field& F = *f;
    if (monic.size() < 2 || !F.is_one(monic.back()))
        throw Error(ErrorCode::invalid_algebra, "K[x]/(f) needs a monic f of positive degree");
    const std::size_t d = monic.size() - 1;
    Algebra a;
    a.dim = d;
    a.mult.assign(d * d * d, F.zero());
    a.unit.assign(d, F.zero());
    a.unit[0] = F.one();
    // x^k reduced mod f, for k < 2d-1
    std::vector<Vector> powers;
    Vector cur(d, F.zero());
    cur[0] = F.one();
    for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
        powers.push_back(cur);
        Vector next(d, F.zero());
        const Elem top = cur[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = F.zero();
        for (std::size_t i = 0; i < d; ++i) next[i] = F.sub(next[i], F.mul(top, monic[i]));
        cur = std::move(next);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) a.mult[(i * d + j) * d + k] = powers[i + j][k];
    a.field = std::move(f);
    return a;
}

Algebra Algebra::field_over_base(const FieldPtr& L) {
    if (L->kind() != FieldKind::extension) return ground(L);
    Algebra a;
    a.field = L->base();
    a.dim = L->degree();
    a.mult = L->structure_constants();
    a.unit = L->unit_vector();
    return a;
}

Algebra Algebra::opposite() const {
    Algebra a = *this;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) a.mult[(i * dim + j) * dim + k] = constant(j, i, k);
    return a;
}

Algebra tensor(const Algebra& a, const Algebra& b) {
    require_same_field(a.field, b.field, "tensor");
    const Field& f = *a.field;
    Algebra t;
    t.field = a.field;
    t.dim = a.dim * b.dim;
    t.mult.assign(t.dim * t.dim * t.dim, f.zero());
    t.unit.assign(t.dim, f.zero());
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) t.unit[i * b.dim + j] = f.mul(a.unit[i], b.unit[j]);
    for (std::size_t i1 = 0; i1 < a.dim; ++i1)
        for (std::size_t i2 = 0; i2 < a.dim; ++i2)
            for (std::size_t i3 = 0; i3 < a.dim; ++i3) {
                const Elem& ca = a.constant(i1, i2, i3);
                if (f.is_zero(ca)) continue;
                for (std::size_t j1 = 0; j1 < b.dim; ++j1)
                    for (std::size_t j2 = 0; j2 < b.dim; ++j2)
                        for (std::size_t j3 = 0; j3 < b.dim; ++j3) {
                            const Elem& cb = b.constant(j1, j2, j3);
                            if (f.is_zero(cb)) continue;
                            const std::size_t x = i1 * b.dim + j1;
                            const std::size_t y = i2 * b.dim + j2;
                            const std::size_t z = i3 * b.dim + j3;
                            t.mult[(x * t.dim + y) * t.dim + z] = f.mul(ca, cb);
                        }
            }
    return t;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
    require_same_field(a.field, b.field, "direct_product");
    const Field& f = *a.field;
    Algebra p;
    p.field = a.field;
    p.dim = a.dim + b.dim;
    p.mult.assign(p.dim * p.dim * p.dim, f.zero());
    p.unit = a.unit;
    p.unit.insert(p.unit.end(), b.unit.begin(), b.unit.end());
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) p.mult[(i * p.dim + j) * p.dim + k] = a.constant(i, j, k);
    const std::size_t o = a.dim;
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                p.mult[((o + i) * p.dim + (o + j)) * p.dim + (o + k)] = b.constant(i, j, k);
    return p;
}

bool is_algebra_homomorphism(const Algebra& a, const Algebra& b, const Matrix& phi) {
    const Field& f = *a.field;
    if (phi.rows() != b.dim || phi.cols() != a.dim) return false;
    if (!equal(f, apply(f, phi, a.unit), b.unit)) return false;
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Vector pi = phi.column(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const Vector lhs = apply(f, phi, a.multiply(a.basis(i), a.basis(j)));
            if (!equal(f, lhs, b.multiply(pi, phi.column(j)))) return false;
        }
    }
    return true;
}

} // namespace moritakit
