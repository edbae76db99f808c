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

#include <initializer_list>
#include <memory>
#include <random>

#include <doctest.h>

#include "moritakit/algebra.hpp"
#include "moritakit/field.hpp"
#include "moritakit/galois.hpp"
#include "moritakit/galois_extension.hpp"
#include "moritakit/linalg.hpp"

namespace testutil {

using namespace moritakit;

inline Vector ints(const Field& f, std::initializer_list<long long> xs) {
    Vector v;
    for (long long x : xs) v.push_back(f.from_int(x));
    return v;
}

inline Matrix int_matrix(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<long long> xs) {
    Matrix m = Matrix::zero(f, rows, cols);
    std::size_t i = 0;
    for (long long x : xs) {
        m(i / cols, i % cols) = f.from_int(x);
        ++i;
    }
    return m;
}

/// Small nonzero-biased elements; finite fields are sampled uniformly.
inline Elem random_elem(const Field& f, std::mt19937_64& rng) {
    if (f.is_finite()) return f.element(rng() % f.order());
    auto small = [&]() { return Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1); };
    if (f.kind() == FieldKind::rationals) return f.from_rational(small());
    Vector c;
    for (unsigned i = 0; i < f.degree(); ++i) c.push_back(f.base()->from_rational(small()));
    return f.from_coordinates(c);
}

inline Vector random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
    Vector v(n);
    for (auto& x : v) x = random_elem(f, rng);
    return v;
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m = Matrix::zero(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_elem(f, rng);
    return m;
}

inline Matrix random_invertible_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (is_invertible(f, m)) return m;
    }
}

/// The same algebra in the basis given by the columns of p.
inline Algebra change_basis(const Algebra& a, const Matrix& p) {
    const Field& k = *a.field;
    const Matrix pinv = *inverse(k, p);
    Algebra out{a.field, a.dim, Vector(a.dim * a.dim * a.dim, k.zero()), apply(k, pinv, a.unit)};
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            const Vector prod = apply(k, pinv, a.multiply(p.column(i), p.column(j)));
            for (std::size_t c = 0; c < a.dim; ++c) out.mult[(i * a.dim + j) * a.dim + c] = prod[c];
        }
    return out;
}

inline ExtensionPtr finite_extension(std::uint64_t p, unsigned n) {
    return std::make_shared<const GaloisExtension>(GaloisExtension::finite(p, n));
}

inline ExtensionPtr quadratic_extension(long d) {
    return std::make_shared<const GaloisExtension>(GaloisExtension::quadratic(d));
}

template <class F>
ErrorCode thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no moritakit::Error thrown");
    return ErrorCode::unsupported;
}

} // namespace testutil
