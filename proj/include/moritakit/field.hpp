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

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "moritakit/errors.hpp"

namespace moritakit {

using Rational = mpq_class;

/// Raw field element. Its meaning depends on the owning Field:
///  - finite fields store a code (base-q digits of the coordinates, low first),
///  - Q stores a reduced fraction,
///  - extensions of Q store their coordinate vector over Q.
using Elem = std::variant<std::uint64_t, Rational, std::vector<Rational>>;
using Vector = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { rationals, prime, extension };

/// The ground ring K. Restricted to fields: Q, GF(p), and finite-dimensional
/// commutative extensions presented by structure constants over a base field
/// (GF(p^n) is the special case presented by a modulus over GF(p)).
///
/// Fields are immutable after construction and shared by pointer.
class Field {
public:
    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    /// GF(p^n) = GF(p)[t]/(modulus); modulus coefficients low-to-high, monic.
    static FieldPtr galois_field(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus);
    /// GF(p^n) with the lexicographically smallest monic irreducible modulus.
    static FieldPtr galois_field(std::uint64_t p, unsigned n);
    /// A field presented over `base` by structure constants mult[(i*n+j)*n+k]
    /// (basis_i * basis_j = sum_k mult * basis_k) and a unit vector.
    static FieldPtr extension(FieldPtr base, unsigned degree, Vector mult, Vector unit);

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ != FieldKind::rationals && !infinite_ext_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    /// Number of elements; 0 for infinite fields.
    std::uint64_t order() const noexcept { return order_; }
    unsigned degree() const noexcept { return degree_; }
    const FieldPtr& base() const noexcept { return base_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    const Vector& structure_constants() const noexcept { return mult_; }
    const Vector& unit_vector() const noexcept { return unit_; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(long long v) const;
    Elem from_rational(const Rational& q) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const { return equal(a, one()); }
    bool equal(const Elem& a, const Elem& b) const;
    /// True iff `a` is a canonical element of this field.
    bool contains(const Elem& a) const;

    /// Finite fields only: the element with the given enumeration index.
    Elem element(std::uint64_t index) const;
    /// Finite fields only: enumeration index of `a`.
    std::uint64_t index_of(const Elem& a) const;

    /// Extension fields: coordinates over base(), and the inverse map.
    Vector coordinates(const Elem& a) const;
    Elem from_coordinates(const Vector& coords) const;
    /// Extension fields: the structural embedding base -> this.
    Elem embed(const Elem& base_elem) const;

    /// Structural equality (same presentation).
    bool same_as(const Field& other) const;
    std::string describe() const;
    std::string to_string(const Elem& a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;
    void build_tables();
    std::uint64_t slow_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t slow_neg(std::uint64_t a) const;
    std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t slow_inv(std::uint64_t a) const;
    std::vector<std::uint64_t> digits(std::uint64_t code) const;
    std::uint64_t pack(const std::vector<std::uint64_t>& digits) const;
    void check_is_field() const;

    FieldKind kind_ = FieldKind::rationals;
    bool infinite_ext_ = false;
    std::uint64_t p_ = 0;
    std::uint64_t order_ = 0;
    unsigned degree_ = 1;
    FieldPtr base_;
    Vector mult_;
    Vector unit_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> add_table_, mul_table_, neg_table_, inv_table_;
};

/// A field element bound to its field; the checked arithmetic surface.
class Scalar {
public:
    Scalar(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    const Elem& value() const noexcept { return value_; }

    Scalar inverse() const;
    std::string to_string() const { return field_->to_string(value_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const { return Scalar(field_, field_->neg(value_)); }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    FieldPtr field_;
    Elem value_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

} // namespace moritakit
