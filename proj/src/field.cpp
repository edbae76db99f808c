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

#include "moritakit/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "moritakit/linalg.hpp"

namespace moritakit {

namespace {

constexpr std::uint64_t kTableLimit = 256;
constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 62;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Polynomials over GF(p), coefficients low-to-high, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

bool poly_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return n == 1;
    // Trial division by every monic polynomial of degree 1..n/2.
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

bool rational_is_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

} // namespace

FieldPtr Field::rationals() {
    static const FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::rationals;
        return f;
    }();
    return q;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31))
        throw Error(ErrorCode::invalid_presentation, "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::prime;
    f->p_ = p;
    f->order_ = p;
    f->build_tables();
    return f;
}

FieldPtr Field::galois_field(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus) {
    if (n == 0) throw Error(ErrorCode::invalid_presentation, "GF(p^n) needs n >= 1");
    FieldPtr base = prime(p);
    if (modulus.size() != n + 1 || modulus.back() != 1)
        throw Error(ErrorCode::invalid_presentation, "modulus must be monic of degree n");
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorCode::invalid_presentation, "modulus coefficient out of range");
    if (!poly_irreducible(modulus, p))
        throw Error(ErrorCode::invalid_presentation, "modulus is not irreducible over GF(p)");
    if (n == 1) {
        // GF(p)[t]/(t+c) is GF(p) itself; keep the prime presentation.
        return base;
    }
    Vector mult(static_cast<std::size_t>(n) * n * n, base->zero());
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            Poly prod(i + j + 1, 0);
            prod[i + j] = 1;
            Poly r = poly_mod(prod, modulus, p);
            for (std::size_t k = 0; k < r.size(); ++k) mult[(i * n + j) * n + k] = Elem{r[k]};
        }
    }
    Vector unit(n, base->zero());
    unit[0] = base->one();
    auto f = std::const_pointer_cast<Field>(extension(base, n, std::move(mult), std::move(unit)));
    f->modulus_ = std::move(modulus);
    return f;
}

FieldPtr Field::galois_field(std::uint64_t p, unsigned n) {
    if (n == 1) return prime(p);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly m(n + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i) {
            m[i] = c % p;
            c /= p;
        }
        m[n] = 1;
        if (m[0] != 0 && poly_irreducible(m, p)) return galois_field(p, n, m);
    }
    throw Error(ErrorCode::invalid_presentation, "no irreducible modulus found");
}

FieldPtr Field::extension(FieldPtr base, unsigned degree, Vector mult, Vector unit) {
    if (!base) throw Error(ErrorCode::invalid_presentation, "extension without a base field");
    if (degree == 0) throw Error(ErrorCode::invalid_presentation, "extension degree must be positive");
    const std::size_t n = degree;
    if (mult.size() != n * n * n || unit.size() != n)
        throw Error(ErrorCode::invalid_presentation, "structure constant shape mismatch");
    for (const auto& c : mult)
        if (!base->contains(c)) throw Error(ErrorCode::invalid_presentation, "structure constant outside base field");
    for (const auto& c : unit)
        if (!base->contains(c)) throw Error(ErrorCode::invalid_presentation, "unit coordinate outside base field");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::extension;
    f->base_ = base;
    f->degree_ = degree;
    f->mult_ = std::move(mult);
    f->unit_ = std::move(unit);
    f->p_ = base->characteristic();
    if (base->is_finite()) {
        const long double approx = std::pow(static_cast<long double>(base->order()), static_cast<long double>(degree));
        if (approx >= static_cast<long double>(kOrderLimit))
            throw Error(ErrorCode::unsupported, "finite field too large");
        std::uint64_t order = 1;
        for (unsigned i = 0; i < degree; ++i) order *= base->order();
        f->order_ = order;
    } else {
        f->infinite_ext_ = true;
        f->order_ = 0;
    }
    f->check_is_field();
    if (f->is_finite()) f->build_tables();
    return f;
}

void Field::check_is_field() const {
    const Field& b = *base_;
    const std::size_t n = degree_;
    // Commutative, associative and unital on basis elements.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                if (!b.equal(mult_[(i * n + j) * n + k], mult_[(j * n + i) * n + k]))
                    throw Error(ErrorCode::invalid_presentation, "extension is not commutative");
        }
    }
    auto basis_mul = [&](const Vector& x, const Vector& y) {
        Vector r(n, b.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (b.is_zero(x[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.is_zero(y[j])) continue;
                const Elem c = b.mul(x[i], y[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    const Elem& m = mult_[(i * n + j) * n + k];
                    if (!b.is_zero(m)) r[k] = b.add(r[k], b.mul(c, m));
                }
            }
        }
        return r;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ei = moritakit::unit_vector(b, n, i);
        if (!moritakit::equal(b, basis_mul(unit_, ei), ei))
            throw Error(ErrorCode::invalid_presentation, "unit vector is not a unit");
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ej = moritakit::unit_vector(b, n, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ek = moritakit::unit_vector(b, n, k);
                if (!moritakit::equal(b, basis_mul(basis_mul(ei, ej), ek), basis_mul(ei, basis_mul(ej, ek))))
                    throw Error(ErrorCode::invalid_presentation, "extension is not associative");
            }
        }
    }
    if (n == 1) return;
    if (b.is_finite()) {
        // A finite commutative algebra is a field iff Frobenius x -> x^q is
        // injective and its fixed space is the base field.
        const std::uint64_t q = b.order();
        auto power = [&](Vector x, std::uint64_t e) {
            Vector r = unit_;
            while (e) {
                if (e & 1) r = basis_mul(r, x);
                x = basis_mul(x, x);
                e >>= 1;
            }
            return r;
        };
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < n; ++i) cols.push_back(power(moritakit::unit_vector(b, n, i), q));
        const Matrix frob = Matrix::from_columns(b, n, cols);
        if (rank(b, frob) != n) throw Error(ErrorCode::invalid_presentation, "extension has nilpotents");
        const Matrix fixed = moritakit::sub(b, frob, Matrix::identity(b, n));
        if (n - rank(b, fixed) != 1) throw Error(ErrorCode::invalid_presentation, "extension is not a field");
        return;
    }
    if (b.kind() != FieldKind::rationals || n != 2)
        throw Error(ErrorCode::unsupported, "infinite extensions are limited to quadratic extensions of Q");
    // Pick a basis vector v outside Q*1, write v^2 = a + c v, test c^2 + 4a.
    std::size_t pick = n;
    for (std::size_t j = 0; j < n && pick == n; ++j) {
        const Matrix m = Matrix::from_columns(b, n, {unit_, moritakit::unit_vector(b, n, j)});
        if (rank(b, m) == 2) pick = j;
    }
    const Vector v = moritakit::unit_vector(b, n, pick);
    const Matrix basis = Matrix::from_columns(b, n, {unit_, v});
    const auto coeffs = solve(b, basis, basis_mul(v, v));
    const Rational a = std::get<Rational>((*coeffs)[0]);
    const Rational c = std::get<Rational>((*coeffs)[1]);
    const Rational disc = c * c + 4 * a;
    if (rational_is_square(disc)) throw Error(ErrorCode::invalid_presentation, "quadratic algebra splits over Q");
}

void Field::build_tables() {
    if (order_ == 0 || order_ > kTableLimit) return;
    const std::size_t q = order_;
    add_table_.resize(q * q);
    mul_table_.resize(q * q);
    neg_table_.resize(q);
    inv_table_.resize(q, 0);
    for (std::uint64_t a = 0; a < q; ++a) {
        neg_table_[a] = static_cast<std::uint32_t>(slow_neg(a));
        for (std::uint64_t b = 0; b < q; ++b) {
            add_table_[a * q + b] = static_cast<std::uint32_t>(slow_add(a, b));
            mul_table_[a * q + b] = static_cast<std::uint32_t>(slow_mul(a, b));
        }
    }
    const std::uint64_t one = std::get<std::uint64_t>(this->one());
    for (std::uint64_t a = 1; a < q; ++a)
        for (std::uint64_t b = 1; b < q; ++b)
            if (mul_table_[a * q + b] == one) {
                inv_table_[a] = static_cast<std::uint32_t>(b);
                break;
            }
}

std::vector<std::uint64_t> Field::digits(std::uint64_t code) const {
    const std::uint64_t q = base_->order();
    std::vector<std::uint64_t> d(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        d[i] = code % q;
        code /= q;
    }
    return d;
}

std::uint64_t Field::pack(const std::vector<std::uint64_t>& d) const {
    const std::uint64_t q = base_->order();
    std::uint64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * q + d[i];
    return code;
}

std::uint64_t Field::slow_add(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == FieldKind::prime) return (a + b) % p_;
    auto da = digits(a);
    auto db = digits(b);
    for (unsigned i = 0; i < degree_; ++i)
        da[i] = std::get<std::uint64_t>(base_->add(Elem{da[i]}, Elem{db[i]}));
    return pack(da);
}

std::uint64_t Field::slow_neg(std::uint64_t a) const {
    if (kind_ == FieldKind::prime) return a == 0 ? 0 : p_ - a;
    auto da = digits(a);
    for (auto& x : da) x = std::get<std::uint64_t>(base_->neg(Elem{x}));
    return pack(da);
}

std::uint64_t Field::slow_mul(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == FieldKind::prime) return mulmod(a, b, p_);
    const Field& bf = *base_;
    const auto da = digits(a);
    const auto db = digits(b);
    const std::size_t n = degree_;
    Vector r(n, bf.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (da[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (db[j] == 0) continue;
            const Elem c = bf.mul(Elem{da[i]}, Elem{db[j]});
            for (std::size_t k = 0; k < n; ++k) {
                const Elem& m = mult_[(i * n + j) * n + k];
                if (!bf.is_zero(m)) r[k] = bf.add(r[k], bf.mul(c, m));
            }
        }
    }
    std::vector<std::uint64_t> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = std::get<std::uint64_t>(r[k]);
    return pack(out);
}

std::uint64_t Field::slow_inv(std::uint64_t a) const {
    if (a == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in " + describe());
    if (kind_ == FieldKind::prime) return powmod(a, p_ - 2, p_);
    std::uint64_t e = order_ - 2;
    std::uint64_t r = std::get<std::uint64_t>(one());
    std::uint64_t x = a;
    while (e) {
        if (e & 1) r = slow_mul(r, x);
        x = slow_mul(x, x);
        e >>= 1;
    }
    return r;
}

Elem Field::zero() const {
    if (kind_ == FieldKind::rationals) return Rational(0);
    if (infinite_ext_) return std::vector<Rational>(degree_, Rational(0));
    return std::uint64_t{0};
}

Elem Field::one() const {
    if (kind_ == FieldKind::rationals) return Rational(1);
    if (kind_ == FieldKind::prime) return std::uint64_t{1};
    return from_coordinates(unit_);
}

Elem Field::from_int(long long v) const {
    if (kind_ == FieldKind::rationals) return Rational(static_cast<long>(v));
    if (kind_ == FieldKind::prime) {
        const long long p = static_cast<long long>(p_);
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    }
    return embed(base_->from_int(v));
}

Elem Field::from_rational(const Rational& q) const {
    if (kind_ == FieldKind::rationals) {
        // mpq_class(n, d) is not reduced on construction; equality needs canonical form.
        if (q.get_den() == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
        Rational c = q;
        c.canonicalize();
        return c;
    }
    if (kind_ == FieldKind::prime) {
        mpz_class num = q.get_num() % static_cast<unsigned long>(p_);
        if (num < 0) num += static_cast<unsigned long>(p_);
        mpz_class den = q.get_den() % static_cast<unsigned long>(p_);
        if (den == 0) throw Error(ErrorCode::division_by_zero, "denominator vanishes in " + describe());
        return mulmod(num.get_ui(), powmod(den.get_ui(), p_ - 2, p_), p_);
    }
    return embed(base_->from_rational(q));
}

Elem Field::add(const Elem& a, const Elem& b) const {
    if (kind_ == FieldKind::rationals) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    if (infinite_ext_) {
        const auto& x = std::get<std::vector<Rational>>(a);
        const auto& y = std::get<std::vector<Rational>>(b);
        std::vector<Rational> r(degree_);
        for (unsigned i = 0; i < degree_; ++i) r[i] = x[i] + y[i];
        return r;
    }
    const std::uint64_t x = std::get<std::uint64_t>(a);
    const std::uint64_t y = std::get<std::uint64_t>(b);
    if (!add_table_.empty()) return std::uint64_t{add_table_[x * order_ + y]};
    return slow_add(x, y);
}

Elem Field::neg(const Elem& a) const {
    if (kind_ == FieldKind::rationals) return Rational(-std::get<Rational>(a));
    if (infinite_ext_) {
        auto r = std::get<std::vector<Rational>>(a);
        for (auto& x : r) x = -x;
        return r;
    }
    const std::uint64_t x = std::get<std::uint64_t>(a);
    if (!neg_table_.empty()) return std::uint64_t{neg_table_[x]};
    return slow_neg(x);
}

Elem Field::sub(const Elem& a, const Elem& b) const {
    if (kind_ == FieldKind::rationals) return Rational(std::get<Rational>(a) - std::get<Rational>(b));
    return add(a, neg(b));
}

Elem Field::mul(const Elem& a, const Elem& b) const {
    if (kind_ == FieldKind::rationals) return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    if (infinite_ext_) {
        const auto& x = std::get<std::vector<Rational>>(a);
        const auto& y = std::get<std::vector<Rational>>(b);
        const std::size_t n = degree_;
        std::vector<Rational> r(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(y[j]) == 0) continue;
                const Rational c = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& m = std::get<Rational>(mult_[(i * n + j) * n + k]);
                    if (sgn(m) != 0) r[k] += c * m;
                }
            }
        }
        return r;
    }
    const std::uint64_t x = std::get<std::uint64_t>(a);
    const std::uint64_t y = std::get<std::uint64_t>(b);
    if (!mul_table_.empty()) return std::uint64_t{mul_table_[x * order_ + y]};
    return slow_mul(x, y);
}

Elem Field::inv(const Elem& a) const {
    if (is_zero(a)) throw Error(ErrorCode::division_by_zero, "inverse of zero in " + describe());
    if (kind_ == FieldKind::rationals) return Rational(1 / std::get<Rational>(a));
    if (infinite_ext_) {
        // Solve a * x = 1 through the multiplication-by-a matrix over Q.
        const Field& q = *base_;
        const std::size_t n = degree_;
        const auto& x = std::get<std::vector<Rational>>(a);
        Matrix m = Matrix::zero(q, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    m(k, j) = q.add(m(k, j), q.mul(Elem{x[i]}, mult_[(i * n + j) * n + k]));
        const auto sol = solve(q, m, unit_);
        if (!sol) throw Error(ErrorCode::division_by_zero, "element is not invertible");
        return from_coordinates(*sol);
    }
    const std::uint64_t x = std::get<std::uint64_t>(a);
    if (!inv_table_.empty()) return std::uint64_t{inv_table_[x]};
    return slow_inv(x);
}

bool Field::is_zero(const Elem& a) const {
    if (const auto* u = std::get_if<std::uint64_t>(&a)) return *u == 0;
    if (const auto* q = std::get_if<Rational>(&a)) return sgn(*q) == 0;
    for (const auto& x : std::get<std::vector<Rational>>(a))
        if (sgn(x) != 0) return false;
    return true;
}

bool Field::equal(const Elem& a, const Elem& b) const { return a == b; }

bool Field::contains(const Elem& a) const {
    if (kind_ == FieldKind::rationals) return std::holds_alternative<Rational>(a);
    if (infinite_ext_) {
        const auto* v = std::get_if<std::vector<Rational>>(&a);
        return v && v->size() == degree_;
    }
    const auto* u = std::get_if<std::uint64_t>(&a);
    return u && *u < order_;
}

Elem Field::element(std::uint64_t index) const {
    if (!is_finite()) throw Error(ErrorCode::unsupported, "element enumeration needs a finite field");
    if (index >= order_) throw Error(ErrorCode::index_out_of_range, "element index out of range");
    return index;
}

std::uint64_t Field::index_of(const Elem& a) const {
    if (!is_finite()) throw Error(ErrorCode::unsupported, "element enumeration needs a finite field");
    return std::get<std::uint64_t>(a);
}

Vector Field::coordinates(const Elem& a) const {
    if (kind_ != FieldKind::extension) return Vector{a};
    Vector out;
    out.reserve(degree_);
    if (infinite_ext_) {
        for (const auto& x : std::get<std::vector<Rational>>(a)) out.emplace_back(x);
        return out;
    }
    for (auto d : digits(std::get<std::uint64_t>(a))) out.emplace_back(d);
    return out;
}

Elem Field::from_coordinates(const Vector& coords) const {
    if (kind_ != FieldKind::extension) {
        if (coords.size() != 1) throw Error(ErrorCode::index_out_of_range, "coordinate length mismatch");
        return coords[0];
    }
    if (coords.size() != degree_) throw Error(ErrorCode::index_out_of_range, "coordinate length mismatch");
    if (infinite_ext_) {
        std::vector<Rational> v;
        v.reserve(degree_);
        for (const auto& c : coords) v.push_back(std::get<Rational>(c));
        return v;
    }
    std::vector<std::uint64_t> d;
    d.reserve(degree_);
    for (const auto& c : coords) d.push_back(std::get<std::uint64_t>(c));
    return pack(d);
}

Elem Field::embed(const Elem& base_elem) const {
    if (kind_ != FieldKind::extension) return base_elem;
    return from_coordinates(scale(*base_, base_elem, unit_));
}

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || p_ != other.p_ || degree_ != other.degree_) return false;
    if (kind_ != FieldKind::extension) return true;
    if (!base_->same_as(*other.base_)) return false;
    return mult_ == other.mult_ && unit_ == other.unit_;
}

std::string Field::describe() const {
    switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::extension:
        if (!modulus_.empty()) return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ")";
        return base_->describe() + "-extension of degree " + std::to_string(degree_);
    }
    return "?";
}

std::string Field::to_string(const Elem& a) const {
    if (kind_ == FieldKind::rationals) return rational_string(std::get<Rational>(a));
    if (kind_ == FieldKind::prime) return std::to_string(std::get<std::uint64_t>(a));
    std::ostringstream os;
    os << '[';
    const Vector c = coordinates(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << base_->to_string(c[i]);
    os << ']';
    return os.str();
}

Scalar::Scalar(FieldPtr field, Elem value) : field_(std::move(field)), value_(std::move(value)) {
    if (!field_ || !field_->contains(value_))
        throw Error(ErrorCode::invalid_input, "value is not an element of the field");
}

Scalar Scalar::inverse() const { return Scalar(field_, field_->inv(value_)); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "add");
    return Scalar(a.field_, a.field_->add(a.value_, b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "sub");
    return Scalar(a.field_, a.field_->sub(a.value_, b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "mul");
    return Scalar(a.field_, a.field_->mul(a.value_, b.value_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "div");
    return Scalar(a.field_, a.field_->div(a.value_, b.value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "eq");
    return a.field_->equal(a.value_, b.value_);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && (a == b || a->same_as(*b));
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
    if (!same_field(a, b))
        throw Error(ErrorCode::ring_mismatch, std::string(where) + ": operands live over different rings");
}

} // namespace moritakit
