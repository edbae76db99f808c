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

#include "moritakit/azumaya.hpp"

#include <cmath>
#include <random>

#include "moritakit/bimodule.hpp"
#include "moritakit/envelopes.hpp"

namespace moritakit {

namespace {

Elem random_scalar(const Field& k, std::mt19937_64& rng) {
    if (k.is_finite()) return k.element(rng() % k.order());
    return k.from_int(static_cast<long long>(rng() % 5) - 2);
}

Vector random_vector(const Field& k, std::size_t n, std::mt19937_64& rng) {
    Vector v(n);
    for (auto& x : v) x = random_scalar(k, rng);
    return v;
}

std::size_t left_rank(const Algebra& a, const Vector& x) { return rank(*a.field, a.left_multiplication(x)); }

/// dim e·A·e.
std::size_t corner_dim(const Algebra& a, const Vector& e) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < a.dim; ++i) cols.push_back(a.multiply(a.multiply(e, a.basis(i)), e));
    return rank(*a.field, Matrix::from_columns(*a.field, a.dim, cols));
}

bool is_idempotent_elem(const Algebra& a, const Vector& e) {
    return !is_zero(*a.field, e) && equal(*a.field, a.multiply(e, e), e);
}

std::optional<std::size_t> square_root(std::size_t d) {
    const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
    for (std::size_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c)
        if (c * c == d) return c;
    return std::nullopt;
}

class Search {
public:
    Search(const Algebra& a, const TrivializeOptions& o) : a_(a), k_(*a.field), opts_(o), rng_(o.seed) {}

    /// Accepts e after checking the full witness; records the stage.
    bool offer(const Vector& e, const char* stage) {
        ++out.examined;
        if (!is_idempotent_elem(a_, e) || corner_dim(a_, e) != 1) return false;
        const CategoryPtr c = algebra_as_category(a_, "*");
        SatView view(c);
        const GenerationReport g = additively_generates({SatObject{{0}, e}}, view);
        if (!g.holds) return false;
        out.verdict = Verdict::yes;
        out.idempotent = e;
        out.stage = stage;
        out.trace = g.witnesses.empty() ? std::vector<TraceTerm>{} : g.witnesses[0];
        return true;
    }

    bool spent() const { return out.examined >= opts_.budget; }

    bool low_support() {
        std::vector<Elem> values;
        if (k_.is_finite()) {
            for (std::uint64_t i = 1; i < k_.order(); ++i) values.push_back(k_.element(i));
        } else {
            for (long long v : {1, -1, 2, -2}) values.push_back(k_.from_int(v));
            values.push_back(k_.from_rational(Rational(1, 2)));
            values.push_back(k_.from_rational(Rational(-1, 2)));
        }
        const std::size_t d = a_.dim;
        for (std::size_t i = 0; i < d && !spent(); ++i)
            for (const auto& x : values) {
                Vector e(d, k_.zero());
                e[i] = x;
                if (offer(e, "low-support")) return true;
            }
        for (std::size_t i = 0; i < d && !spent(); ++i)
            for (std::size_t j = i + 1; j < d && !spent(); ++j)
                for (const auto& x : values)
                    for (const auto& y : values) {
                        Vector e(d, k_.zero());
                        e[i] = x;
                        e[j] = y;
                        if (offer(e, "low-support")) return true;
                    }
        return false;
    }

    /// Drives a random zero divisor down to left rank sqrt(d), where a·x·a = λa
    /// and x·a/λ is a rank-one idempotent.
    bool rank_descent() {
        const auto n = square_root(a_.dim);
        if (!n) return false;
        const std::uint64_t tries = std::min<std::uint64_t>(opts_.budget / 4 + 1, 2048);
        for (std::uint64_t t = 0; t < tries && !spent(); ++t) {
            Vector x = random_vector(k_, a_.dim, rng_);
            std::size_t r = left_rank(a_, x);
            ++out.examined;
            if (r == 0 || r == a_.dim) continue;
            while (r > *n) {
                bool moved = false;
                for (int s = 0; s < 32 && !moved; ++s) {
                    const Vector b = random_vector(k_, a_.dim, rng_);
                    const Vector c = (s % 2 == 0) ? a_.multiply(x, b) : a_.multiply(b, x);
                    const std::size_t rc = left_rank(a_, c);
                    if (rc > 0 && rc < r) {
                        x = c;
                        r = rc;
                        moved = true;
                    }
                }
                if (!moved) break;
            }
            if (r != *n) continue;
            for (std::size_t i = 0; i < a_.dim; ++i) {
                const Vector xi = a_.basis(i);
                const Vector axa = a_.multiply(a_.multiply(x, xi), x);
                if (is_zero(k_, axa)) continue;
                std::size_t p = 0;
                while (k_.is_zero(x[p])) ++p;
                const Elem lambda = k_.div(axa[p], x[p]);
                if (!equal(k_, axa, scale(k_, lambda, x))) continue;
                if (offer(scale(k_, k_.inv(lambda), a_.multiply(xi, x)), "rank-descent")) return true;
            }
        }
        return false;
    }

    bool enumerate() {
        const std::size_t d = a_.dim;
        std::uint64_t base = k_.is_finite() ? k_.order() : 3;
        std::uint64_t total = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < d; ++i) {
            if (total > opts_.budget / base + 1) {
                overflow = true;
                break;
            }
            total *= base;
        }
        out.region = k_.is_finite() ? k_.describe() + "^" + std::to_string(d) : "{-1,0,1}^" + std::to_string(d);
        const std::uint64_t limit = overflow ? opts_.budget : std::min<std::uint64_t>(total, opts_.budget);
        for (std::uint64_t idx = 0; idx < limit; ++idx) {
            Vector e(d);
            std::uint64_t c = idx;
            for (std::size_t i = 0; i < d; ++i) {
                const std::uint64_t digit = c % base;
                c /= base;
                e[i] = k_.is_finite() ? k_.element(digit) : k_.from_int(static_cast<long long>(digit) - 1);
            }
            ++out.examined;
            if (!is_idempotent_elem(a_, e)) continue;
            --out.examined;
            if (offer(e, "enumeration")) return true;
        }
        out.box_exhausted = !overflow && limit == total;
        return false;
    }

    bool pull_back() {
        if (!opts_.known_iso) return false;
        const Matrix& phi = *opts_.known_iso;
        if (!is_algebra_homomorphism(a_, Algebra::matrix(a_.field, square_root(phi.rows()).value_or(0)), phi)) return false;
        const auto inv = inverse(k_, phi);
        if (!inv) return false;
        return offer(apply(k_, *inv, unit_vector(k_, phi.rows(), 0)), "pull-back");
    }

    Trivialization out;

private:
    const Algebra& a_;
    const Field& k_;
    const TrivializeOptions& opts_;
    std::mt19937_64 rng_;
};

} // namespace

Matrix sandwich_map(const Algebra& a) {
    a.require_valid();
    const Field& k = *a.field;
    const std::size_t d = a.dim;
    Matrix s = Matrix::zero(k, d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector xj = a.multiply(a.basis(x), a.basis(j));
            for (std::size_t y = 0; y < d; ++y) {
                const Vector v = a.multiply(xj, a.basis(y));
                for (std::size_t i = 0; i < d; ++i) s(i * d + j, x * d + y) = v[i];
            }
        }
    return s;
}

AzumayaCertificate azumaya_certificate(const Algebra& a) {
    AzumayaCertificate c;
    c.expected = a.dim * a.dim;
    c.rank = rank(*a.field, sandwich_map(a));
    c.azumaya = a.dim > 0 && c.rank == c.expected;
    return c;
}

bool is_azumaya(const Algebra& a) {
    if (!a.field || !a.validate().empty()) return false;
    return azumaya_certificate(a).azumaya;
}

BrauerElement::BrauerElement(Algebra representative) : rep_(std::move(representative)) {
    cert_ = azumaya_certificate(rep_);
    if (!cert_.azumaya) throw Error(ErrorCode::not_azumaya, "sandwich map has rank " + std::to_string(cert_.rank));
}

Algebra brauer_mul(const Algebra& a, const Algebra& b) {
    require_same_field(a.field, b.field, "brauer_mul");
    if (!is_azumaya(a) || !is_azumaya(b)) throw Error(ErrorCode::not_azumaya, "brauer_mul needs Azumaya factors");
    Algebra t = tensor(a, b);
    if (!is_azumaya(t)) throw Error(ErrorCode::not_azumaya, "tensor product failed re-certification");
    return t;
}

Algebra brauer_inv(const Algebra& a) {
    if (!is_azumaya(a)) throw Error(ErrorCode::not_azumaya, "brauer_inv needs an Azumaya algebra");
    Algebra o = a.opposite();
    if (!is_azumaya(o)) throw Error(ErrorCode::not_azumaya, "opposite failed re-certification");
    return o;
}

Trivialization morita_trivialize(const Algebra& a, const TrivializeOptions& opts) {
    a.require_valid();
    Search s(a, opts);
    if (s.pull_back() || s.low_support() || s.rank_descent() || s.enumerate()) return s.out;
    return s.out;
}

bool verify_trivialization(const Algebra& a, const Vector& e) {
    if (e.size() != a.dim || !is_idempotent_elem(a, e) || corner_dim(a, e) != 1) return false;
    const CategoryPtr c = algebra_as_category(a, "*");
    SatView view(c);
    const std::vector<SatObject> images{SatObject{{0}, e}};
    const GenerationReport g = additively_generates(images, view);
    return g.holds && verify_generation_witness(view, images, 0, g.witnesses[0]);
}

Trivialization same_brauer_class(const Algebra& a, const Algebra& b, const TrivializeOptions& opts) {
    require_same_field(a.field, b.field, "same_brauer_class");
    if (!is_azumaya(a) || !is_azumaya(b)) throw Error(ErrorCode::not_azumaya, "same_brauer_class needs Azumaya algebras");
    const Algebra t = tensor(a, b.opposite());
    TrivializeOptions o = opts;
    // A ⊗ A^op ≅ End_K(A) through the sandwich map.
    if (!o.known_iso && same_algebra(a, b)) o.known_iso = sandwich_map(a);
    return morita_trivialize(t, o);
}

HoMap corner_homap(const Algebra& a, const Vector& e) {
    const CategoryPtr k = unit_category(a.field);
    auto view = std::make_shared<const SatView>(algebra_as_category(a, "*"));
    ViewFunctor f{k, view, {SatObject{{0}, e}}, {Matrix::from_columns(*a.field, a.dim, {e})}};
    f.validate();
    return HoMap{std::move(f)};
}

} // namespace moritakit
