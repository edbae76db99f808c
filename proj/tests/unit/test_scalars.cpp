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

#include <random>
#include <vector>

#include "helpers.hpp"

using namespace moritakit;
using namespace testutil;

TEST_CASE("GF(2): one plus one is zero") {
    auto f = Field::prime(2);
    CHECK(f->is_zero(f->add(f->one(), f->one())));
    Scalar one(f, f->one());
    CHECK((one + one) == Scalar(f, f->zero()));
}

TEST_CASE("Q: (2/3)(3/4) = 1/2") {
    auto q = Field::rationals();
    Scalar a(q, q->from_rational(Rational(2, 3)));
    Scalar b(q, q->from_rational(Rational(3, 4)));
    CHECK((a * b) == Scalar(q, q->from_rational(Rational(1, 2))));
    CHECK((a / a) == Scalar(q, q->one()));
}

TEST_CASE("GF(4): t*t = t+1 and Frobenius moves t to t+1") {
    auto e = GaloisExtension::finite(2, 2);
    const Field& l = *e.field();
    const Field& b = *l.base();
    const Elem t = l.from_coordinates({b.zero(), b.one()});
    const Elem t1 = l.add(t, l.one());
    CHECK(l.equal(l.mul(t, t), t1));
    CHECK(l.equal(e.apply(e.frobenius(), t), t1));
    CHECK(l.equal(e.apply(e.identity(), t), t));
    CHECK(e.order() == 2);
}

TEST_CASE("Q(i): conjugation sends i to -i") {
    auto e = GaloisExtension::quadratic(-1);
    const Field& l = *e.field();
    const Field& b = *l.base();
    const Elem i = l.from_coordinates({b.zero(), b.one()});
    CHECK(l.equal(l.mul(i, i), l.from_int(-1)));
    CHECK(l.equal(e.apply(1, i), l.neg(i)));
    CHECK(e.compose(1, 1) == e.identity());
}

TEST_CASE("scalar errors carry their codes") {
    auto q = Field::rationals();
    CHECK(thrown_code([&] { q->inv(q->zero()); }) == ErrorCode::division_by_zero);
    auto f4 = Field::galois_field(2, 2);
    CHECK(thrown_code([&] { f4->inv(f4->zero()); }) == ErrorCode::division_by_zero);
    CHECK(thrown_code([&] { Scalar(Field::prime(2), Field::prime(2)->one()) + Scalar(Field::prime(3), Field::prime(3)->one()); }) ==
          ErrorCode::ring_mismatch);
    CHECK(thrown_code([&] { Field::prime(4); }) == ErrorCode::invalid_presentation);
    // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK(thrown_code([&] { Field::galois_field(2, 2, {1, 0, 1}); }) == ErrorCode::invalid_presentation);
    CHECK(thrown_code([&] { GaloisExtension::quadratic(4); }) == ErrorCode::invalid_presentation);
    CHECK(thrown_code([&] { f4->element(4); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(7);
    std::vector<FieldPtr> fields = {Field::rationals(),         Field::prime(2),
                                    Field::prime(7),            Field::galois_field(2, 2),
                                    Field::galois_field(3, 2),  Field::galois_field(2, 3),
                                    GaloisExtension::quadratic(-1).field(), GaloisExtension::quadratic(2).field()};
    for (const auto& fp : fields) {
        const Field& f = *fp;
        CAPTURE(f.describe());
        for (int trial = 0; trial < 60; ++trial) {
            const Elem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
            REQUIRE(f.contains(a));
            CHECK(f.equal(f.add(a, b), f.add(b, a)));
            CHECK(f.equal(f.mul(a, b), f.mul(b, a)));
            CHECK(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
            CHECK(f.equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
            CHECK(f.equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
            CHECK(f.is_zero(f.add(a, f.neg(a))));
            CHECK(f.equal(f.mul(a, f.one()), a));
            if (!f.is_zero(a)) CHECK(f.is_one(f.mul(a, f.inv(a))));
        }
    }
}

TEST_CASE("finite field enumeration round-trips") {
    for (auto f : {Field::prime(5), Field::galois_field(3, 2), Field::galois_field(2, 4)}) {
        for (std::uint64_t i = 0; i < f->order(); ++i) CHECK(f->index_of(f->element(i)) == i);
        CHECK(f->characteristic() == (f->order() % 2 == 0 ? 2u : f->order() % 3 == 0 ? 3u : 5u));
    }
}

TEST_CASE("Galois groups of finite fields are cyclic on Frobenius with fixed field K") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        auto e = GaloisExtension::finite(p, n);
        CHECK(e.order() == n);
        std::size_t s = e.identity();
        std::vector<bool> seen(e.order(), false);
        for (unsigned k = 0; k < n; ++k) {
            CHECK_FALSE(seen[s]);
            seen[s] = true;
            s = e.compose(e.frobenius(), s);
        }
        CHECK(s == e.identity());
        std::vector<std::size_t> all(e.order());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        CHECK(e.fixed_field(all).cols() == 1);
        CHECK(e.fixed_field({e.identity()}).cols() == n);
        for (std::size_t g = 0; g < e.order(); ++g) CHECK(e.compose(g, e.inverse(g)) == e.identity());
    }
}

TEST_CASE("automorphisms are multiplicative and fix the base") {
    std::mt19937_64 rng(11);
    for (auto e : {GaloisExtension::finite(3, 3), GaloisExtension::quadratic(5)}) {
        const Field& l = *e.field();
        for (std::size_t g = 0; g < e.order(); ++g)
            for (int t = 0; t < 20; ++t) {
                const Elem x = random_elem(l, rng), y = random_elem(l, rng);
                CHECK(l.equal(e.apply(g, l.mul(x, y)), l.mul(e.apply(g, x), e.apply(g, y))));
                const Elem k = l.embed(random_elem(*l.base(), rng));
                CHECK(l.equal(e.apply(g, k), k));
            }
    }
}
