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

#include "helpers.hpp"
#include "moritakit/acceptance/oracles.hpp"
#include "moritakit/acceptance/sampling.hpp"
#include "moritakit/azumaya.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/galois.hpp"

using namespace moritakit;
using namespace testutil;

TEST_CASE("sandwich map of K is the 1x1 identity") {
    auto q = Field::rationals();
    const Matrix s = sandwich_map(Algebra::ground(q));
    REQUIRE(s.rows() == 1);
    REQUIRE(s.cols() == 1);
    CHECK(q->is_one(s(0, 0)));
    CHECK(is_azumaya(Algebra::ground(q)));
}

TEST_CASE("Azumaya decisions on standard algebras") {
    auto q = Field::rationals();
    auto f3 = Field::prime(3);
    CHECK(is_azumaya(Algebra::matrix(q, 3)));
    CHECK(is_azumaya(Algebra::matrix(f3, 2)));
    CHECK(is_azumaya(Algebra::quaternion(q, q->from_int(-1), q->from_int(-1))));
    CHECK_FALSE(is_azumaya(Algebra::split(Field::prime(2), 2)));
    CHECK_FALSE(is_azumaya(Algebra::field_over_base(Field::galois_field(2, 2))));
    CHECK_FALSE(is_azumaya(Algebra::polynomial_quotient(f3, ints(*f3, {0, 0, 1}))));
    const AzumayaCertificate c = azumaya_certificate(Algebra::split(Field::prime(2), 2));
    CHECK(c.expected == 4);
    CHECK(c.rank < 4);
}

TEST_CASE("the sandwich map is an algebra map into End_K(A)") {
    std::mt19937_64 rng(47);
    auto k = Field::prime(3);
    const std::vector<Algebra> algebras = {Algebra::matrix(k, 2), Algebra::split(k, 3),
                                           Algebra::polynomial_quotient(k, ints(*k, {0, 0, 1})),
                                           Algebra::quaternion(k, k->from_int(-1), k->from_int(-1))};
    for (const Algebra& a0 : algebras) {
        const Algebra a = change_basis(a0, random_invertible_matrix(*k, a0.dim, rng));
        REQUIRE(a.validate().empty());
        const Algebra aao = tensor(a, a.opposite());
        CHECK(is_algebra_homomorphism(aao, Algebra::matrix(k, a.dim), sandwich_map(a)));
        CHECK(rank(*k, sandwich_map(a)) == acceptance::sandwich_rank_oracle(a));
        CHECK(is_azumaya(a) == is_azumaya(a0));
        CHECK(is_azumaya(a.opposite()) == is_azumaya(a));
    }
}

TEST_CASE("Brauer multiplication") {
    auto q = Field::rationals();
    const Algebra h = Algebra::quaternion(q, q->from_int(-1), q->from_int(-1));
    const Algebra hk = brauer_mul(h, Algebra::ground(q));
    CHECK(hk.dim == 4);
    CHECK(is_azumaya(hk));
    const Algebra hh = brauer_mul(h, h);
    CHECK(hh.dim == 16);
    CHECK(is_azumaya(hh));
    CHECK(same_algebra(brauer_inv(h), h.opposite()));
    CHECK(thrown_code([&] { brauer_mul(h, Algebra::split(q, 2)); }) == ErrorCode::not_azumaya);
    CHECK(thrown_code([&] { BrauerElement(Algebra::split(q, 2)); }) == ErrorCode::not_azumaya);
}

TEST_CASE("trivializations") {
    auto q = Field::rationals();
    const Trivialization kt = morita_trivialize(Algebra::ground(q));
    REQUIRE(kt.verdict == Verdict::yes);
    CHECK(q->is_one((*kt.idempotent)[0]));

    auto f2 = Field::prime(2);
    const Algebra m2 = Algebra::matrix(f2, 2);
    const Trivialization t = morita_trivialize(m2);
    REQUIRE(t.verdict == Verdict::yes);
    CHECK(verify_trivialization(m2, *t.idempotent));
    CHECK_FALSE(verify_trivialization(m2, m2.unit));
    CHECK(ho_is_iso(corner_homap(m2, *t.idempotent)).equivalence);

    const Algebra h = Algebra::quaternion(q, q->from_int(-1), q->from_int(-1));
    TrivializeOptions small;
    small.budget = 2000;
    const Trivialization ht = morita_trivialize(h, small);
    CHECK(ht.verdict == Verdict::inconclusive);
    CHECK_FALSE(ht.idempotent);
}

TEST_CASE("Brauer classes") {
    auto f3 = Field::prime(3);
    const Algebra m2 = Algebra::matrix(f3, 2);
    CHECK(same_brauer_class(m2, Algebra::ground(f3)).verdict == Verdict::yes);
    CHECK(same_brauer_class(m2, m2).verdict == Verdict::yes);
    auto q = Field::rationals();
    const Algebra h = Algebra::quaternion(q, q->from_int(-1), q->from_int(-1));
    TrivializeOptions small;
    small.budget = 2000;
    CHECK(same_brauer_class(h, Algebra::ground(q), small).verdict == Verdict::inconclusive);
    CHECK(same_brauer_class(h, h).verdict == Verdict::yes);
}

TEST_CASE("finite-field Azumaya algebras trivialize") {
    std::mt19937_64 rng(53);
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);
    std::vector<Algebra> algebras = {Algebra::matrix(f3, 2), tensor(Algebra::matrix(f2, 2), Algebra::matrix(f2, 2)),
                                     cor_algebra(Algebra::matrix(Field::galois_field(2, 2), 2), finite_extension(2, 2))};
    for (int t = 0; t < 4; ++t) algebras.push_back(change_basis(Algebra::matrix(f3, 2), random_invertible_matrix(*f3, 4, rng)));
    for (const Algebra& a : algebras) {
        REQUIRE(is_azumaya(a));
        const Trivialization tr = morita_trivialize(a);
        REQUIRE(tr.verdict == Verdict::yes);
        CHECK(verify_trivialization(a, *tr.idempotent));
        CHECK(ho_is_iso(corner_homap(a, *tr.idempotent)).equivalence);
    }
}
