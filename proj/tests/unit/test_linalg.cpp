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

using namespace moritakit;
using namespace testutil;

TEST_CASE("rank plus nullity equals width") {
    std::mt19937_64 rng(3);
    for (auto f : {Field::rationals(), Field::prime(2), Field::galois_field(3, 2)}) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix m = random_matrix(*f, r, c, rng);
            if (t % 3 == 0 && r > 1) m.set_row(r - 1, m.row(0));
            const Matrix ker = kernel(*f, m);
            CHECK(rank(*f, m) + ker.cols() == c);
            for (std::size_t j = 0; j < ker.cols(); ++j) CHECK(is_zero(*f, apply(*f, m, ker.column(j))));
        }
    }
}

TEST_CASE("solve and inverse agree with multiplication") {
    std::mt19937_64 rng(5);
    auto f = Field::rationals();
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const Matrix a = random_invertible_matrix(*f, n, rng);
        const auto ai = inverse(*f, a);
        REQUIRE(ai);
        CHECK(equal(*f, multiply(*f, a, *ai), Matrix::identity(*f, n)));
        const Vector b = random_vec(*f, n, rng);
        const auto x = solve(*f, a, b);
        REQUIRE(x);
        CHECK(equal(*f, apply(*f, a, *x), b));
    }
    const Matrix singular = int_matrix(*f, 2, 2, {1, 2, 2, 4});
    CHECK_FALSE(inverse(*f, singular));
    CHECK_FALSE(solve(*f, singular, ints(*f, {1, 0})));
}

TEST_CASE("subspace coordinates and quotient lifts") {
    auto f = Field::prime(3);
    const Matrix span = int_matrix(*f, 3, 3, {1, 2, 0, 0, 0, 1, 1, 2, 0});
    const Subspace s = Subspace::span(*f, span);
    CHECK(s.dim() == 2);
    const Vector v = ints(*f, {2, 1, 2});
    const auto c = s.coordinates(*f, v);
    REQUIRE(c);
    CHECK(equal(*f, s.embed(*f, *c), v));
    CHECK_FALSE(s.contains(*f, ints(*f, {1, 0, 0})));

    const Quotient q(*f, 3, int_matrix(*f, 1, 3, {1, 1, 0}));
    CHECK(q.dim() == 2);
    const Vector a = ints(*f, {1, 0, 2}), b = ints(*f, {0, 2, 2});  // a - b = (1,1,0)
    CHECK(equal(*f, q.project(*f, a), q.project(*f, b)));
    CHECK(equal(*f, q.project(*f, q.lift(*f, q.project(*f, a))), q.project(*f, a)));
}

TEST_CASE("intertwiners of a matrix with itself contain its polynomials") {
    auto f = Field::prime(5);
    const Matrix a = int_matrix(*f, 2, 2, {0, 1, 0, 0});
    const Matrix basis = intertwiners(*f, 2, 2, {{a, a}});
    CHECK(basis.cols() == 2);  // the centralizer of a nilpotent Jordan block
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        const Matrix x = unflatten(*f, 2, 2, basis.column(j));
        CHECK(equal(*f, multiply(*f, x, a), multiply(*f, a, x)));
        CHECK(equal(*f, flatten(x), basis.column(j)));
    }
}
