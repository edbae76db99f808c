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
#include <sstream>

#include "helpers.hpp"
#include "moritakit/acceptance/sampling.hpp"
#include "moritakit/azumaya.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/cli.hpp"
#include "moritakit/io.hpp"

using namespace moritakit;
using namespace testutil;

TEST_CASE("categories round-trip through JSON") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 8; ++t) {
        auto c = acceptance::random_category(t % 2 ? Field::prime(2) : Field::galois_field(2, 2), 3, 3, rng);
        const io::Json j = io::category_to_json(*c);
        auto back = io::category_from_json(j);
        CHECK(back->same_presentation(*c));
        CHECK(io::dump(io::category_to_json(*back)) == io::dump(j));
    }
    auto q = algebra_as_category(Algebra::quaternion(Field::rationals(), Field::rationals()->from_int(-1),
                                                     Field::rationals()->from_int(-3)));
    CHECK(io::category_from_json(io::category_to_json(*q))->same_presentation(*q));
}

TEST_CASE("functors, algebras and bimodules round-trip") {
    std::mt19937_64 rng(67);
    const KFunctor f = acceptance::random_functor(Field::prime(3), 2, 2, rng);
    CHECK(same_functor(io::functor_from_json(io::functor_to_json(f)), f));

    auto l = Field::galois_field(3, 2);
    const Algebra a = Algebra::matrix(l, 2);
    CHECK(same_algebra(io::algebra_from_json(io::algebra_to_json(a)), a));

    const Bimodule m = acceptance::random_projective_bimodule(Field::prime(2), rng);
    const Bimodule back = io::bimodule_from_json(io::bimodule_to_json(m));
    CHECK(back.validate().empty());
    CHECK(bimodule_iso(back, m).verdict == Verdict::yes);
}

TEST_CASE("view functors round-trip") {
    auto k = Field::prime(2);
    auto view = std::make_shared<const SatView>(algebra_as_category(Algebra::matrix(k, 2)));
    ViewFunctor g{unit_category(k), view, {SatObject{{0}, ints(*k, {1, 0, 0, 0})}}, {}};
    g.homs = {Matrix::from_columns(*k, 4, {ints(*k, {1, 0, 0, 0})})};
    const ViewFunctor back = io::view_functor_from_json(io::view_functor_to_json(g));
    CHECK(back.validate().empty());
    CHECK(view_functor_iso_test(back, g).verdict == Verdict::yes);
    CHECK(equal(*k, back.objects[0].idem, g.objects[0].idem));
}

TEST_CASE("rings and extensions") {
    auto e = io::extension_from_json(io::Json::parse(R"({"extension":"GF","p":2,"n":2})"));
    CHECK(e->degree() == 2);
    auto again = io::extension_from_json(io::extension_to_json(*e));
    CHECK(again->same_as(*e));
    auto qi = io::extension_from_json(io::Json::parse(R"({"extension":"Q","d":-1})"));
    CHECK(qi->order() == 2);
    CHECK(io::ring_from_json(io::Json::parse(R"({"ring":"L"})"), e->field()) == e->field());
    CHECK(io::ring_from_json(io::Json::parse(R"({"ring":"Q"})"))->kind() == FieldKind::rationals);
    const io::Json f9 = io::ring_to_json(*Field::galois_field(3, 2));
    CHECK(io::ring_from_json(f9)->same_as(*Field::galois_field(3, 2)));
    CHECK(thrown_code([] { io::ring_from_json(io::Json::parse(R"({"ring":"L"})")); }) == ErrorCode::invalid_input);
    const LModule v = io::lmodule_from_json(e, io::Json::parse(R"({"l_dim":3})"));
    CHECK(v.dim == 3);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK(thrown_code([] { io::category_from_json(io::Json::parse(R"({"ring":{"ring":"Q"},"objects":["x"]})")); }) ==
          ErrorCode::invalid_input);
    // Parsing is structural; the unit law is checked on use.
    const Algebra a = io::algebra_from_json(io::Json::parse(R"({"ring":{"ring":"GF","p":2},"dim":1,"mult":[[[1]]],"unit":[0]})"));
    CHECK_FALSE(a.validate().empty());
    CHECK_FALSE(is_azumaya(a));
    CHECK(thrown_code([&] { azumaya_certificate(a); }) == ErrorCode::invalid_algebra);
    CHECK(thrown_code([] { io::algebra_from_json(io::Json::parse(R"({"ring":{"ring":"GF","p":2},"dim":2,"mult":[],"unit":[1,0]})")); }) ==
          ErrorCode::invalid_input);
}

TEST_CASE("the command line reports usage errors with exit code 2") {
    std::ostringstream out, err;
    CHECK(cli::run({"no-such-verb"}, out, err) == cli::invalid_input);
    CHECK(cli::run({"validate", "/nonexistent/file.json"}, out, err) == cli::invalid_input);
    CHECK(cli::run({"acceptance", "nonsense-suite"}, out, err) == cli::invalid_input);
}
