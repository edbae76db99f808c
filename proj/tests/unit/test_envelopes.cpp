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
#include "moritakit/acceptance/sampling.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/envelopes.hpp"
#include "moritakit/morita.hpp"

using namespace moritakit;
using namespace testutil;

TEST_CASE("additive hull of K: End(x+x) is M_2(K)") {
    auto k = Field::prime(3);
    auto h = additive_hull(unit_category(k), 2);
    CHECK(h->validate().empty());
    REQUIRE(h->size() == 3);
    CHECK(h->object(0) == "*");
    CHECK(h->object(1) == "*+*");
    CHECK(h->object(2) == "()");
    CHECK(h->hom_dim(1, 1) == 4);
    CHECK(same_algebra(endomorphism_algebra(*h, 1), Algebra::matrix(k, 2)));
    for (std::size_t x = 0; x < 3; ++x) CHECK(h->hom_dim(2, x) == 0);
    CHECK(words_up_to(2, 2).size() == 2 + 4 + 1);
}

TEST_CASE("additive hull of a two-object category") {
    auto k = Field::prime(2);
    auto i = free_kcategory(k, Presentation::iso_interval());
    auto h = additive_hull(i, 2);
    CHECK(h->validate().empty());
    CHECK(h->hom_dim(h->index("0+1"), h->index("0")) == 2);
    CHECK(h->hom_dim(h->index("0+1"), h->index("1+0")) == 4);
}

TEST_CASE("functor_plus preserves identities and composition") {
    auto k = Field::prime(2);
    auto unit = unit_category(k);
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    KFunctor f = KFunctor::blank(unit, m2, {0});
    f.hom(0, 0) = Matrix::from_columns(*k, 4, {m2->identity(0)});
    const KFunctor fp = functor_plus(f, 2);
    CHECK(fp.validate().empty());
    CHECK(fp.hom(1, 1).rows() == 16);
    CHECK(fp.hom(1, 1).cols() == 4);
    CHECK(same_functor(functor_plus(KFunctor::identity(m2), 2), KFunctor::identity(fp.tgt)));
    const KFunctor g = KFunctor::identity(m2);
    CHECK(same_functor(functor_plus(compose(g, f), 2), compose(functor_plus(g, 2), fp)));
}

TEST_CASE("karoubi envelopes split the listed idempotents") {
    auto k = Field::prime(2);
    auto e1 = generator_category(GeneratorKind::e1, k);
    auto kar = karoubi(e1, {{"o", unit_vector(*k, 2, 1)}});
    CHECK(kar->validate().empty());
    CHECK(kar->hom_dim(kar->index("o.e0"), kar->index("o.e0")) == 1);

    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    auto km = karoubi(m2, {{"*", unit_vector(*k, 4, 0)}});
    const std::size_t e = km->index("*.e0"), one = km->index("*");
    CHECK(km->hom_dim(e, e) == 1);
    CHECK(km->hom_dim(e, one) == 2);
    CHECK(km->hom_dim(one, e) == 2);

    auto plain = karoubi(m2, {});
    CHECK(plain->same_presentation(*m2));
    CHECK(thrown_code([&] { karoubi(m2, {{"*", ints(*k, {0, 1, 0, 0})}}); }) == ErrorCode::not_idempotent);
}

TEST_CASE("saturation homs are corners of matrix spaces") {
    auto k = Field::prime(3);
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    SatView v(m2);
    const SatObject e11{{0}, ints(*k, {1, 0, 0, 0})}, e22{{0}, ints(*k, {0, 0, 0, 1})};
    CHECK(v.hom_dim(e11, e22) == 1);
    CHECK(v.contains(e11, e22, unit_vector(*k, 4, 2)));  // e21
    CHECK_FALSE(v.contains(e11, e22, unit_vector(*k, 4, 1)));
    CHECK(v.hom_dim(e11, e11) == 1);
    CHECK(v.hom_dim(v.object(0), v.object(0)) == 4);
    CHECK(v.hom_dim(v.zero_object(), v.object(0)) == 0);
    CHECK(thrown_code([&] { v.require_object(SatObject{{0}, ints(*k, {1, 1, 1, 1})}); }) == ErrorCode::not_idempotent);
}

TEST_CASE("direct sums satisfy the biproduct identities") {
    auto k = Field::prime(2);
    auto e1 = generator_category(GeneratorKind::e1, k);
    SatView v(e1);
    const SatObject x = v.object(0);
    const auto ds = v.direct_sum({x, x});
    CHECK(ds.object.word == Word{0, 0});
    const Word w = ds.object.word;
    Vector total = v.ambient_zero(w, w);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Vector pi = v.ambient_compose(x.word, w, x.word, ds.projections[i], ds.injections[j]);
            CHECK(equal(*k, pi, i == j ? x.idem : v.ambient_zero(x.word, x.word)));
        }
        total = add(*k, total, v.ambient_compose(w, x.word, w, ds.injections[i], ds.projections[i]));
    }
    CHECK(equal(*k, total, ds.object.idem));
}

TEST_CASE("splitting an idempotent") {
    auto k = Field::prime(2);
    auto e1 = generator_category(GeneratorKind::e1, k);
    SatView v(e1);
    const SatObject x = v.object(0);
    const Vector e = unit_vector(*k, 2, 1);
    const auto s = v.split(x, e);
    CHECK(v.hom_dim(s.object, s.object) == 1);
    const Vector pi = v.ambient_compose(x.word, x.word, x.word, s.projection, s.inclusion);
    CHECK(equal(*k, pi, s.object.idem));
    CHECK(equal(*k, v.ambient_compose(x.word, x.word, x.word, s.inclusion, s.projection), e));
}

TEST_CASE("extension of a corner functor to the saturation") {
    auto k = Field::prime(2);
    auto unit = unit_category(k);
    auto view = std::make_shared<const SatView>(algebra_as_category(Algebra::matrix(k, 2)));
    ViewFunctor g{unit, view, {SatObject{{0}, ints(*k, {1, 0, 0, 0})}}, {}};
    g.homs = {Matrix::from_columns(*k, 4, {ints(*k, {1, 0, 0, 0})})};
    REQUIRE(g.validate().empty());
    const SaturatedExtension ext(g);
    SatView kv(unit);
    const SatObject xx = kv.plus({0, 0});
    const SatObject image = ext.map_object(xx);
    CHECK(image.word.size() == 2);
    CHECK(view->hom_dim(image, image) == 4);
    CHECK(equal(*k, ext.map_morphism(xx.word, xx.word, xx.idem), image.idem));
}

TEST_CASE("inclusions into saturations are fully faithful") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 12; ++t) {
        auto c = acceptance::random_category(t % 2 ? Field::prime(2) : Field::prime(3), 3, 3, rng);
        const ViewFunctor i = inclusion(c);
        CHECK(i.validate().empty());
        CHECK(is_fully_faithful(i).holds);
    }
}

TEST_CASE("saturation composition is associative on sampled triples") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 12; ++t) {
        const FieldPtr k = t % 2 ? Field::prime(2) : Field::prime(3);
        auto c = acceptance::random_category(k, 3, 3, rng);
        SatView v(c);
        auto objs = acceptance::random_images(*c, rng, 3);
        objs.push_back(v.plus({0, 0}));
        for (int s = 0; s < 10; ++s) {
            const SatObject& a = objs[rng() % objs.size()];
            const SatObject& b = objs[rng() % objs.size()];
            const SatObject& cc = objs[rng() % objs.size()];
            const SatObject& d = objs[rng() % objs.size()];
            const Vector f = acceptance::random_vector(*k, v.hom_dim(a, b), rng);
            const Vector g = acceptance::random_vector(*k, v.hom_dim(b, cc), rng);
            const Vector h = acceptance::random_vector(*k, v.hom_dim(cc, d), rng);
            const Vector lhs = v.compose(a, cc, d, h, v.compose(a, b, cc, g, f));
            const Vector rhs = v.compose(a, b, d, v.compose(b, cc, d, h, g), f);
            CHECK(equal(*k, lhs, rhs));
            CHECK(equal(*k, v.compose(a, b, b, v.identity(b), f), f));
        }
    }
}
