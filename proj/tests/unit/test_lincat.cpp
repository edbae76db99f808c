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
#include "moritakit/envelopes.hpp"
#include "moritakit/lincat.hpp"
#include "moritakit/morita.hpp"

using namespace moritakit;
using namespace testutil;

namespace {

/// x -> u x u⁻¹ on the one-object category of M_n.
KFunctor conjugation(const CategoryPtr& a, const Algebra& alg, const Vector& u, const Vector& u_inv) {
    KFunctor f = KFunctor::blank(a, a, {0});
    f.hom(0, 0) = multiply(*alg.field, alg.left_multiplication(u), alg.right_multiplication(u_inv));
    return f;
}

/// K -> c picking object o, 1 -> 1_o.
KFunctor pick(const CategoryPtr& k, const CategoryPtr& c, std::size_t o) {
    KFunctor f = KFunctor::blank(k, c, {o});
    f.hom(0, 0) = Matrix::from_columns(c->field(), c->hom_dim(o, o), {c->identity(o)});
    return f;
}

} // namespace

TEST_CASE("validation accepts M_2(GF(3)) and reports a broken unit law") {
    auto k = Field::prime(3);
    const Algebra m2 = Algebra::matrix(k, 2);
    auto c = algebra_as_category(m2);
    CHECK(c->validate().empty());
    KCategory broken = *c;
    broken.set_identity(0, unit_vector(*k, 4, 0));  // e11 only
    CHECK_FALSE(broken.validate().empty());
    CHECK(thrown_code([&] { broken.require_valid(); }) == ErrorCode::invalid_category);
}

TEST_CASE("algebras as categories have End equal to the algebra") {
    auto q = Field::rationals();
    CHECK(unit_category(q)->hom_dim(0, 0) == 1);
    CHECK(algebra_as_category(Algebra::matrix(q, 2))->hom_dim(0, 0) == 4);
    auto f4 = Field::galois_field(2, 2);
    CHECK(algebra_as_category(Algebra::field_over_base(f4))->hom_dim(0, 0) == 2);
    const Algebra h = Algebra::quaternion(q, q->from_int(-1), q->from_int(-1));
    CHECK(same_algebra(endomorphism_algebra(*algebra_as_category(h), 0), h));
}

TEST_CASE("free K-categories on small presentations") {
    auto k = Field::prime(2);
    auto b = free_kcategory(k, Presentation::bullet());
    CHECK(b->size() == 1);
    CHECK(b->hom_dim(0, 0) == 1);
    auto p = free_kcategory(k, Presentation::parallel_pair());
    CHECK(p->validate().empty());
    CHECK(p->hom_dim(0, 1) == 2);
    CHECK(p->hom_dim(1, 0) == 0);
    auto i = free_kcategory(k, Presentation::iso_interval());
    CHECK(i->validate().empty());
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) CHECK(i->hom_dim(x, y) == 1);
    const Vector u = unit_vector(*k, 1, 0);
    CHECK(equal(*k, i->compose(1, 0, 1, u, u), i->identity(1)));
    Presentation bad = Presentation::one_arrow();
    bad.composition.clear();
    CHECK(thrown_code([&] { free_kcategory(k, bad); }) == ErrorCode::invalid_presentation);
}

TEST_CASE("tensor products multiply dimensions") {
    auto k = Field::prime(3);
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    auto mm = tensor_product(*m2, *m2);
    CHECK(mm->validate().empty());
    CHECK(mm->hom_dim(0, 0) == 16);
    auto i = free_kcategory(k, Presentation::iso_interval());
    auto ii = tensor_product(*i, *i);
    CHECK(ii->size() == 4);
    CHECK(ii->object(1) == "(0,1)");
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) CHECK(ii->hom_dim(x, y) == 1);

    auto km = tensor_product(*unit_category(k), *m2);
    const KFunctor r = unit_relabeling(km, m2);
    CHECK(r.validate().empty());
    CHECK(is_fully_faithful(r).holds);
    auto m2i = tensor_product(*m2, *i);
    auto im2 = tensor_product(*i, *m2);
    const KFunctor s = symmetry_relabeling(*m2, *i, m2i, im2);
    CHECK(s.validate().empty());
    CHECK(is_fully_faithful(s).holds);
    CHECK(thrown_code([&] { tensor_product(*m2, *unit_category(Field::prime(2))); }) == ErrorCode::ring_mismatch);
}

TEST_CASE("opposite is an involution") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 10; ++t) {
        auto c = acceptance::random_category(Field::prime(t % 2 ? 2 : 3), 3, 3, rng);
        auto op = opposite(*c);
        CHECK(op->validate().empty());
        CHECK(opposite(*op)->same_presentation(*c));
        if (c->size() > 1) CHECK(op->hom_dim(0, 1) == c->hom_dim(1, 0));
    }
}

TEST_CASE("scalar extension keeps dimensions and commutes with tensor") {
    auto e = finite_extension(2, 2);
    auto k = e->base();
    auto e1 = generator_category(GeneratorKind::e1, k);
    auto e1l = scalar_extension(*e1, e->field());
    CHECK(e1l->validate().empty());
    CHECK(e1l->hom_dim(0, 0) == 2);
    CHECK(same_field(e1l->field_ptr(), e->field()));

    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    auto i = free_kcategory(k, Presentation::one_arrow());
    auto lhs = scalar_extension(*tensor_product(*m2, *i), e->field());
    auto rhs = tensor_product(*scalar_extension(*m2, e->field()), *scalar_extension(*i, e->field()));
    CHECK(lhs->same_presentation(*rhs));

    auto qi = quadratic_extension(-1);
    auto mq = scalar_extension(*algebra_as_category(Algebra::matrix(Field::rationals(), 2)), qi->field());
    CHECK(mq->validate().empty());
    CHECK(mq->hom_dim(0, 0) == 4);
}

TEST_CASE("conjugate functors are isomorphic and the iso yields a homotopy") {
    auto k = Field::prime(3);
    const Algebra m2 = Algebra::matrix(k, 2);
    auto a = algebra_as_category(m2);
    const Vector u = ints(*k, {1, 1, 0, 1}), u_inv = ints(*k, {1, -1, 0, 1});
    REQUIRE(equal(*k, m2.multiply(u, u_inv), m2.unit));
    const KFunctor f0 = KFunctor::identity(a);
    const KFunctor f1 = conjugation(a, m2, u, u_inv);
    REQUIRE(f1.validate().empty());
    const IsoTest t = functor_iso_test(f0, f1);
    REQUIRE(t.verdict == Verdict::yes);
    REQUIRE(t.witness);
    CHECK(is_natural_isomorphism(f0, f1, *t.witness));
    CHECK(t.space_dim == 1);

    const CylinderObject c = cylinder_object(a);
    CHECK(c.cylinder->size() == 2);
    const KFunctor h = homotopy_from_iso(c, f0, f1, *t.witness);
    CHECK(h.validate().empty());
    CHECK(is_homotopy(c, h, f0, f1));
    const NaturalTransformation back = iso_from_homotopy(c, h);
    CHECK(equal(*k, back.components[0], t.witness->components[0]));
}

TEST_CASE("idempotents of different rank give non-isomorphic functors") {
    auto k = Field::prime(2);
    const Algebra m2 = Algebra::matrix(k, 2);
    auto kar = karoubi(algebra_as_category(m2), {{"*", unit_vector(*k, 4, 0)}});
    auto unit = unit_category(k);
    const IsoTest t = functor_iso_test(pick(unit, kar, 0), pick(unit, kar, 1));
    CHECK(t.verdict == Verdict::no);
}

TEST_CASE("natural transformation spaces") {
    auto k = Field::prime(3);
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    CHECK(nat_trans_space(KFunctor::identity(m2), KFunctor::identity(m2)).cols() == 1);

    auto unit = unit_category(k);
    // Orthogonal idempotents of K x K: e'·A·e = 0.
    auto split = karoubi(algebra_as_category(Algebra::split(k, 2)), {{"*", ints(*k, {1, 0})}, {"*", ints(*k, {0, 1})}});
    CHECK(nat_trans_space(pick(unit, split, 1), pick(unit, split, 2)).cols() == 0);
    // In M_2, e22·M_2·e11 is spanned by e21.
    auto kar = karoubi(m2, {{"*", ints(*k, {1, 0, 0, 0})}, {"*", ints(*k, {0, 0, 0, 1})}});
    const Matrix s = nat_trans_space(pick(unit, kar, 1), pick(unit, kar, 2));
    CHECK(s.cols() == 1);
    const NaturalTransformation eta = unpack_transformation(pick(unit, kar, 1), pick(unit, kar, 2), s.column(0));
    CHECK(is_natural(pick(unit, kar, 1), pick(unit, kar, 2), eta));
}

TEST_CASE("composition of functors is associative and unital") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const KFunctor f = acceptance::random_functor(Field::prime(2), 3, 2, rng);
        REQUIRE(f.validate().empty());
        CHECK(same_functor(compose(KFunctor::identity(f.tgt), f), f));
        CHECK(same_functor(compose(f, KFunctor::identity(f.src)), f));
        const KFunctor g = KFunctor::identity(f.tgt);
        CHECK(same_functor(compose(compose(g, g), f), compose(g, compose(g, f))));
    }
}
