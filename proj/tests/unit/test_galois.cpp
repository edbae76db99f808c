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
#include "moritakit/azumaya.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/galois.hpp"

using namespace moritakit;
using namespace testutil;

TEST_CASE("L-modules: twists, sums and tensors") {
    auto e = finite_extension(2, 2);
    const LModule v = LModule::standard(e, 2);
    CHECK(v.validate().empty());
    CHECK(v.k_dim() == 4);
    CHECK(twist(v, 1).validate().empty());
    CHECK(direct_sum(v, LModule::standard(e, 1)).dim == 3);
    const LTensor t = tensor_l(v, LModule::standard(e, 3));
    CHECK(t.module.validate().empty());
    CHECK(t.module.dim == 6);
    CHECK(t.quotient.dim() == 12);
}

TEST_CASE("Speiser descent for natural and random Galois modules") {
    std::mt19937_64 rng(59);
    for (auto e : {finite_extension(2, 2), finite_extension(3, 2), finite_extension(2, 3), quadratic_extension(-1)}) {
        for (std::size_t m = 1; m <= 2; ++m) {
            for (bool natural : {true, false}) {
                if (!natural && !e->base()->is_finite()) continue;
                const GaloisModule w = natural ? GaloisModule::natural(e, m) : GaloisModule::random(e, m, rng);
                REQUIRE(w.validate().empty());
                const Matrix fixed = fixed_points(w);
                CHECK(fixed.cols() == m);
                const Matrix eps = counit(w, fixed);
                CHECK(is_invertible(*e->base(), eps));
                CHECK(counit_is_equivariant(w, fixed, eps));
            }
        }
    }
}

TEST_CASE("corestriction of modules has dimension m^|G|") {
    auto e = finite_extension(2, 2);
    const CorModule l = cor_module(LModule::standard(e, 1));
    CHECK(l.dim() == 1);
    CHECK(cor_module(LModule::standard(e, 3)).dim() == 9);
    CHECK(cor_module(LModule::standard(e, 0)).dim() == 0);
    CHECK(cor_module(LModule::standard(finite_extension(2, 3), 2)).dim() == 8);
    CHECK(cor_module(LModule::standard(quadratic_extension(2), 2)).dim() == 4);
    // Cor(L) is spanned by the class of 1 ⊗ 1.
    const Field& k = *e->base();
    const Vector one = unit_vector(k, 4, 0);
    REQUIRE(l.coordinates(one).size() == 1);
    CHECK_FALSE(is_zero(k, l.coordinates(one)));
}

TEST_CASE("the monoidal comparison is bijective") {
    auto e = finite_extension(2, 2);
    const CorMonoidal unit = cor_monoidal(LModule::standard(e, 1), LModule::standard(e, 1));
    CHECK(unit.bijective);
    REQUIRE(unit.map.rows() == 1);
    CHECK(e->base()->is_one(unit.map(0, 0)));
    const CorMonoidal m = cor_monoidal(LModule::standard(e, 2), LModule::standard(e, 3));
    CHECK(m.map.rows() == 36);
    CHECK(m.map.cols() == 36);
    CHECK(m.bijective);
    CHECK(cor_monoidal(LModule::standard(quadratic_extension(-1), 2), LModule::standard(quadratic_extension(-1), 1)).bijective);
}

TEST_CASE("the dimension isomorphism") {
    auto e = finite_extension(2, 2);
    const CorDimensionIso one = cor_dimension_iso(LModule::standard(e, 1), 1);
    CHECK(one.bijective);
    CHECK(one.copies == 1);
    const CorDimensionIso two = cor_dimension_iso(LModule::standard(e, 1), 2);
    CHECK(two.copies == 4);
    CHECK(two.map.rows() == 4);
    CHECK(two.bijective);
    const CorDimensionIso three = cor_dimension_iso(LModule::standard(finite_extension(2, 3), 1), 2);
    CHECK(three.copies == 8);
    CHECK(three.bijective);
}

TEST_CASE("corestriction of algebras") {
    auto e = finite_extension(2, 2);
    auto l = e->field();
    const Algebra cl = cor_algebra(Algebra::ground(l), e);
    CHECK(cl.dim == 1);
    CHECK(same_algebra(cl, Algebra::ground(e->base())));
    const Algebra cm = cor_algebra(Algebra::matrix(l, 2), e);
    CHECK(cm.dim == 16);
    CHECK(cm.validate().empty());
    CHECK(is_azumaya(cm));
    const Algebra dual = cor_algebra(Algebra::polynomial_quotient(l, ints(*l, {0, 0, 1})), e);
    CHECK(dual.dim == 4);
    CHECK_FALSE(is_azumaya(dual));
    CHECK(restrict_scalars(Algebra::matrix(l, 2), *e).dim == 8);
    CHECK(thrown_code([&] { cor_algebra(Algebra::matrix(Field::prime(2), 2), e); }) == ErrorCode::extension_mismatch);
}

TEST_CASE("corestriction of bimodules") {
    auto e = finite_extension(2, 2);
    auto l = e->field();
    const Algebra s = Algebra::matrix(l, 2);
    const Algebra cs = cor_algebra(s, e);
    CHECK(bimodule_iso(cor_bimodule(Bimodule::regular(s), e), Bimodule::regular(cs)).verdict == Verdict::yes);
    const Algebra lg = Algebra::ground(l);
    CHECK(bimodule_iso(cor_bimodule(Bimodule::free(lg, 2), e), Bimodule::free(cor_algebra(lg, e), 4)).verdict == Verdict::yes);
    const Algebra p = Algebra::polynomial_quotient(l, ints(*l, {0, 0, 1}));
    CHECK(bimodule_iso(cor_bimodule(Bimodule::free(p, 2), e), Bimodule::free(cor_algebra(p, e), 4)).verdict == Verdict::yes);
}

TEST_CASE("corestriction is compatible with tensor products over S") {
    auto e = finite_extension(2, 2);
    auto l = e->field();
    const Algebra s = Algebra::matrix(l, 2);
    const Vector e11 = ints(*l, {1, 0, 0, 0});
    const TensorCompatibility a = cor_tensor_compatibility(Bimodule::row_ideal(s, e11), Bimodule::column_ideal(s, e11), e);
    CHECK(a.holds());
    const TensorCompatibility b = cor_tensor_compatibility(Bimodule::column_ideal(s, e11), Bimodule::row_ideal(s, e11), e);
    CHECK(b.holds());
}

TEST_CASE("corestriction of categories") {
    auto e = finite_extension(2, 2);
    auto l = e->field();
    auto cl = cor_category(*unit_category(l), e);
    REQUIRE(cl->size() == 1);
    CHECK(cl->hom_dim(0, 0) == 1);
    CHECK(same_field(cl->field_ptr(), e->base()));
    auto i = free_kcategory(l, Presentation::iso_interval());
    auto ci = cor_category(*i, e);
    CHECK(ci->validate().empty());
    REQUIRE(ci->size() == 2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) CHECK(ci->hom_dim(x, y) == 1);
    const Algebra s = Algebra::matrix(l, 2);
    CHECK(same_algebra(endomorphism_algebra(*cor_category(*algebra_as_category(s), e), 0), cor_algebra(s, e)));
}
