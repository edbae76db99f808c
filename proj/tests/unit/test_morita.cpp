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
#include "moritakit/morita.hpp"

using namespace moritakit;
using namespace testutil;

namespace {

KFunctor unit_into(const CategoryPtr& a) {
    KFunctor f = KFunctor::blank(unit_category(a->field_ptr()), a, {0});
    f.hom(0, 0) = Matrix::from_columns(a->field(), a->hom_dim(0, 0), {a->identity(0)});
    return f;
}

/// K -> SatView(M_2), * -> (*, e11).
HoMap corner(const FieldPtr& k) { return corner_homap(Algebra::matrix(k, 2), ints(*k, {1, 0, 0, 0})); }

/// M_2 -> SatView(K), * -> (K^2, 1), e_ij -> the (i,j) block.
HoMap column_space(const FieldPtr& k) {
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    auto view = std::make_shared<const SatView>(unit_category(k));
    ViewFunctor g{m2, view, {view->plus({0, 0})}, {Matrix::identity(*k, 4)}};
    return HoMap{g};
}

} // namespace

TEST_CASE("identities and corner embeddings are Morita equivalences") {
    auto k = Field::prime(3);
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    CHECK(is_morita_equivalence(KFunctor::identity(m2)).equivalence);

    const MoritaReport unit = is_morita_equivalence(unit_into(m2));
    CHECK_FALSE(unit.equivalence);
    CHECK_FALSE(unit.full_faithfulness.holds);
    CHECK(unit.full_faithfulness.src_dim == 1);
    CHECK(unit.full_faithfulness.tgt_dim == 4);

    const MoritaReport c = is_morita_equivalence(corner(k).rep);
    CHECK(c.equivalence);
    REQUIRE(c.generation.witnesses.size() == 1);
    CHECK(verify_generation_witness(*corner(k).rep.tgt, corner(k).rep.objects, 0, c.generation.witnesses[0]));
}

TEST_CASE("additive generation in K x K needs both idempotents") {
    auto k = Field::prime(2);
    auto split = algebra_as_category(Algebra::split(k, 2));
    SatView v(split);
    const SatObject a{{0}, ints(*k, {1, 0})}, b{{0}, ints(*k, {0, 1})};
    const GenerationReport one = additively_generates({a}, v);
    CHECK_FALSE(one.holds);
    CHECK(one.failure == std::optional<std::size_t>(0));
    CHECK(one.ideal_dims[0] == 1);
    CHECK_FALSE(acceptance::retract_oracle(*split, {a}, 3));
    const GenerationReport both = additively_generates({a, b}, v);
    CHECK(both.holds);
    CHECK(acceptance::retract_oracle(*split, {a, b}, 3));
    CHECK(verify_generation_witness(v, {a, b}, 0, both.witnesses[0]));
    CHECK_FALSE(verify_generation_witness(v, {a}, 0, both.witnesses[0]));
}

TEST_CASE("the generating cofibrations are Morita equivalences") {
    auto k = Field::prime(2);
    CHECK(is_morita_equivalence(generator_r0(k)).equivalence);
    CHECK(is_morita_equivalence(generator_r1(k)).equivalence);
    CHECK(is_morita_equivalence(generator_s2(k)).equivalence);
    CHECK(generator_category(GeneratorKind::r1, k)->hom_dim(0, 0) == 2);
    CHECK(generator_category(GeneratorKind::s2, k)->size() == 3);
    CHECK(thrown_code([] { parse_generator("nope"); }) == ErrorCode::invalid_input);
}

TEST_CASE("pushout cylinder of the identity on K") {
    auto k = Field::prime(3);
    auto unit = unit_category(k);
    const PushoutCylinder p = pushout_cylinder(KFunctor::identity(unit));
    CHECK(p.category->validate().empty());
    REQUIRE(p.category->size() == 2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) CHECK(p.category->hom_dim(x, y) == 1);
    CHECK(p.adjoined == std::vector<std::size_t>{1});
    CHECK(p.underlying(1) == 0);
}

TEST_CASE("pushout along K -> M_2 and its universal property") {
    auto k = Field::prime(3);
    auto m2 = algebra_as_category(Algebra::matrix(k, 2));
    const PushoutCylinder p = pushout_cylinder(unit_into(m2));
    CHECK(p.category->validate().empty());
    CHECK(p.category->hom_dim(p.adjoined[0], 0) == 4);
    CHECK(p.g.validate().empty());
    CHECK(p.h.validate().empty());
    std::mt19937_64 rng(37);
    for (int t = 0; t < 5; ++t) {
        const Cocone c = random_cocone(p, rng);
        REQUIRE(is_cocone(p, c));
        const KFunctor med = pushout_mediator(p, c);
        CHECK(med.validate().empty());
        CHECK(same_functor(compose(med, p.g), c.t0));
        CHECK(same_functor(compose(med, p.h), c.t1));
        CHECK(mediator_freedom(p, c, med) == 0);
    }
}

TEST_CASE("mapping cylinder factors F as a cofibration then a trivial fibration") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 8; ++t) {
        const KFunctor f = acceptance::random_functor(Field::prime(2), 2, 2, rng);
        const MappingCylinder m = mapping_cylinder(f);
        CHECK(m.j.validate().empty());
        CHECK(m.q.validate().empty());
        CHECK(same_functor(compose(m.q, m.j), f));
        CHECK(is_injective_on_objects(m.j));
        CHECK(is_surjective_on_objects(m.q));
        CHECK(is_fully_faithful(m.q).holds);
        CHECK(is_morita_equivalence(m.q).equivalence);
    }
}

TEST_CASE("two out of three for Morita equivalences") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 6; ++t) {
        const KFunctor f = acceptance::random_morita_equivalence(t % 2 ? Field::prime(2) : Field::prime(3), rng);
        REQUIRE(is_morita_equivalence(f).equivalence);
        const MappingCylinder m = mapping_cylinder(f);
        CHECK(is_morita_equivalence(m.j).equivalence);
        CHECK(ho_is_iso(ho_compose(ho_from_functor(m.q), ho_from_functor(m.j))).equivalence);
    }
}

TEST_CASE("cylinder object of K") {
    auto k = Field::prime(2);
    const CylinderObject c = cylinder_object(unit_category(k));
    CHECK(c.cylinder->validate().empty());
    REQUIRE(c.cylinder->size() == 2);
    CHECK(c.cylinder->hom_dim(0, 1) == 1);
    CHECK(c.coproduct->size() == 2);
    CHECK(same_functor(compose(c.q, c.j0), KFunctor::identity(c.base)));
    CHECK(same_functor(compose(c.q, c.j1), KFunctor::identity(c.base)));
    CHECK(is_morita_equivalence(c.q).equivalence);
}

TEST_CASE("saturation witnesses") {
    auto k = Field::prime(2);
    const SaturationReport unit = saturation_witness_search(*unit_category(k));
    CHECK(unit.zero.status == WitnessStatus::exhausted);
    CHECK_FALSE(unit.all_found());

    auto r1 = generator_category(GeneratorKind::r1, k);
    SaturationOptions opts;
    opts.idempotents = std::vector<std::pair<std::size_t, Vector>>{{r1->index("o"), unit_vector(*k, 2, 1)}};
    opts.pairs = std::vector<std::pair<std::size_t, std::size_t>>{};
    const SaturationReport r = saturation_witness_search(*r1, opts);
    REQUIRE(r.splittings.size() == 1);
    CHECK(r.splittings[0].status == WitnessStatus::found);
    CHECK(r.splittings[0].retract == r1->index("r"));
    CHECK(verify_split_witness(*r1, r.splittings[0]));

    auto hull = additive_hull(karoubi(generator_category(GeneratorKind::e1, k), {{"o", unit_vector(*k, 2, 1)}}), 2);
    SaturationOptions h;
    h.pairs = std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}};
    h.idempotents = std::vector<std::pair<std::size_t, Vector>>{{0, unit_vector(*k, 2, 1)}};
    const SaturationReport s = saturation_witness_search(*hull, h);
    CHECK(s.all_found());
    for (const auto& w : s.sums) CHECK(verify_sum_witness(*hull, w));
    for (const auto& w : s.splittings) CHECK(verify_split_witness(*hull, w));
}

TEST_CASE("homotopy category calculus on the corner equivalence") {
    auto k = Field::prime(3);
    const HoMap phi = corner(k), psi = column_space(k);
    REQUIRE(psi.rep.validate().empty());
    CHECK(ho_is_iso(phi).equivalence);
    CHECK(ho_is_iso(psi).equivalence);
    CHECK(ho_equal(ho_compose(psi, phi), ho_identity(phi.source())).verdict == Verdict::yes);
    CHECK(ho_equal(ho_compose(phi, psi), ho_identity(psi.source())).verdict == Verdict::yes);
    CHECK(ho_equal(ho_compose(ho_identity(phi.target()), phi), phi).verdict == Verdict::yes);
    CHECK(ho_equal(ho_compose(phi, ho_identity(phi.source())), phi).verdict == Verdict::yes);
}

TEST_CASE("bimodules become functors into saturations") {
    auto k = Field::prime(3);
    const Algebra m2 = Algebra::matrix(k, 2);
    const ProjectiveFunctor reg = bimodule_to_functor(Bimodule::regular(m2));
    CHECK(reg.functor.validate().empty());
    CHECK(reg.functor.objects[0].word.size() == 1);
    CHECK(equal(*k, reg.functor.objects[0].idem, m2.unit));
    // Two generators given explicitly: M_2 ≅ e11·M_2 ⊕ e22·M_2.
    const ProjectiveFunctor two = bimodule_to_functor(Bimodule::regular(m2), std::vector<Vector>{unit_vector(*k, 4, 0), unit_vector(*k, 4, 3)});
    CHECK(two.functor.objects[0].word.size() == 2);
    CHECK(two.functor.tgt->hom_dim(two.functor.objects[0], two.functor.objects[0]) == 4);
    const Algebra f9 = Algebra::field_over_base(Field::galois_field(3, 2));
    CHECK(bimodule_to_functor(Bimodule::regular(f9)).functor.objects[0].word.size() == 1);
    CHECK(bimodule_iso(functor_to_bimodule(reg.functor), Bimodule::regular(m2)).verdict == Verdict::yes);

    const Bimodule row = Bimodule::row_ideal(m2, ints(*k, {1, 0, 0, 0}));
    const ProjectiveFunctor r = bimodule_to_functor(row);
    CHECK(r.functor.validate().empty());
    CHECK(r.functor.objects[0].word.size() == 1);
    CHECK(r.functor.tgt->hom_dim(r.functor.objects[0], r.functor.objects[0]) == 1);
    CHECK(bimodule_iso(functor_to_bimodule(r.functor), row).verdict == Verdict::yes);

    CHECK(thrown_code([&] { bimodule_to_functor(row, std::vector<Vector>{}); }) == ErrorCode::not_finitely_generated);

    // K over K[x]/x^2 with x acting by zero is not projective.
    const Algebra dual = Algebra::polynomial_quotient(k, ints(*k, {0, 0, 1}));
    Bimodule simple{Algebra::ground(k), dual, 1, {Matrix::identity(*k, 1)}, {Matrix::identity(*k, 1), Matrix::zero(*k, 1, 1)}};
    REQUIRE(simple.validate().empty());
    CHECK(thrown_code([&] { bimodule_to_functor(simple); }) == ErrorCode::not_projective);
}

TEST_CASE("functor composition matches the tensor product of bimodules") {
    auto k = Field::prime(2);
    const Algebra m2 = Algebra::matrix(k, 2);
    const Bimodule m = Bimodule::from_homomorphism(Algebra::ground(k), m2, Matrix::from_columns(*k, 4, {m2.unit}));
    const Bimodule n = Bimodule::column_ideal(m2, ints(*k, {1, 0, 0, 0}));
    const ProjectiveFunctor gm = bimodule_to_functor(m), gn = bimodule_to_functor(n);
    const ProjectiveFunctor gmn = bimodule_to_functor(tensor_over(m, n).module);
    const HoMap composite = ho_compose(HoMap{gn.functor}, HoMap{gm.functor});
    CHECK(view_functor_iso_test(composite.rep, gmn.functor).verdict == Verdict::yes);
}
