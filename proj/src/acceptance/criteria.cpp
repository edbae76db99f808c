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

#include "moritakit/acceptance/criteria.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "moritakit/acceptance/oracles.hpp"
#include "moritakit/acceptance/sampling.hpp"
#include "moritakit/azumaya.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/galois.hpp"
#include "moritakit/morita.hpp"
#include "moritakit/parallel.hpp"

namespace moritakit::acceptance {

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

Rng rng_for(int id, std::uint64_t seed) { return Rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(id)); }

std::string fraction(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

ExtensionPtr gf(std::uint64_t p, unsigned n) { return std::make_shared<const GaloisExtension>(GaloisExtension::finite(p, n)); }
ExtensionPtr gaussian() { return std::make_shared<const GaloisExtension>(GaloisExtension::quadratic(-1)); }

Algebra hamilton() {
    const FieldPtr q = Field::rationals();
    return Algebra::quaternion(q, q->from_int(-1), q->from_int(-1));
}

void c1(Outcome& o, Rng& rng) {
    const FieldPtr k = Field::prime(2);
    std::size_t agree = 0, positive = 0, invalid = 0;
    const std::size_t total = 200;
    for (std::size_t t = 0; t < total; ++t) {
        const CategoryPtr b = random_category(k, 2, 2, rng);
        if (!b->validate().empty()) ++invalid;
        const auto images = random_images(*b, rng, 2);
        SatView view(b);
        const bool fast = additively_generates(images, view).holds;
        const bool slow = retract_oracle(*b, images, 3);
        if (fast == slow) ++agree;
        if (slow) ++positive;
    }
    o.require(invalid == 0, std::to_string(invalid) + " invalid samples");
    o.require(agree == total, "oracle disagreement on " + std::to_string(total - agree) + " samples");
    if (o.pass) o.detail << fraction(agree, total) << " agree with the retract oracle (" << positive << " generating)";
}

void c2(Outcome& o, Rng&) {
    std::size_t checked = 0;
    for (std::uint64_t p : {2, 3, 5})
        for (std::size_t n : {2, 3}) {
            const FieldPtr k = Field::prime(p);
            const Algebra m = Algebra::matrix(k, n);
            const CategoryPtr cat = algebra_as_category(m);
            const CategoryPtr kar = karoubi(cat, {KaroubiObject{"*", unit_vector(*k, n * n, 0)}});
            const CategoryPtr unit = unit_category(k);
            const std::size_t corner = kar->index("*.e0");
            KFunctor f = KFunctor::blank(unit, kar, {corner});
            f.hom(0, 0) = Matrix::from_columns(*k, kar->hom_dim(corner, corner), {kar->identity(corner)});
            const std::string tag = "GF(" + std::to_string(p) + ") n=" + std::to_string(n);
            o.require(f.validate().empty(), tag + ": corner functor invalid");
            o.require(is_morita_equivalence(f).equivalence, tag + ": corner functor rejected");
            KFunctor u = KFunctor::blank(unit, cat, {0});
            u.hom(0, 0) = Matrix::from_columns(*k, n * n, {m.unit});
            const MoritaReport r = is_morita_equivalence(u);
            const auto& ff = r.full_faithfulness;
            o.require(!r.equivalence && !ff.holds && ff.failure.has_value() && ff.src_dim == 1 && ff.tgt_dim == n * n,
                      tag + ": unit functor lacks an ff certificate");
            ++checked;
        }
    if (o.pass) o.detail << checked << " corners accepted, unit functors rejected with rank 1 < n^2";
}

void c3(Outcome& o, Rng& rng) {
    const FieldPtr k = Field::prime(2);
    const std::size_t total = 100;
    std::size_t ok = 0;
    for (std::size_t t = 0; t < total; ++t) {
        const KFunctor f = random_functor(k, 3, 2, rng);
        const MappingCylinder mc = mapping_cylinder(f);
        const bool good = f.validate().empty() && mc.j.validate().empty() && mc.q.validate().empty() &&
                          same_functor(compose(mc.q, mc.j), f) && is_injective_on_objects(mc.j) &&
                          is_fully_faithful(mc.q).holds && is_essentially_surjective(mc.q) == Verdict::yes &&
                          is_surjective_on_objects(mc.q);
        if (good) ++ok;
    }
    o.require(ok == total, fraction(total - ok, total) + " factorizations failed");
    if (o.pass) o.detail << fraction(ok, total) << " factorizations with Q∘J = F, J cofibration, Q trivial fibration";
}

void c4(Outcome& o, Rng& rng) {
    const FieldPtr k = Field::prime(2);
    const std::size_t total = 50;
    std::size_t ok = 0;
    for (std::size_t t = 0; t < total; ++t) {
        const KFunctor f = random_functor(k, 2, 2, rng);
        const PushoutCylinder p = pushout_cylinder(f);
        const Cocone c = random_cocone(p, rng);
        if (!is_cocone(p, c)) continue;
        const KFunctor m = pushout_mediator(p, c);
        if (m.validate().empty() && same_functor(compose(m, p.g), c.t0) && same_functor(compose(m, p.h), c.t1) &&
            mediator_freedom(p, c, m) == 0)
            ++ok;
    }
    o.require(ok == total, fraction(total - ok, total) + " cocones without a unique commuting mediator");
    if (o.pass) o.detail << fraction(ok, total) << " mediators commute and are unique";
}

void c5(Outcome& o, Rng&) {
    const FieldPtr k = Field::prime(2);
    const CategoryPtr e1 = generator_category(GeneratorKind::e1, k);
    o.require(e1->size() == 1 && e1->hom_dim(0, 0) == 2, "E1 dims");
    const CategoryPtr r1 = generator_category(GeneratorKind::r1, k);
    const std::size_t ro = r1->index("o"), rr = r1->index("r");
    o.require(r1->hom_dim(ro, ro) == 2 && r1->hom_dim(rr, rr) == 1 && r1->hom_dim(ro, rr) == 1 && r1->hom_dim(rr, ro) == 1,
              "R1 dims");
    const CategoryPtr s2 = generator_category(GeneratorKind::s2, k);
    const std::size_t a = s2->index("o1"), b = s2->index("o2"), s = s2->index("s");
    o.require(s2->hom_dim(a, a) == 1 && s2->hom_dim(b, b) == 1 && s2->hom_dim(a, b) == 0 && s2->hom_dim(b, a) == 0 &&
                  s2->hom_dim(s, s) == 2 && s2->hom_dim(a, s) == 1 && s2->hom_dim(s, a) == 1 && s2->hom_dim(b, s) == 1 &&
                  s2->hom_dim(s, b) == 1,
              "S2 dims");
    for (const auto& c : {e1, r1, s2}) o.require(c->validate().empty(), "generator category invalid");

    const KFunctor f = generator_r1(k);
    const Vector ip = unit_vector(*k, 2, 1);
    o.require(f.validate().empty() && equal(*k, f.apply(0, 0, unit_vector(*k, 2, 1)), ip), "R1 functor does not send e to i∘p");
    SaturationOptions opts;
    opts.idempotents = std::vector<std::pair<std::size_t, Vector>>{{ro, ip}};
    opts.pairs = std::vector<std::pair<std::size_t, std::size_t>>{};
    const SaturationReport rep = saturation_witness_search(*r1, opts);
    o.require(rep.splittings.size() == 1 && rep.splittings[0].status == WitnessStatus::found &&
                  rep.splittings[0].retract == rr && verify_split_witness(*r1, rep.splittings[0]),
              "i∘p does not split through r");
    if (o.pass) o.detail << "E1 (2), R1 (2,1,1,1), S2 (1,1,0,0,2,1,1,1,1); i∘p splits through r";
}

void c6(Outcome& o, Rng&) {
    struct Case {
        std::string name;
        Algebra a;
        bool azumaya;
    };
    const auto e4 = gf(2, 2);
    const std::vector<Case> cases{{"M_2(GF(3))", Algebra::matrix(Field::prime(3), 2), true},
                                  {"(-1,-1)_Q", hamilton(), true},
                                  {"GF(2)xGF(2)", Algebra::split(Field::prime(2), 2), false},
                                  {"GF(4)/GF(2)", Algebra::field_over_base(e4->field()), false}};
    for (const auto& c : cases) {
        const AzumayaCertificate cert = azumaya_certificate(c.a);
        const std::size_t oracle = sandwich_rank_oracle(c.a);
        o.require(cert.rank == oracle, c.name + ": rank differs from oracle");
        o.require(cert.azumaya == c.azumaya && (c.azumaya ? cert.rank == 16 : cert.rank < cert.expected),
                  c.name + ": rank " + std::to_string(cert.rank));
        o.detail << (o.pass ? "" : "; ") << c.name << " rank " << cert.rank << "/" << cert.expected << " ";
    }
}

void c7(Outcome& o, Rng&) {
    const Algebra h = hamilton();
    const Algebra hh = tensor(h, h.opposite());
    const Matrix s = sandwich_map(h);
    o.require(hh.dim == 16 && s.rows() == 16 && is_invertible(*h.field, s) &&
                  is_algebra_homomorphism(hh, Algebra::matrix(h.field, 4), s),
              "sandwich map of H is not a bijective algebra homomorphism");
    o.require(same_brauer_class(h, h).verdict == Verdict::yes, "[H][H^op] not trivialized");

    const Algebra m2 = Algebra::matrix(Field::prime(2), 2);
    const Trivialization t = morita_trivialize(m2);
    o.require(t.verdict == Verdict::yes && t.idempotent && verify_trivialization(m2, *t.idempotent) &&
                  rank(*m2.field, m2.left_multiplication(*t.idempotent)) == 2,
              "M_2(GF(2)) not trivialized by a rank-one idempotent");

    const Trivialization th = morita_trivialize(h);
    o.require(th.verdict == Verdict::inconclusive && th.box_exhausted, "H search did not end Unknown with an exhausted box");
    if (o.pass)
        o.detail << "H⊗H^op ≅ End_Q(H) (dim 16); M_2(GF(2)) split by " << t.stage << "; H Unknown after " << th.examined
                 << " candidates, " << th.region << " exhausted";
}

void c8(Outcome& o, Rng& rng) {
    const std::vector<std::pair<std::string, ExtensionPtr>> exts{{"GF(4)/GF(2)", gf(2, 2)}, {"GF(9)/GF(3)", gf(3, 2)}, {"Q(i)/Q", gaussian()}};
    for (const auto& [name, e] : exts) {
        std::size_t ok = 0;
        for (std::size_t t = 0; t < 50; ++t) {
            const GaloisModule w = GaloisModule::random(e, 1 + uniform(rng, 4), rng);
            const Matrix fixed = fixed_points(w);
            const Matrix eps = counit(w, fixed);
            if (w.validate().empty() && fixed.cols() == w.carrier.dim && eps.rows() == eps.cols() &&
                is_invertible(*e->base(), eps) && counit_is_equivariant(w, fixed, eps))
                ++ok;
        }
        o.require(ok == 50, name + ": " + fraction(50 - ok, 50) + " counits fail");
        if (o.pass) o.detail << name << " 50/50 ";
    }
}

void c9(Outcome& o, Rng&) {
    const std::vector<std::pair<std::string, ExtensionPtr>> exts{{"GF(4)/GF(2)", gf(2, 2)}, {"GF(9)/GF(3)", gf(3, 2)}, {"Q(i)/Q", gaussian()}};
    for (const auto& [name, e] : exts)
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::size_t expect = power(m, e->order());
            const CorModule c = cor_module(LModule::standard(e, m));
            o.require(c.dim() == expect, name + ": dim Cor(L^" + std::to_string(m) + ") = " + std::to_string(c.dim()));
            const CorDimensionIso iso = cor_dimension_iso(LModule::standard(e, 1), m);
            o.require(iso.bijective && iso.copies == expect && iso.source.dim() == expect,
                      name + ": dimension iso for m=" + std::to_string(m) + " not bijective");
        }
    if (o.pass) o.detail << "dim Cor(L^m) = m^|G| for m = 1..3 over 3 extensions; isos bijective";
}

void c10(Outcome& o, Rng&) {
    const auto e = gf(2, 2);
    std::size_t pairs = 0;
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b) {
            const CorMonoidal cm = cor_monoidal(LModule::standard(e, a), LModule::standard(e, b));
            const std::size_t d = a * a * b * b;
            o.require(cm.bijective && cm.map.rows() == d && cm.map.cols() == d,
                      "(" + std::to_string(a) + "," + std::to_string(b) + ") not bijective");
            ++pairs;
        }
    if (o.pass) o.detail << pairs << " dimension pairs bijective";
}

void c11(Outcome& o, Rng& rng) {
    const auto e = gf(2, 2);
    const Algebra c = cor_algebra(Algebra::matrix(e->field(), 2), e);
    o.require(c.dim == 16 && c.field->same_as(*e->base()) && c.validate().empty(), "Cor(M_2(GF(4))) is not a 16-dim GF(2)-algebra");
    o.require(is_azumaya(c), "Cor(M_2(GF(4))) not Azumaya");
    TrivializeOptions opts;
    opts.seed = rng();
    const Trivialization t = morita_trivialize(c, opts);
    o.require(t.verdict == Verdict::yes && t.idempotent && verify_trivialization(c, *t.idempotent), "no trivialization found");
    if (o.pass) o.detail << "dim 16, Azumaya, trivialized by " << t.stage;
}

void c12(Outcome& o, Rng& rng) {
    const FieldPtr k = Field::prime(2);
    const FieldPtr l = Field::galois_field(2, 2);
    const std::size_t total = 30;
    std::size_t base_ok = 0, tensor_ok = 0, ext_ok = 0;
    for (std::size_t t = 0; t < total; ++t) {
        const KFunctor f = random_morita_equivalence(k, rng);
        if (is_morita_equivalence(f).equivalence) ++base_ok;
        const CategoryPtr c = random_category(k, 2, 2, rng);
        if (is_morita_equivalence(tensor_functor(KFunctor::identity(c), f)).equivalence) ++tensor_ok;
        const CategoryPtr sl = scalar_extension(*f.src, l);
        const CategoryPtr tl = scalar_extension(*f.tgt, l);
        if (is_morita_equivalence(scalar_extension(f, sl, tl)).equivalence) ++ext_ok;
    }
    o.require(base_ok == total, "sampled functors not Morita: " + fraction(total - base_ok, total));
    o.require(tensor_ok == total, "C⊗F failures: " + fraction(total - tensor_ok, total));
    o.require(ext_ok == total, "F⊗GF(4) failures: " + fraction(total - ext_ok, total));
    if (o.pass) o.detail << fraction(tensor_ok, total) << " C⊗F and " << fraction(ext_ok, total) << " F⊗GF(4) pass";
}

void c13(Outcome& o, Rng& rng) {
    const auto e = gf(2, 2);
    const FieldPtr l = e->field();
    const Algebra s = Algebra::matrix(l, 2);
    const Algebra sp = Algebra::split(l, 2);
    const std::size_t samples = 6;
    std::size_t compat = 0;
    for (std::size_t t = 0; t < samples; ++t) {
        const Vector a = random_rank_one_idempotent(l, 2, rng);
        const Vector b = random_rank_one_idempotent(l, 2, rng);
        Bimodule m, n;
        switch (t % 5) {
        case 0: m = Bimodule::row_ideal(s, a); n = Bimodule::column_ideal(s, b); break;
        case 1: m = Bimodule::column_ideal(s, a); n = Bimodule::row_ideal(s, b); break;
        case 2: m = Bimodule::regular(s); n = Bimodule::column_ideal(s, a); break;
        case 3: m = Bimodule::regular(sp); n = Bimodule::free(sp, 2); break;
        default: m = Bimodule::row_ideal(s, a); n = Bimodule::regular(s); break;
        }
        if (cor_tensor_compatibility(m, n, e).holds()) ++compat;
    }
    o.require(compat == samples, "tensor compatibility failed on " + fraction(samples - compat, samples));

    const std::size_t trips = 20;
    std::size_t round = 0;
    for (std::size_t t = 0; t < trips; ++t) {
        const FieldPtr k = (t % 2 == 0) ? Field::prime(2) : l;
        const Bimodule m = random_projective_bimodule(k, rng);
        const ProjectiveFunctor pf = bimodule_to_functor(m);
        const Bimodule back = functor_to_bimodule(pf.functor);
        const ProjectiveFunctor again = bimodule_to_functor(back);
        if (bimodule_iso(m, back).verdict == Verdict::yes && view_functor_iso_test(pf.functor, again.functor).verdict == Verdict::yes)
            ++round;
    }
    o.require(round == trips, "round trips failed on " + fraction(trips - round, trips));
    if (o.pass) o.detail << fraction(compat, samples) << " tensor compatibilities, " << fraction(round, trips) << " round trips";
}

struct Entry {
    const char* name;
    double limit;
    void (*run)(Outcome&, Rng&);
};

const Entry entries[] = {
    {"morita-decision-oracle", 120, c1}, {"corner-equivalence", 10, c2}, {"mapping-cylinder", 120, c3},
    {"pushout-universality", 60, c4},   {"generator-dimensions", 1, c5}, {"azumaya-certification", 5, c6},
    {"brauer-arithmetic", 30, c7},      {"speiser-descent", 60, c8},     {"cor-dimension", 30, c9},
    {"corestriction-monoidal", 30, c10}, {"corestriction-azumaya", 120, c11}, {"tensor-base-change", 120, c12},
    {"bimodule-calculus", 120, c13},
};

} // namespace

bool known_suite(const std::string& suite) {
    return suite == "core" || suite == "morita" || suite == "brauer" || suite == "galois" || suite == "all";
}

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "core") return {1, 2, 3, 4, 5};
    if (suite == "morita") return {12, 13};
    if (suite == "brauer") return {6, 7, 11};
    if (suite == "galois") return {8, 9, 10};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    throw Error(ErrorCode::invalid_input, "unknown suite \"" + suite + "\"");
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > 13) throw Error(ErrorCode::invalid_input, "no criterion " + std::to_string(id));
    const Entry& e = entries[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = e.name;
    r.limit = e.limit;
    Outcome o;
    Rng rng = rng_for(id, seed);
    const auto start = std::chrono::steady_clock::now();
    try {
        e.run(o, rng);
    } catch (const std::exception& ex) {
        o.require(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass && r.seconds <= r.limit;
    r.detail = o.detail.str();
    while (!r.detail.empty() && r.detail.back() == ' ') r.detail.pop_back();
    if (o.pass && !r.pass) r.detail += "; over the time limit";
    return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed) {
    const std::vector<int> ids = suite_criteria(suite);
    std::vector<CriterionResult> out(ids.size());
    parallel_for(ids.size(), [&](std::size_t i) { out[i] = run_criterion(ids[i], seed); });
    return out;
}

std::string format_result(const CriterionResult& r, bool with_times) {
    std::ostringstream s;
    s << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << ": " << r.detail;
    if (with_times) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " [%.2f s, limit %.0f s]", r.seconds, r.limit);
        s << buf;
    }
    return s.str();
}

} // namespace moritakit::acceptance
