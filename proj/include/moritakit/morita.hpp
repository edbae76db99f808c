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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "moritakit/envelopes.hpp"
#include "moritakit/lincat.hpp"

namespace moritakit {

// ------------------------------------------------------------ Morita decision

struct FullFaithfulness {
    bool holds = true;
    /// First hom space (x,y) on which the functor is not bijective.
    std::optional<std::pair<std::size_t, std::size_t>> failure;
    std::size_t src_dim = 0;
    std::size_t tgt_dim = 0;
    std::size_t rank = 0;
};

FullFaithfulness is_fully_faithful(const KFunctor& f);
FullFaithfulness is_fully_faithful(const ViewFunctor& f);

/// One summand of 1_y = Σ g∘f with f: (y,1) -> s and g: s -> (y,1), ambient.
struct TraceTerm {
    std::size_t image = 0;
    Vector f;
    Vector g;
};

struct GenerationReport {
    bool holds = true;
    /// dim of the trace ideal I(y) for every base object y.
    std::vector<std::size_t> ideal_dims;
    /// First base object whose identity lies outside its trace ideal.
    std::optional<std::size_t> failure;
    /// For every base object, terms summing to its identity (when holds).
    std::vector<std::vector<TraceTerm>> witnesses;
};

GenerationReport additively_generates(const std::vector<SatObject>& images, const SatView& view);

struct MoritaReport {
    bool equivalence = false;
    FullFaithfulness full_faithfulness;
    GenerationReport generation;
};

MoritaReport is_morita_equivalence(const KFunctor& f);
MoritaReport is_morita_equivalence(const ViewFunctor& f);

/// Re-checks a trace witness without searching: every term lies in the right
/// hom spaces and the composites sum to 1_y.
bool verify_generation_witness(const SatView& view, const std::vector<SatObject>& images, std::size_t y,
                               const std::vector<TraceTerm>& terms);

bool is_injective_on_objects(const KFunctor& f);
bool is_surjective_on_objects(const KFunctor& f);
/// Every target object is isomorphic to some F x; searched per object.
Verdict is_essentially_surjective(const KFunctor& f, const SearchOptions& opts = {});

// ------------------------------------------------------------ generators

enum class GeneratorKind { bullet, one_arrow, parallel_pair, iso_interval, e1, r1, s2, zero };
GeneratorKind parse_generator(const std::string& name);

/// E1: object "o" with End basis {1, e}. R1: objects "o","r", End(o) basis
/// {1_o, i∘p}, Hom(o,r) = {p}, Hom(r,o) = {i}. S2: objects "o1","o2","s",
/// End(s) basis {i1∘p1, i2∘p2}. zero: one object "0" with End = 0.
CategoryPtr generator_category(GeneratorKind kind, const FieldPtr& k);

/// ∅ -> 0.
KFunctor generator_r0(const FieldPtr& k);
/// E1 -> R1, o -> o, e -> i∘p.
KFunctor generator_r1(const FieldPtr& k);
/// K ⊔ K -> S2, the two objects to o1 and o2.
KFunctor generator_s2(const FieldPtr& k);

/// Objects "x@0" then "y@1".
CategoryPtr disjoint_union(const KCategory& a, const KCategory& b);

// ------------------------------------------------------------ pushout

/// B ⊔_A (A ⊗ F_K(𝐈)) along F : A -> B and x -> (x,0).
struct PushoutCylinder {
    KFunctor f;
    CategoryPtr cylinder;            // A ⊗ F_K(𝐈)
    CategoryPtr category;            // B̃: objects of B, then one adjoined object per object of A
    std::vector<std::size_t> adjoined;
    KFunctor g;                      // B -> B̃
    KFunctor h;                      // A ⊗ F_K(𝐈) -> B̃
    /// For an object of B̃, the object of B whose homs it borrows.
    std::size_t underlying(std::size_t o) const;
};

PushoutCylinder pushout_cylinder(const KFunctor& f);

/// T0 : B -> C and T1 : A ⊗ F_K(𝐈) -> C with T0∘F = T1 on the objects (x,0).
struct Cocone {
    KFunctor t0;
    KFunctor t1;
};

bool is_cocone(const PushoutCylinder& p, const Cocone& c);
/// The four-case mediator B̃ -> C.
KFunctor pushout_mediator(const PushoutCylinder& p, const Cocone& c);
/// Dimension of the solution space of the linearized mediator equations;
/// 0 certifies that the mediator is unique.
std::size_t mediator_freedom(const PushoutCylinder& p, const Cocone& c, const KFunctor& t);
/// C = B, T0 conjugation by random units, T1 twisted by random units θ_x.
Cocone random_cocone(const PushoutCylinder& p, std::mt19937_64& rng);

struct MappingCylinder {
    PushoutCylinder pushout;
    KFunctor j;  // A -> B̃, cofibration
    KFunctor q;  // B̃ -> B, trivial fibration
};

MappingCylinder mapping_cylinder(const KFunctor& f);

// ------------------------------------------------------------ cylinder object

struct CylinderObject {
    CategoryPtr base;
    CategoryPtr cylinder;   // A ⊗ F_K(𝐈), objects "(x,0)", "(x,1)"
    CategoryPtr coproduct;  // A ⊔ A
    KFunctor j;             // A ⊔ A -> cylinder
    KFunctor j0;            // x -> (x,0)
    KFunctor j1;            // x -> (x,1)
    KFunctor q;             // cylinder -> A
};

CylinderObject cylinder_object(const CategoryPtr& a);
/// H with H∘J0 = F0, H∘J1 = F1 and H(1⊗u) = η.
KFunctor homotopy_from_iso(const CylinderObject& c, const KFunctor& f0, const KFunctor& f1, const NaturalTransformation& eta);
/// η_x = H(1_x ⊗ u).
NaturalTransformation iso_from_homotopy(const CylinderObject& c, const KFunctor& h);
/// H∘J0 = F0 and H∘J1 = F1, coefficient-exactly.
bool is_homotopy(const CylinderObject& c, const KFunctor& h, const KFunctor& f0, const KFunctor& f1);

// ------------------------------------------------------------ saturation

enum class WitnessStatus { found, exhausted, unknown };
const char* to_string(WitnessStatus s) noexcept;

struct ZeroWitness {
    WitnessStatus status = WitnessStatus::exhausted;
    std::optional<std::size_t> object;
};

struct SplitWitness {
    std::size_t object = 0;
    Vector idempotent;
    WitnessStatus status = WitnessStatus::exhausted;
    std::size_t retract = 0;
    Vector inclusion;   // Hom(retract, object)
    Vector projection;  // Hom(object, retract)
};

struct SumWitness {
    std::size_t first = 0;
    std::size_t second = 0;
    WitnessStatus status = WitnessStatus::exhausted;
    std::size_t sum = 0;
    Vector i1, i2, p1, p2;
};

struct SaturationOptions {
    std::uint64_t budget = 1u << 16;
    /// Idempotents to split; all idempotents of every End(x) when absent.
    std::optional<std::vector<std::pair<std::size_t, Vector>>> idempotents;
    /// Pairs to sum; every unordered pair when absent.
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
};

struct SaturationReport {
    ZeroWitness zero;
    std::vector<SplitWitness> splittings;
    std::vector<SumWitness> sums;
    std::uint64_t examined = 0;
    bool all_found() const;
};

SaturationReport saturation_witness_search(const KCategory& d, const SaturationOptions& opts = {});
bool verify_split_witness(const KCategory& d, const SplitWitness& w);
bool verify_sum_witness(const KCategory& d, const SumWitness& w);

// ------------------------------------------------------------ Ho calculus

/// A morphism A -> B of the homotopy category, represented by A -> SatView(B).
struct HoMap {
    ViewFunctor rep;
    const CategoryPtr& source() const { return rep.src; }
    const CategoryPtr& target() const { return rep.tgt->base(); }
};

HoMap ho_identity(const CategoryPtr& a);
HoMap ho_from_functor(const KFunctor& f);
/// ψ∘φ, represented by the saturated extension of ψ after φ.
HoMap ho_compose(const HoMap& psi, const HoMap& phi);
IsoTest ho_equal(const HoMap& a, const HoMap& b, const SearchOptions& opts = {});
MoritaReport ho_is_iso(const HoMap& phi);

} // namespace moritakit
