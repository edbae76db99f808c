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

#include "moritakit/morita.hpp"

#include <algorithm>
#include <functional>

namespace moritakit {

namespace {

Elem random_element(const Field& k, std::mt19937_64& rng) {
    if (k.is_finite()) return k.element(rng() % k.order());
    return k.from_int(static_cast<long long>(rng() % 7) - 3);
}

Vector random_vector(const Field& k, std::size_t n, std::mt19937_64& rng) {
    Vector v(n);
    for (auto& x : v) x = random_element(k, rng);
    return v;
}

/// Calls `visit` on every coefficient vector of length n: all of K^n over a
/// finite field, the {-1,0,1} box over Q. Stops early when `visit` returns
/// true or after `budget` vectors. Returns whether the enumeration finished.
bool enumerate_vectors(const Field& k, std::size_t n, std::uint64_t budget, std::uint64_t& examined,
                       const std::function<bool(const Vector&)>& visit, bool& stopped) {
    stopped = false;
    const std::uint64_t q = k.is_finite() ? k.order() : 3;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / q + 1) return false;
        total *= q;
    }
    const Elem minus = k.neg(k.one());
    Vector v(n, k.zero());
    for (std::uint64_t code = 0; code < total; ++code) {
        if (examined >= budget) return false;
        ++examined;
        std::uint64_t r = code;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t d = r % q;
            r /= q;
            if (k.is_finite()) v[i] = k.element(d);
            else v[i] = d == 0 ? k.zero() : (d == 1 ? k.one() : minus);
        }
        if (visit(v)) {
            stopped = true;
            return true;
        }
    }
    return k.is_finite();
}

Vector concat(Vector a, const Vector& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Vector slice(const Vector& v, std::size_t from, std::size_t len) {
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) { return a == b || a->same_presentation(*b); }

} // namespace

// ------------------------------------------------------------ Morita decision

FullFaithfulness is_fully_faithful(const KFunctor& f) {
    FullFaithfulness out;
    const KCategory& a = *f.src;
    const Field& k = a.field();
    for (std::size_t x = 0; x < a.size() && out.holds; ++x)
        for (std::size_t y = 0; y < a.size() && out.holds; ++y) {
            const std::size_t s = a.hom_dim(x, y), t = f.tgt->hom_dim(f.object_map[x], f.object_map[y]);
            const std::size_t r = s == 0 || t == 0 ? 0 : rank(k, f.hom(x, y));
            if (s != t || r != s) out = FullFaithfulness{false, std::make_pair(x, y), s, t, r};
        }
    return out;
}

FullFaithfulness is_fully_faithful(const ViewFunctor& f) {
    FullFaithfulness out;
    const KCategory& a = *f.src;
    const Field& k = a.field();
    for (std::size_t x = 0; x < a.size() && out.holds; ++x)
        for (std::size_t y = 0; y < a.size() && out.holds; ++y) {
            const std::size_t s = a.hom_dim(x, y), t = f.tgt->hom_dim(f.objects[x], f.objects[y]);
            const std::size_t r = s == 0 || t == 0 ? 0 : rank(k, f.hom(x, y));
            if (s != t || r != s) out = FullFaithfulness{false, std::make_pair(x, y), s, t, r};
        }
    return out;
}

GenerationReport additively_generates(const std::vector<SatObject>& images, const SatView& view) {
    GenerationReport out;
    const KCategory& b = *view.base();
    const Field& k = b.field();
    for (const auto& s : images) view.require_object(s);
    for (std::size_t y = 0; y < b.size(); ++y) {
        const SatObject ys = view.object(y);
        const std::size_t d = b.hom_dim(y, y);
        std::vector<Vector> composites;
        std::vector<TraceTerm> terms;
        for (std::size_t i = 0; i < images.size(); ++i) {
            const Subspace& hf = view.hom(ys, images[i]);
            const Subspace& hg = view.hom(images[i], ys);
            for (std::size_t gi = 0; gi < hg.dim(); ++gi)
                for (std::size_t fi = 0; fi < hf.dim(); ++fi) {
                    const Vector f = hf.basis_vector(fi), g = hg.basis_vector(gi);
                    composites.push_back(view.ambient_compose(ys.word, images[i].word, ys.word, g, f));
                    terms.push_back(TraceTerm{i, f, g});
                }
        }
        // Closure under End(y) on both sides; the dimension grows until stable.
        std::vector<Vector> span = composites;
        std::size_t dim = span.empty() ? 0 : rank(k, Matrix::from_columns(k, d, span));
        for (std::size_t step = 0; step <= d; ++step) {
            std::vector<Vector> grown = span;
            for (const auto& v : span)
                for (std::size_t e = 0; e < d; ++e) {
                    const Vector be = unit_vector(k, d, e);
                    grown.push_back(b.compose(y, y, y, be, v));
                    grown.push_back(b.compose(y, y, y, v, be));
                }
            const Subspace sub = grown.empty() ? Subspace() : Subspace::span(k, Matrix::from_columns(k, d, grown));
            const std::size_t nd = sub.dim();
            span.clear();
            for (std::size_t c = 0; c < nd; ++c) span.push_back(sub.basis_vector(c));
            if (nd == dim) break;
            dim = nd;
        }
        out.ideal_dims.push_back(dim);
        const Vector& id = b.identity(y);
        bool inside = is_zero(k, id);
        if (!inside && !span.empty()) inside = Subspace::span(k, Matrix::from_columns(k, d, span)).contains(k, id);
        std::vector<TraceTerm> witness;
        if (inside && !composites.empty()) {
            if (auto c = solve(k, Matrix::from_columns(k, d, composites), id)) {
                for (std::size_t t = 0; t < terms.size(); ++t)
                    if (!k.is_zero((*c)[t])) witness.push_back(TraceTerm{terms[t].image, terms[t].f, scale(k, (*c)[t], terms[t].g)});
            }
        }
        out.witnesses.push_back(std::move(witness));
        if (!inside && out.holds) {
            out.holds = false;
            out.failure = y;
        }
    }
    return out;
}

bool verify_generation_witness(const SatView& view, const std::vector<SatObject>& images, std::size_t y,
                               const std::vector<TraceTerm>& terms) {
    const KCategory& b = *view.base();
    const Field& k = b.field();
    if (y >= b.size()) return false;
    const SatObject ys = view.object(y);
    Vector sum = zero_vector(k, b.hom_dim(y, y));
    for (const auto& t : terms) {
        if (t.image >= images.size()) return false;
        const SatObject& s = images[t.image];
        if (!view.contains(ys, s, t.f) || !view.contains(s, ys, t.g)) return false;
        sum = add(k, sum, view.ambient_compose(ys.word, s.word, ys.word, t.g, t.f));
    }
    return equal(k, sum, b.identity(y));
}

MoritaReport is_morita_equivalence(const KFunctor& f) {
    MoritaReport out;
    out.full_faithfulness = is_fully_faithful(f);
    const SatView view(f.tgt);
    std::vector<SatObject> images;
    for (std::size_t x = 0; x < f.src->size(); ++x) images.push_back(view.object(f.object_map[x]));
    out.generation = additively_generates(images, view);
    out.equivalence = out.full_faithfulness.holds && out.generation.holds;
    return out;
}

MoritaReport is_morita_equivalence(const ViewFunctor& f) {
    MoritaReport out;
    out.full_faithfulness = is_fully_faithful(f);
    out.generation = additively_generates(f.objects, *f.tgt);
    out.equivalence = out.full_faithfulness.holds && out.generation.holds;
    return out;
}

bool is_injective_on_objects(const KFunctor& f) {
    std::vector<std::size_t> m = f.object_map;
    std::sort(m.begin(), m.end());
    return std::adjacent_find(m.begin(), m.end()) == m.end();
}

bool is_surjective_on_objects(const KFunctor& f) {
    std::vector<bool> hit(f.tgt->size(), false);
    for (std::size_t o : f.object_map) hit[o] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Verdict is_essentially_surjective(const KFunctor& f, const SearchOptions& opts) {
    const KCategory& b = *f.tgt;
    const Field& k = b.field();
    Verdict overall = Verdict::yes;
    for (std::size_t y = 0; y < b.size(); ++y) {
        Verdict here = Verdict::no;
        for (std::size_t x = 0; x < f.src->size() && here != Verdict::yes; ++x) {
            const std::size_t fx = f.object_map[x];
            if (fx == y) {
                here = Verdict::yes;
                break;
            }
            if (b.hom_dim(fx, fx) != b.hom_dim(y, y) || b.hom_dim(fx, y) != b.hom_dim(y, fx)) continue;
            const std::size_t d = b.hom_dim(fx, y);
            const auto s = find_combination(k, Matrix::identity(k, d),
                                            [&](const Vector& v) { return inverse_morphism(b, fx, y, v).has_value(); }, opts);
            if (s.verdict == Verdict::yes) here = Verdict::yes;
            else if (s.verdict == Verdict::inconclusive) here = Verdict::inconclusive;
        }
        if (here == Verdict::no) return Verdict::no;
        if (here == Verdict::inconclusive) overall = Verdict::inconclusive;
    }
    return overall;
}

// ------------------------------------------------------------ generators

GeneratorKind parse_generator(const std::string& name) {
    if (name == "bullet") return GeneratorKind::bullet;
    if (name == "one-arrow") return GeneratorKind::one_arrow;
    if (name == "parallel-pair") return GeneratorKind::parallel_pair;
    if (name == "iso-interval") return GeneratorKind::iso_interval;
    if (name == "E1") return GeneratorKind::e1;
    if (name == "R1") return GeneratorKind::r1;
    if (name == "S2") return GeneratorKind::s2;
    if (name == "zero") return GeneratorKind::zero;
    throw Error(ErrorCode::invalid_input, "unknown generator '" + name + "'");
}

namespace {

CategoryPtr make_e1(const FieldPtr& f) {
    const Field& k = *f;
    Algebra a;
    a.field = f;
    a.dim = 2;
    a.mult.assign(8, k.zero());
    a.unit = {k.one(), k.zero()};
    a.mult[(0 * 2 + 0) * 2 + 0] = k.one();
    a.mult[(0 * 2 + 1) * 2 + 1] = k.one();
    a.mult[(1 * 2 + 0) * 2 + 1] = k.one();
    a.mult[(1 * 2 + 1) * 2 + 1] = k.one();
    return algebra_as_category(a, "o");
}

CategoryPtr make_r1(const FieldPtr& f) {
    const Field& k = *f;
    // o = 0, r = 1. End(o) = {1_o, ip}, Hom(o,r) = {p}, Hom(r,o) = {i}, End(r) = {1_r}.
    auto c = std::make_shared<KCategory>(f, std::vector<std::string>{"o", "r"}, std::vector<std::size_t>{2, 1, 1, 1});
    const Vector one1{k.one()}, e0{k.one(), k.zero()}, e1{k.zero(), k.one()};
    c->set_identity(0, e0);
    c->set_identity(1, one1);
    // o,o,o
    c->set_composite(0, 0, 0, 0, 0, e0);
    c->set_composite(0, 0, 0, 0, 1, e1);
    c->set_composite(0, 0, 0, 1, 0, e1);
    c->set_composite(0, 0, 0, 1, 1, e1);
    // p∘1 = p, p∘ip = p
    c->set_composite(0, 0, 1, 0, 0, one1);
    c->set_composite(0, 0, 1, 0, 1, one1);
    // i∘p = ip
    c->set_composite(0, 1, 0, 0, 0, e1);
    // 1_r∘p = p
    c->set_composite(0, 1, 1, 0, 0, one1);
    // 1∘i = i, ip∘i = i
    c->set_composite(1, 0, 0, 0, 0, one1);
    c->set_composite(1, 0, 0, 1, 0, one1);
    // p∘i = 1_r
    c->set_composite(1, 0, 1, 0, 0, one1);
    // i∘1_r = i
    c->set_composite(1, 1, 0, 0, 0, one1);
    c->set_composite(1, 1, 1, 0, 0, one1);
    c->require_valid();
    return c;
}

CategoryPtr make_s2(const FieldPtr& f) {
    const Field& k = *f;
    // o1 = 0, o2 = 1, s = 2
    auto c = std::make_shared<KCategory>(f, std::vector<std::string>{"o1", "o2", "s"},
                                         std::vector<std::size_t>{1, 0, 1, 0, 1, 1, 1, 1, 2});
    const Vector one1{k.one()}, e0{k.one(), k.zero()}, e1{k.zero(), k.one()}, z2{k.zero(), k.zero()};
    const Vector proj[2] = {e0, e1};
    c->set_identity(0, one1);
    c->set_identity(1, one1);
    c->set_identity(2, Vector{k.one(), k.one()});
    for (std::size_t a = 0; a < 2; ++a) {
        c->set_composite(a, a, a, 0, 0, one1);
        c->set_composite(a, a, 2, 0, 0, one1);  // i_a ∘ 1
        c->set_composite(2, a, a, 0, 0, one1);  // 1 ∘ p_a
        c->set_composite(a, 2, a, 0, 0, one1);  // p_a ∘ i_a = 1
        c->set_composite(2, a, 2, 0, 0, proj[a]);  // i_a ∘ p_a
        for (std::size_t t = 0; t < 2; ++t) {
            const Vector& hit = t == a ? one1 : Vector{k.zero()};
            c->set_composite(a, 2, 2, t, 0, hit);  // (i_t p_t) ∘ i_a
            c->set_composite(2, 2, a, 0, t, hit);  // p_a ∘ (i_t p_t)
        }
    }
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t u = 0; u < 2; ++u) c->set_composite(2, 2, 2, t, u, t == u ? proj[t] : z2);
    c->require_valid();
    return c;
}

} // namespace

CategoryPtr generator_category(GeneratorKind kind, const FieldPtr& k) {
    switch (kind) {
    case GeneratorKind::bullet: return free_kcategory(k, Presentation::bullet());
    case GeneratorKind::one_arrow: return free_kcategory(k, Presentation::one_arrow());
    case GeneratorKind::parallel_pair: return free_kcategory(k, Presentation::parallel_pair());
    case GeneratorKind::iso_interval: return free_kcategory(k, Presentation::iso_interval());
    case GeneratorKind::e1: return make_e1(k);
    case GeneratorKind::r1: return make_r1(k);
    case GeneratorKind::s2: return make_s2(k);
    case GeneratorKind::zero:
        return std::make_shared<KCategory>(k, std::vector<std::string>{"0"}, std::vector<std::size_t>{0});
    }
    throw Error(ErrorCode::invalid_input, "unknown generator");
}

KFunctor generator_r0(const FieldPtr& k) {
    return KFunctor::blank(empty_category(k), generator_category(GeneratorKind::zero, k), {});
}

KFunctor generator_r1(const FieldPtr& k) {
    KFunctor f = KFunctor::blank(make_e1(k), make_r1(k), {0});
    f.hom(0, 0) = Matrix::identity(*k, 2);
    return f;
}

KFunctor generator_s2(const FieldPtr& k) {
    const CategoryPtr u = unit_category(k);
    KFunctor f = KFunctor::blank(disjoint_union(*u, *u), make_s2(k), {0, 1});
    f.hom(0, 0) = Matrix::identity(*k, 1);
    f.hom(1, 1) = Matrix::identity(*k, 1);
    return f;
}

CategoryPtr disjoint_union(const KCategory& a, const KCategory& b) {
    require_same_field(a.field_ptr(), b.field_ptr(), "disjoint_union");
    const std::size_t na = a.size(), n = na + b.size();
    std::vector<std::string> names;
    for (const auto& x : a.objects()) names.push_back(x + "@0");
    for (const auto& y : b.objects()) names.push_back(y + "@1");
    std::vector<std::size_t> dims(n * n, 0);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y) dims[x * n + y] = a.hom_dim(x, y);
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) dims[(na + x) * n + na + y] = b.hom_dim(x, y);
    auto c = std::make_shared<KCategory>(a.field_ptr(), names, dims);
    auto copy = [&](const KCategory& src, std::size_t off) {
        for (std::size_t x = 0; x < src.size(); ++x) {
            c->set_identity(off + x, src.identity(x));
            for (std::size_t y = 0; y < src.size(); ++y)
                for (std::size_t z = 0; z < src.size(); ++z)
                    for (std::size_t g = 0; g < src.hom_dim(y, z); ++g)
                        for (std::size_t f = 0; f < src.hom_dim(x, y); ++f)
                            c->set_composite(off + x, off + y, off + z, g, f, src.basis_composite(x, y, z, g, f));
        }
    };
    copy(a, 0);
    copy(b, na);
    return c;
}

// ------------------------------------------------------------ pushout

std::size_t PushoutCylinder::underlying(std::size_t o) const {
    const std::size_t nb = f.tgt->size();
    return o < nb ? o : f.object_map[o - nb];
}

PushoutCylinder pushout_cylinder(const KFunctor& f) {
    PushoutCylinder p;
    p.f = f;
    const KCategory& a = *f.src;
    const KCategory& b = *f.tgt;
    const Field& k = a.field();
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    p.cylinder = tensor_product(a, *free_kcategory(a.field_ptr(), Presentation::iso_interval()));
    std::vector<std::string> names = b.objects();
    for (std::size_t x = 0; x < na; ++x) {
        std::string name = "~" + a.object(x);
        while (std::find(names.begin(), names.end(), name) != names.end()) name = "~" + name;
        names.push_back(name);
        p.adjoined.push_back(nb + x);
    }
    auto under = [&](std::size_t o) { return o < nb ? o : f.object_map[o - nb]; };
    std::vector<std::size_t> dims(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = b.hom_dim(under(x), under(y));
    auto c = std::make_shared<KCategory>(a.field_ptr(), names, dims);
    for (std::size_t x = 0; x < n; ++x) {
        c->set_identity(x, b.identity(under(x)));
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const std::size_t ux = under(x), uy = under(y), uz = under(z);
                for (std::size_t g = 0; g < b.hom_dim(uy, uz); ++g)
                    for (std::size_t h = 0; h < b.hom_dim(ux, uy); ++h)
                        c->set_composite(x, y, z, g, h, b.basis_composite(ux, uy, uz, g, h));
            }
    }
    p.category = c;
    std::vector<std::size_t> gobj(nb);
    for (std::size_t y = 0; y < nb; ++y) gobj[y] = y;
    p.g = KFunctor::blank(f.tgt, c, gobj);
    for (std::size_t x = 0; x < nb; ++x)
        for (std::size_t y = 0; y < nb; ++y) p.g.hom(x, y) = Matrix::identity(k, b.hom_dim(x, y));
    std::vector<std::size_t> hobj(2 * na);
    for (std::size_t x = 0; x < na; ++x) {
        hobj[2 * x] = f.object_map[x];
        hobj[2 * x + 1] = nb + x;
    }
    p.h = KFunctor::blank(p.cylinder, c, hobj);
    for (std::size_t s = 0; s < 2 * na; ++s)
        for (std::size_t t = 0; t < 2 * na; ++t) p.h.hom(s, t) = f.hom(s / 2, t / 2);
    return p;
}

namespace {

/// T1(1_x ⊗ u) and T1(1_x ⊗ u^-1).
Vector t1_unit(const PushoutCylinder& p, const Cocone& c, std::size_t x, bool forward) {
    const Vector& id = p.f.src->identity(x);
    return forward ? c.t1.apply(2 * x, 2 * x + 1, id) : c.t1.apply(2 * x + 1, 2 * x, id);
}

} // namespace

bool is_cocone(const PushoutCylinder& p, const Cocone& c) {
    if (!c.t0.validate().empty() || !c.t1.validate().empty()) return false;
    if (!same_category(c.t0.tgt, c.t1.tgt)) return false;
    if (!same_category(c.t0.src, p.f.tgt) || !same_category(c.t1.src, p.cylinder)) return false;
    const Field& k = p.f.src->field();
    const std::size_t na = p.f.src->size();
    for (std::size_t x = 0; x < na; ++x)
        if (c.t0.object_map[p.f.object_map[x]] != c.t1.object_map[2 * x]) return false;
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y) {
            const Matrix lhs = multiply(k, c.t0.hom(p.f.object_map[x], p.f.object_map[y]), p.f.hom(x, y));
            if (!equal(k, lhs, c.t1.hom(2 * x, 2 * y))) return false;
        }
    return true;
}

KFunctor pushout_mediator(const PushoutCylinder& p, const Cocone& c) {
    const KCategory& bt = *p.category;
    const KCategory& cc = *c.t0.tgt;
    const Field& k = bt.field();
    const std::size_t nb = p.f.tgt->size(), n = bt.size();
    std::vector<std::size_t> obj(n);
    for (std::size_t o = 0; o < n; ++o) obj[o] = o < nb ? c.t0.object_map[o] : c.t1.object_map[2 * (o - nb) + 1];
    KFunctor t = KFunctor::blank(p.category, c.t0.tgt, obj);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t us = p.underlying(s), ur = p.underlying(r);
            Matrix m = c.t0.hom(us, ur);  // B(us,ur) -> C(T0 us, T0 ur)
            std::size_t src = c.t0.object_map[us];
            if (s >= nb) {
                // precompose with T1(1_x ⊗ u^-1) : T1(x,1) -> T0 F x
                const Vector v = t1_unit(p, c, s - nb, false);
                m = multiply(k, cc.pre_composition(obj[s], src, c.t0.object_map[ur], v), m);
                src = obj[s];
            }
            if (r >= nb) {
                // postcompose with T1(1_y ⊗ u) : T0 F y -> T1(y,1)
                const Vector w = t1_unit(p, c, r - nb, true);
                m = multiply(k, cc.post_composition(src, c.t0.object_map[ur], obj[r], w), m);
            }
            t.hom(s, r) = std::move(m);
        }
    return t;
}

namespace {

/// Row-reduces incrementally and stops once the rank is full.
class RankAccumulator {
public:
    RankAccumulator(const Field& k, std::size_t cols) : k_(k), cols_(cols) {}
    bool full() const { return pivots_.size() == cols_; }
    std::size_t rank() const { return pivots_.size(); }
    void add(Vector row) {
        if (full()) return;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const Elem c = row[pivots_[i]];
            if (!k_.is_zero(c)) axpy(k_, k_.neg(c), rows_[i], row);
        }
        std::size_t p = 0;
        while (p < cols_ && k_.is_zero(row[p])) ++p;
        if (p == cols_) return;
        const Elem inv = k_.inv(row[p]);
        row = scale(k_, inv, row);
        for (auto& r : rows_)
            if (!k_.is_zero(r[p])) axpy(k_, k_.neg(r[p]), row, r);
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
    }

private:
    const Field& k_;
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace

std::size_t mediator_freedom(const PushoutCylinder& p, const Cocone& c, const KFunctor& t) {
    const KCategory& bt = *p.category;
    const KCategory& cc = *t.tgt;
    const Field& k = bt.field();
    const std::size_t n = bt.size(), nb = p.f.tgt->size();
    // unknown Δ_pq stored column by column
    std::vector<std::size_t> off(n * n + 1, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t i = s * n + r;
            off[i + 1] = off[i] + cc.hom_dim(t.object_map[s], t.object_map[r]) * bt.hom_dim(s, r);
        }
    const std::size_t unknowns = off.back();
    if (unknowns == 0) return 0;
    RankAccumulator acc(k, unknowns);
    auto rows_of = [&](std::size_t s, std::size_t r) { return cc.hom_dim(t.object_map[s], t.object_map[r]); };
    struct Generator {
        std::size_t s, r;
        Vector arrow;
        Vector image;
    };
    std::vector<Generator> gens;
    for (std::size_t s = 0; s < nb; ++s)
        for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t b = 0; b < bt.hom_dim(s, r); ++b)
                gens.push_back({s, r, unit_vector(k, bt.hom_dim(s, r), b), c.t0.hom(s, r).column(b)});
    const std::size_t nc = p.cylinder->size();
    for (std::size_t s = 0; s < nc; ++s)
        for (std::size_t r = 0; r < nc; ++r)
            for (std::size_t b = 0; b < p.cylinder->hom_dim(s, r); ++b)
                gens.push_back({p.h.object_map[s], p.h.object_map[r], p.h.hom(s, r).column(b), c.t1.hom(s, r).column(b)});
    // Δ(k) = 0 on generators
    for (const auto& g : gens) {
        const std::size_t rows = rows_of(g.s, g.r);
        for (std::size_t row = 0; row < rows && !acc.full(); ++row) {
            Vector eq(unknowns, k.zero());
            for (std::size_t col = 0; col < g.arrow.size(); ++col)
                eq[off[g.s * n + g.r] + col * rows + row] = g.arrow[col];
            acc.add(std::move(eq));
        }
    }
    // Δ(k∘b) = T(k)Δ(b) and Δ(b∘k) = Δ(b)T(k)
    for (const auto& g : gens) {
        if (acc.full()) break;
        for (std::size_t s = 0; s < n && !acc.full(); ++s) {
            // b : s -> g.s, k∘b : s -> g.r
            const Matrix post = cc.post_composition(t.object_map[s], t.object_map[g.s], t.object_map[g.r], g.image);
            const std::size_t rows_out = rows_of(s, g.r), rows_in = rows_of(s, g.s);
            for (std::size_t b = 0; b < bt.hom_dim(s, g.s); ++b) {
                const Vector kb = bt.compose(s, g.s, g.r, g.arrow, unit_vector(k, bt.hom_dim(s, g.s), b));
                for (std::size_t row = 0; row < rows_out; ++row) {
                    Vector eq(unknowns, k.zero());
                    for (std::size_t col = 0; col < kb.size(); ++col)
                        eq[off[s * n + g.r] + col * rows_out + row] = kb[col];
                    for (std::size_t j = 0; j < rows_in; ++j) {
                        std::size_t at = off[s * n + g.s] + b * rows_in + j;
                        eq[at] = k.sub(eq[at], post(row, j));
                    }
                    acc.add(std::move(eq));
                }
            }
            // b : g.r -> s, b∘k : g.s -> s
            const Matrix pre = cc.pre_composition(t.object_map[g.s], t.object_map[g.r], t.object_map[s], g.image);
            const std::size_t rows_o2 = rows_of(g.s, s), rows_i2 = rows_of(g.r, s);
            for (std::size_t b = 0; b < bt.hom_dim(g.r, s); ++b) {
                const Vector bk = bt.compose(g.s, g.r, s, unit_vector(k, bt.hom_dim(g.r, s), b), g.arrow);
                for (std::size_t row = 0; row < rows_o2; ++row) {
                    Vector eq(unknowns, k.zero());
                    for (std::size_t col = 0; col < bk.size(); ++col)
                        eq[off[g.s * n + s] + col * rows_o2 + row] = bk[col];
                    for (std::size_t j = 0; j < rows_i2; ++j) {
                        std::size_t at = off[g.r * n + s] + b * rows_i2 + j;
                        eq[at] = k.sub(eq[at], pre(row, j));
                    }
                    acc.add(std::move(eq));
                }
            }
        }
    }
    return unknowns - acc.rank();
}

namespace {

Vector random_unit(const KCategory& c, std::size_t x, std::mt19937_64& rng) {
    const std::size_t d = c.hom_dim(x, x);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vector u = random_vector(c.field(), d, rng);
        if (inverse_morphism(c, x, x, u)) return u;
    }
    return c.identity(x);
}

} // namespace

Cocone random_cocone(const PushoutCylinder& p, std::mt19937_64& rng) {
    const KCategory& b = *p.f.tgt;
    const KCategory& a = *p.f.src;
    const Field& k = b.field();
    const std::size_t nb = b.size(), na = a.size();
    std::vector<Vector> u(nb), uinv(nb);
    for (std::size_t y = 0; y < nb; ++y) {
        u[y] = random_unit(b, y, rng);
        uinv[y] = *inverse_morphism(b, y, y, u[y]);
    }
    std::vector<std::size_t> id(nb);
    for (std::size_t y = 0; y < nb; ++y) id[y] = y;
    Cocone c;
    c.t0 = KFunctor::blank(p.f.tgt, p.f.tgt, id);
    for (std::size_t y = 0; y < nb; ++y)
        for (std::size_t z = 0; z < nb; ++z)
            c.t0.hom(y, z) = multiply(k, b.post_composition(y, z, z, u[z]), b.pre_composition(y, y, z, uinv[y]));
    std::vector<Vector> theta(na), theta_inv(na);
    for (std::size_t x = 0; x < na; ++x) {
        const std::size_t fx = p.f.object_map[x];
        theta[x] = random_unit(b, fx, rng);
        theta_inv[x] = *inverse_morphism(b, fx, fx, theta[x]);
    }
    std::vector<std::size_t> obj(2 * na);
    for (std::size_t s = 0; s < 2 * na; ++s) obj[s] = p.f.object_map[s / 2];
    c.t1 = KFunctor::blank(p.cylinder, p.f.tgt, obj);
    for (std::size_t s = 0; s < 2 * na; ++s)
        for (std::size_t r = 0; r < 2 * na; ++r) {
            const std::size_t x = s / 2, y = r / 2, fx = obj[s], fy = obj[r];
            Matrix m = multiply(k, c.t0.hom(fx, fy), p.f.hom(x, y));
            if (s % 2 == 1) m = multiply(k, b.pre_composition(fx, fx, fy, theta_inv[x]), m);
            if (r % 2 == 1) m = multiply(k, b.post_composition(fx, fy, fy, theta[y]), m);
            c.t1.hom(s, r) = std::move(m);
        }
    return c;
}

MappingCylinder mapping_cylinder(const KFunctor& f) {
    MappingCylinder m;
    m.pushout = pushout_cylinder(f);
    const PushoutCylinder& p = m.pushout;
    const Field& k = f.src->field();
    const std::size_t na = f.src->size(), nb = f.tgt->size(), n = na + nb;
    std::vector<std::size_t> jobj(na);
    for (std::size_t x = 0; x < na; ++x) jobj[x] = nb + x;
    m.j = KFunctor::blank(f.src, p.category, jobj);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y) m.j.hom(x, y) = f.hom(x, y);
    std::vector<std::size_t> qobj(n);
    for (std::size_t o = 0; o < n; ++o) qobj[o] = p.underlying(o);
    m.q = KFunctor::blank(p.category, f.tgt, qobj);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) m.q.hom(s, r) = Matrix::identity(k, p.category->hom_dim(s, r));
    return m;
}

// ------------------------------------------------------------ cylinder object

CylinderObject cylinder_object(const CategoryPtr& a) {
    CylinderObject c;
    const Field& k = a->field();
    const std::size_t n = a->size();
    c.base = a;
    c.cylinder = tensor_product(*a, *free_kcategory(a->field_ptr(), Presentation::iso_interval()));
    c.coproduct = disjoint_union(*a, *a);
    std::vector<std::size_t> o0(n), o1(n), oj(2 * n), oq(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        o0[x] = 2 * x;
        o1[x] = 2 * x + 1;
        oj[x] = 2 * x;
        oj[n + x] = 2 * x + 1;
        oq[2 * x] = oq[2 * x + 1] = x;
    }
    c.j0 = KFunctor::blank(a, c.cylinder, o0);
    c.j1 = KFunctor::blank(a, c.cylinder, o1);
    c.j = KFunctor::blank(c.coproduct, c.cylinder, oj);
    c.q = KFunctor::blank(c.cylinder, a, oq);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Matrix id = Matrix::identity(k, a->hom_dim(x, y));
            c.j0.hom(x, y) = id;
            c.j1.hom(x, y) = id;
            c.j.hom(x, y) = id;
            c.j.hom(n + x, n + y) = id;
        }
    for (std::size_t s = 0; s < 2 * n; ++s)
        for (std::size_t r = 0; r < 2 * n; ++r) c.q.hom(s, r) = Matrix::identity(k, a->hom_dim(s / 2, r / 2));
    return c;
}

KFunctor homotopy_from_iso(const CylinderObject& c, const KFunctor& f0, const KFunctor& f1, const NaturalTransformation& eta) {
    const KCategory& b = *f0.tgt;
    const Field& k = b.field();
    const std::size_t n = c.base->size();
    if (eta.components.size() != n) throw Error(ErrorCode::invalid_input, "transformation has the wrong number of components");
    std::vector<Vector> inv(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto i = inverse_morphism(b, f0.object_map[x], f1.object_map[x], eta.components[x]);
        if (!i) throw Error(ErrorCode::invalid_input, "component is not invertible");
        inv[x] = *i;
    }
    std::vector<std::size_t> obj(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        obj[2 * x] = f0.object_map[x];
        obj[2 * x + 1] = f1.object_map[x];
    }
    KFunctor h = KFunctor::blank(c.cylinder, f0.tgt, obj);
    for (std::size_t s = 0; s < 2 * n; ++s)
        for (std::size_t r = 0; r < 2 * n; ++r) {
            const std::size_t x = s / 2, y = r / 2;
            const std::size_t p0x = f0.object_map[x], p0y = f0.object_map[y], p1x = f1.object_map[x], p1y = f1.object_map[y];
            if (s % 2 == 0 && r % 2 == 0) h.hom(s, r) = f0.hom(x, y);
            else if (s % 2 == 1 && r % 2 == 1) h.hom(s, r) = f1.hom(x, y);
            else if (s % 2 == 0) h.hom(s, r) = multiply(k, b.post_composition(p0x, p0y, p1y, eta.components[y]), f0.hom(x, y));
            else h.hom(s, r) = multiply(k, b.pre_composition(p1x, p0x, p0y, inv[x]), f0.hom(x, y));
        }
    return h;
}

NaturalTransformation iso_from_homotopy(const CylinderObject& c, const KFunctor& h) {
    NaturalTransformation eta;
    for (std::size_t x = 0; x < c.base->size(); ++x) eta.components.push_back(h.apply(2 * x, 2 * x + 1, c.base->identity(x)));
    return eta;
}

bool is_homotopy(const CylinderObject& c, const KFunctor& h, const KFunctor& f0, const KFunctor& f1) {
    if (!h.validate().empty()) return false;
    return same_functor(compose(h, c.j0), f0) && same_functor(compose(h, c.j1), f1);
}

// ------------------------------------------------------------ saturation

const char* to_string(WitnessStatus s) noexcept {
    switch (s) {
    case WitnessStatus::found: return "found";
    case WitnessStatus::exhausted: return "exhausted";
    case WitnessStatus::unknown: return "unknown";
    }
    return "?";
}

bool SaturationReport::all_found() const {
    if (zero.status != WitnessStatus::found) return false;
    for (const auto& s : splittings)
        if (s.status != WitnessStatus::found) return false;
    for (const auto& s : sums)
        if (s.status != WitnessStatus::found) return false;
    return true;
}

namespace {

std::size_t corner_dim(const KCategory& d, std::size_t x, const Vector& e) {
    const Field& k = d.field();
    const std::size_t n = d.hom_dim(x, x);
    if (n == 0) return 0;
    std::vector<Vector> cols;
    for (std::size_t m = 0; m < n; ++m) cols.push_back(d.compose(x, x, x, e, d.compose(x, x, x, unit_vector(k, n, m), e)));
    return rank(k, Matrix::from_columns(k, n, cols));
}

SplitWitness search_split(const KCategory& d, std::size_t x, const Vector& e, std::uint64_t budget, std::uint64_t& examined) {
    const Field& k = d.field();
    SplitWitness w;
    w.object = x;
    w.idempotent = e;
    if (!equal(k, d.compose(x, x, x, e, e), e)) throw Error(ErrorCode::not_idempotent, "saturation check: e∘e != e");
    const std::size_t target = corner_dim(d, x, e);
    bool complete = true;
    std::uint64_t used = 0;
    for (std::size_t r = 0; r < d.size(); ++r) {
        if (d.hom_dim(r, r) != target) continue;
        const std::size_t dp = d.hom_dim(x, r);
        bool stopped = false;
        const bool finished = enumerate_vectors(k, dp, budget, used, [&](const Vector& p) {
            const Matrix sys = vstack(k, {d.post_composition(r, x, r, p), d.pre_composition(x, r, x, p)});
            if (auto i = solve(k, sys, concat(d.identity(r), e))) {
                w.status = WitnessStatus::found;
                w.retract = r;
                w.inclusion = *i;
                w.projection = p;
                return true;
            }
            return false;
        }, stopped);
        if (stopped) break;
        if (!finished) complete = false;
    }
    examined += used;
    if (w.status != WitnessStatus::found) w.status = complete ? WitnessStatus::exhausted : WitnessStatus::unknown;
    return w;
}

SumWitness search_sum(const KCategory& d, std::size_t a, std::size_t b, std::uint64_t budget, std::uint64_t& examined) {
    const Field& k = d.field();
    SumWitness w;
    w.first = a;
    w.second = b;
    const std::size_t daa = d.hom_dim(a, a), dab = d.hom_dim(a, b), dba = d.hom_dim(b, a), dbb = d.hom_dim(b, b);
    bool complete = true;
    std::uint64_t used = 0;
    for (std::size_t s = 0; s < d.size(); ++s) {
        if (d.hom_dim(s, s) != daa + dab + dba + dbb) continue;
        if (d.hom_dim(s, a) != daa + dba || d.hom_dim(s, b) != dab + dbb) continue;
        if (d.hom_dim(a, s) != daa + dab || d.hom_dim(b, s) != dba + dbb) continue;
        const std::size_t h1 = d.hom_dim(s, a), h2 = d.hom_dim(s, b);
        const std::size_t ni1 = d.hom_dim(a, s), ni2 = d.hom_dim(b, s);
        bool stopped = false;
        const bool finished = enumerate_vectors(k, h1 + h2, budget, used, [&](const Vector& pp) {
            const Vector p1 = slice(pp, 0, h1), p2 = slice(pp, h1, h2);
            // unknowns (i1, i2)
            auto pad = [&](const Matrix& m, bool first) {
                Matrix z = Matrix::zero(k, m.rows(), ni1 + ni2);
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c) z(r, (first ? 0 : ni1) + c) = m(r, c);
                return z;
            };
            const Matrix e1 = pad(d.post_composition(a, s, a, p1), true);
            const Matrix e2 = pad(d.post_composition(b, s, b, p2), false);
            const Matrix e3 = add(k, pad(d.pre_composition(s, a, s, p1), true), pad(d.pre_composition(s, b, s, p2), false));
            const Matrix e4 = pad(d.post_composition(b, s, a, p1), false);
            const Matrix e5 = pad(d.post_composition(a, s, b, p2), true);
            const Matrix sys = vstack(k, {e1, e2, e3, e4, e5});
            Vector rhs = concat(concat(d.identity(a), d.identity(b)), d.identity(s));
            rhs = concat(concat(rhs, zero_vector(k, dba)), zero_vector(k, dab));
            if (auto i = solve(k, sys, rhs)) {
                w.status = WitnessStatus::found;
                w.sum = s;
                w.i1 = slice(*i, 0, ni1);
                w.i2 = slice(*i, ni1, ni2);
                w.p1 = p1;
                w.p2 = p2;
                return true;
            }
            return false;
        }, stopped);
        if (stopped) break;
        if (!finished) complete = false;
    }
    examined += used;
    if (w.status != WitnessStatus::found) w.status = complete ? WitnessStatus::exhausted : WitnessStatus::unknown;
    return w;
}

} // namespace

SaturationReport saturation_witness_search(const KCategory& d, const SaturationOptions& opts) {
    SaturationReport out;
    const Field& k = d.field();
    for (std::size_t x = 0; x < d.size(); ++x)
        if (d.hom_dim(x, x) == 0) {
            out.zero.status = WitnessStatus::found;
            out.zero.object = x;
            break;
        }
    std::vector<std::pair<std::size_t, Vector>> idems;
    if (opts.idempotents) {
        idems = *opts.idempotents;
    } else {
        for (std::size_t x = 0; x < d.size(); ++x) {
            const std::size_t n = d.hom_dim(x, x);
            if (!k.is_finite()) {
                idems.emplace_back(x, d.identity(x));
                continue;
            }
            std::uint64_t used = 0;
            bool stopped = false;
            enumerate_vectors(k, n, opts.budget, used, [&](const Vector& e) {
                if (equal(k, d.compose(x, x, x, e, e), e)) idems.emplace_back(x, e);
                return false;
            }, stopped);
            out.examined += used;
        }
    }
    for (const auto& [x, e] : idems) {
        if (x >= d.size() || e.size() != d.hom_dim(x, x)) throw Error(ErrorCode::object_mismatch, "idempotent does not fit its object");
        out.splittings.push_back(search_split(d, x, e, opts.budget, out.examined));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (opts.pairs) pairs = *opts.pairs;
    else
        for (std::size_t a = 0; a < d.size(); ++a)
            for (std::size_t b = a; b < d.size(); ++b) pairs.emplace_back(a, b);
    for (const auto& [a, b] : pairs) {
        if (a >= d.size() || b >= d.size()) throw Error(ErrorCode::object_mismatch, "pair names an unknown object");
        out.sums.push_back(search_sum(d, a, b, opts.budget, out.examined));
    }
    return out;
}

bool verify_split_witness(const KCategory& d, const SplitWitness& w) {
    if (w.status != WitnessStatus::found) return false;
    const Field& k = d.field();
    const std::size_t x = w.object, r = w.retract;
    if (x >= d.size() || r >= d.size()) return false;
    if (w.inclusion.size() != d.hom_dim(r, x) || w.projection.size() != d.hom_dim(x, r)) return false;
    return equal(k, d.compose(r, x, r, w.projection, w.inclusion), d.identity(r)) &&
           equal(k, d.compose(x, r, x, w.inclusion, w.projection), w.idempotent);
}

bool verify_sum_witness(const KCategory& d, const SumWitness& w) {
    if (w.status != WitnessStatus::found) return false;
    const Field& k = d.field();
    const std::size_t a = w.first, b = w.second, s = w.sum;
    if (a >= d.size() || b >= d.size() || s >= d.size()) return false;
    if (w.i1.size() != d.hom_dim(a, s) || w.i2.size() != d.hom_dim(b, s) || w.p1.size() != d.hom_dim(s, a) ||
        w.p2.size() != d.hom_dim(s, b))
        return false;
    const Vector sum = add(k, d.compose(s, a, s, w.i1, w.p1), d.compose(s, b, s, w.i2, w.p2));
    return equal(k, d.compose(a, s, a, w.p1, w.i1), d.identity(a)) && equal(k, d.compose(b, s, b, w.p2, w.i2), d.identity(b)) &&
           equal(k, sum, d.identity(s));
}

// ------------------------------------------------------------ Ho calculus

HoMap ho_identity(const CategoryPtr& a) { return HoMap{inclusion(a)}; }

HoMap ho_from_functor(const KFunctor& f) { return HoMap{to_view(f, std::make_shared<const SatView>(f.tgt))}; }

HoMap ho_compose(const HoMap& psi, const HoMap& phi) {
    if (!same_category(phi.target(), psi.source())) throw Error(ErrorCode::object_mismatch, "Ho maps are not composable");
    const SaturatedExtension ext(psi.rep);
    return HoMap{compose(ext, phi.rep)};
}

IsoTest ho_equal(const HoMap& a, const HoMap& b, const SearchOptions& opts) {
    return view_functor_iso_test(a.rep, b.rep, opts);
}

MoritaReport ho_is_iso(const HoMap& phi) { return is_morita_equivalence(phi.rep); }

} // namespace moritakit
