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

#include "moritakit/acceptance/sampling.hpp"

#include <string>

#include "moritakit/azumaya.hpp"
#include "moritakit/morita.hpp"

namespace moritakit::acceptance {

std::size_t uniform(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

Elem random_scalar(const Field& k, Rng& rng) {
    if (k.is_finite()) return k.element(rng() % k.order());
    return k.from_int(static_cast<long long>(rng() % 5) - 2);
}

Vector random_vector(const Field& k, std::size_t n, Rng& rng) {
    Vector v(n);
    for (auto& x : v) x = random_scalar(k, rng);
    return v;
}

Matrix random_invertible(const Field& k, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m = Matrix::zero(k, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(k, rng);
        if (is_invertible(k, m)) return m;
    }
}

CategoryPtr rebase(const KCategory& c, const std::vector<Matrix>& p) {
    const Field& k = c.field();
    const std::size_t n = c.size();
    std::vector<std::size_t> dims(n * n);
    std::vector<Matrix> inv(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            dims[x * n + y] = c.hom_dim(x, y);
            inv[x * n + y] = *inverse(k, p[x * n + y]);
        }
    auto out = std::make_shared<KCategory>(c.field_ptr(), c.objects(), dims);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (c.hom_dim(x, y) == 0 || c.hom_dim(y, z) == 0 || c.hom_dim(x, z) == 0) continue;
                for (std::size_t b = 0; b < c.hom_dim(y, z); ++b)
                    for (std::size_t a = 0; a < c.hom_dim(x, y); ++a) {
                        const Vector g = p[y * n + z].column(b);
                        const Vector f = p[x * n + y].column(a);
                        out->set_composite(x, y, z, b, a, apply(k, inv[x * n + z], c.compose(x, y, z, g, f)));
                    }
            }
    for (std::size_t x = 0; x < n; ++x) out->set_identity(x, apply(k, inv[x * n + x], c.identity(x)));
    return out;
}

CategoryPtr random_rebase(const KCategory& c, Rng& rng, std::vector<Matrix>* change) {
    const std::size_t n = c.size();
    std::vector<Matrix> p;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) p.push_back(random_invertible(c.field(), c.hom_dim(x, y), rng));
    if (change) *change = p;
    return rebase(c, p);
}

KFunctor retarget(const KFunctor& f, const CategoryPtr& rebased, const std::vector<Matrix>& change) {
    const Field& k = f.tgt->field();
    const std::size_t m = f.tgt->size();
    KFunctor g = f;
    g.tgt = rebased;
    for (std::size_t x = 0; x < f.src->size(); ++x)
        for (std::size_t y = 0; y < f.src->size(); ++y) {
            const Matrix& p = change[f.object_map[x] * m + f.object_map[y]];
            g.hom(x, y) = multiply(k, *inverse(k, p), f.hom(x, y));
        }
    return g;
}

std::vector<Vector> idempotents(const KCategory& c, std::size_t x) {
    const Field& k = c.field();
    const std::size_t d = c.hom_dim(x, x);
    std::vector<Vector> out;
    if (!k.is_finite()) return out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= k.order();
        if (total > 4096) return out;
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Vector v(d);
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = k.element(r % k.order());
            r /= k.order();
        }
        if (equal(k, c.compose(x, x, x, v, v), v)) out.push_back(std::move(v));
    }
    return out;
}

namespace {

CategoryPtr seed_category(const FieldPtr& k, Rng& rng) {
    switch (uniform(rng, 11)) {
    case 0: return algebra_as_category(Algebra::ground(k));
    case 1: return algebra_as_category(Algebra::split(k, 2));
    case 2: return algebra_as_category(Algebra::polynomial_quotient(k, {k->zero(), k->zero(), k->one()}));
    case 3: return algebra_as_category(Algebra::matrix(k, 2));
    case 4: return generator_category(GeneratorKind::e1, k);
    case 5: return generator_category(GeneratorKind::r1, k);
    case 6: return generator_category(GeneratorKind::s2, k);
    case 7: return free_kcategory(k, Presentation::one_arrow());
    case 8: return free_kcategory(k, Presentation::parallel_pair());
    case 9: return free_kcategory(k, Presentation::iso_interval());
    default: {
        if (k->kind() == FieldKind::prime)
            return algebra_as_category(Algebra::field_over_base(Field::galois_field(k->characteristic(), 2)));
        return disjoint_union(*algebra_as_category(Algebra::ground(k)), *algebra_as_category(Algebra::split(k, 2)));
    }
    }
}

std::vector<std::string> names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

/// Single letters with their idempotents, plus two-letter words.
std::vector<SatObject> candidates(const SatView& view) {
    const KCategory& b = *view.base();
    std::vector<SatObject> out;
    for (std::size_t x = 0; x < b.size(); ++x)
        for (auto& e : idempotents(b, x)) out.push_back(SatObject{{x}, e});
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = x; y < b.size(); ++y) out.push_back(view.plus({x, y}));
    return out;
}

/// The full subcategory on `objs` (repetitions allowed) and its inclusion.
KFunctor full_subcategory(const CategoryPtr& b, const std::vector<std::size_t>& objs) {
    const std::size_t n = objs.size();
    std::vector<std::size_t> dims(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = b->hom_dim(objs[x], objs[y]);
    auto a = std::make_shared<KCategory>(b->field_ptr(), names("a", n), dims);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t g = 0; g < dims[y * n + z]; ++g)
                    for (std::size_t f = 0; f < dims[x * n + y]; ++f)
                        a->set_composite(x, y, z, g, f, b->basis_composite(objs[x], objs[y], objs[z], g, f));
    for (std::size_t x = 0; x < n; ++x) a->set_identity(x, b->identity(objs[x]));
    KFunctor f = KFunctor::blank(a, b, objs);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) f.hom(x, y) = Matrix::identity(b->field(), dims[x * n + y]);
    return f;
}

/// Identities only; distinct objects have zero homs.
KFunctor discrete_inclusion(const CategoryPtr& b, const std::vector<std::size_t>& objs) {
    const std::size_t n = objs.size();
    std::vector<std::size_t> dims(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) dims[x * n + x] = 1;
    auto a = std::make_shared<KCategory>(b->field_ptr(), names("d", n), dims);
    const Field& k = b->field();
    for (std::size_t x = 0; x < n; ++x) {
        a->set_composite(x, x, x, 0, 0, {k.one()});
        a->set_identity(x, {k.one()});
    }
    KFunctor f = KFunctor::blank(a, b, objs);
    for (std::size_t x = 0; x < n; ++x) f.hom(x, x) = Matrix::from_columns(k, b->hom_dim(objs[x], objs[x]), {b->identity(objs[x])});
    return f;
}

/// F precomposed with the identification of a rebased source.
KFunctor rebase_source(const KFunctor& f, Rng& rng) {
    std::vector<Matrix> p;
    CategoryPtr a = random_rebase(*f.src, rng, &p);
    KFunctor g = f;
    g.src = a;
    const std::size_t n = a->size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) g.hom(x, y) = multiply(a->field(), f.hom(x, y), p[x * n + y]);
    return g;
}

KFunctor rebase_target(const KFunctor& f, Rng& rng) {
    std::vector<Matrix> p;
    CategoryPtr b = random_rebase(*f.tgt, rng, &p);
    return retarget(f, b, p);
}

} // namespace

CategoryPtr random_category(const FieldPtr& k, std::size_t max_objects, std::size_t max_hom_dim, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const CategoryPtr seed = seed_category(k, rng);
        SatView view(seed);
        const auto cands = candidates(view);
        const std::size_t n = 1 + uniform(rng, max_objects);
        std::vector<SatObject> objs;
        for (std::size_t i = 0; i < n; ++i) objs.push_back(cands[uniform(rng, cands.size())]);
        bool small = true;
        for (const auto& s : objs)
            for (const auto& t : objs)
                if (view.hom_dim(s, t) > max_hom_dim) small = false;
        if (!small) continue;
        // K itself dominates otherwise.
        if (n == 1 && view.hom_dim(objs[0], objs[0]) == 1 && uniform(rng, 3) != 0) continue;
        return random_rebase(*materialize(view, objs, names("o", n)), rng);
    }
    return algebra_as_category(Algebra::ground(k));
}

std::vector<SatObject> random_images(const KCategory& c, Rng& rng, std::size_t max_images) {
    std::vector<SatObject> pool;
    for (std::size_t x = 0; x < c.size(); ++x)
        for (auto& e : idempotents(c, x)) pool.push_back(SatObject{{x}, e});
    std::vector<SatObject> out;
    const std::size_t n = 1 + uniform(rng, max_images);
    for (std::size_t i = 0; i < n && !pool.empty(); ++i) out.push_back(pool[uniform(rng, pool.size())]);
    return out;
}

KFunctor random_functor(const FieldPtr& k, std::size_t max_objects, std::size_t max_hom_dim, Rng& rng) {
    const CategoryPtr b = random_category(k, max_objects, max_hom_dim, rng);
    const std::size_t n = 1 + uniform(rng, max_objects);
    std::vector<std::size_t> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back(uniform(rng, b->size()));
    if (uniform(rng, 4) == 0) return discrete_inclusion(b, objs);
    return rebase_source(full_subcategory(b, objs), rng);
}

Vector random_rank_one_idempotent(const FieldPtr& k, std::size_t n, Rng& rng) {
    const Matrix p = random_invertible(*k, n, rng);
    const Matrix pinv = *inverse(*k, p);
    Matrix e11 = Matrix::zero(*k, n, n);
    e11(0, 0) = k->one();
    return flatten(multiply(*k, multiply(*k, p, e11), pinv));
}

KFunctor random_morita_equivalence(const FieldPtr& k, Rng& rng) {
    switch (uniform(rng, 4)) {
    case 0: return KFunctor::identity(random_category(k, 2, 2, rng));
    case 1: {
        const Algebra m2 = Algebra::matrix(k, 2);
        const HoMap corner = corner_homap(m2, random_rank_one_idempotent(k, 2, rng));
        const MaterializedFunctor mf = materialize(corner.rep, {corner.rep.tgt->object(0)});
        return rebase_target(mf.functor, rng);
    }
    case 2: {
        const CategoryPtr a = random_category(k, 2, 2, rng);
        auto view = std::make_shared<const SatView>(a);
        const auto cands = candidates(*view);
        const MaterializedFunctor mf = materialize(inclusion(a, view), {cands[uniform(rng, cands.size())]});
        return rebase_target(mf.functor, rng);
    }
    default: return mapping_cylinder(random_functor(k, 2, 2, rng)).q;
    }
}

Bimodule random_conjugate(const Bimodule& m, Rng& rng) {
    const Field& k = m.field();
    const Matrix p = random_invertible(k, m.dim, rng);
    const Matrix pinv = *inverse(k, p);
    Bimodule out = m;
    for (auto& a : out.left_action) a = multiply(k, pinv, multiply(k, a, p));
    for (auto& a : out.right_action) a = multiply(k, pinv, multiply(k, a, p));
    return out;
}

Bimodule random_projective_bimodule(const FieldPtr& k, Rng& rng) {
    Algebra s;
    switch (uniform(rng, 4)) {
    case 0: s = Algebra::ground(k); break;
    case 1: s = Algebra::split(k, 2); break;
    case 2: s = Algebra::matrix(k, 2); break;
    default: s = Algebra::polynomial_quotient(k, {k->zero(), k->zero(), k->one()}); break;
    }
    const CategoryPtr c = algebra_as_category(s);
    const auto idems = idempotents(*c, 0);
    Bimodule m;
    switch (uniform(rng, 4)) {
    case 0: m = Bimodule::regular(s); break;
    case 1: m = Bimodule::free(s, 2); break;
    case 2: m = Bimodule::row_ideal(s, idems[uniform(rng, idems.size())]); break;
    default: m = Bimodule::from_homomorphism(Algebra::ground(k), s, Matrix::from_columns(*k, s.dim, {s.unit})); break;
    }
    return random_conjugate(m, rng);
}

} // namespace moritakit::acceptance
