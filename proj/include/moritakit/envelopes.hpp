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
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "moritakit/lincat.hpp"

namespace moritakit {

using Word = std::vector<std::size_t>;

/// An object of the saturation: a word of base objects and an idempotent of
/// the ambient matrix space End(word).
struct SatObject {
    Word word;
    Vector idem;
};

/// The saturation of a finite presentation, computed on demand.
///
/// Morphisms are carried as elements of the ambient matrix space
/// Mat(w, w'): blocks (i,j) hold B(w_j, w'_i), stored block by block in
/// row-major order. Hom((w,e),(w',e')) is the subspace e'·Mat(w,w')·e with the
/// basis given by the pivot columns of m -> e'∘m∘e.
class SatView {
public:
    explicit SatView(CategoryPtr base);

    const CategoryPtr& base() const noexcept { return base_; }
    const Field& field() const noexcept { return base_->field(); }
    const FieldPtr& field_ptr() const noexcept { return base_->field_ptr(); }

    std::size_t ambient_dim(const Word& src, const Word& tgt) const;
    /// Offset of block (i,j) (i indexes tgt, j indexes src) inside Mat(src,tgt).
    std::size_t block_offset(const Word& src, const Word& tgt, std::size_t i, std::size_t j) const;
    Vector ambient_compose(const Word& u, const Word& v, const Word& w, const Vector& b, const Vector& a) const;
    Vector ambient_identity(const Word& w) const;
    Vector ambient_zero(const Word& src, const Word& tgt) const { return zero_vector(field(), ambient_dim(src, tgt)); }

    SatObject object(std::size_t x) const;
    SatObject object(const std::string& name) const { return object(base_->index(name)); }
    SatObject plus(const Word& w) const;
    SatObject zero_object() const { return plus({}); }
    bool is_idempotent(const SatObject& s) const;
    /// Throws ObjectMismatch or NotIdempotent.
    void require_object(const SatObject& s) const;

    const Subspace& hom(const SatObject& s, const SatObject& t) const;
    std::size_t hom_dim(const SatObject& s, const SatObject& t) const { return hom(s, t).dim(); }
    bool contains(const SatObject& s, const SatObject& t, const Vector& ambient) const;
    Vector embed(const SatObject& s, const SatObject& t, const Vector& coords) const;
    Vector coordinates(const SatObject& s, const SatObject& t, const Vector& ambient) const;
    /// g∘f in coordinates, f: s->t, g: t->u.
    Vector compose(const SatObject& s, const SatObject& t, const SatObject& u, const Vector& g, const Vector& f) const;
    Vector identity(const SatObject& s) const { return coordinates(s, s, s.idem); }

    struct DirectSum {
        SatObject object;
        std::vector<Vector> injections;   // ambient, summand -> sum
        std::vector<Vector> projections;  // ambient, sum -> summand
    };
    DirectSum direct_sum(const std::vector<SatObject>& parts) const;

    struct Splitting {
        SatObject object;
        Vector inclusion;   // ambient, image -> s
        Vector projection;  // ambient, s -> image
    };
    /// Splits an idempotent f of End(s), given in the ambient space.
    Splitting split(const SatObject& s, const Vector& f) const;

    std::string word_name(const Word& w) const;

private:
    std::string key(const SatObject& s, const SatObject& t) const;

    CategoryPtr base_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const Subspace>> cache_;
};

using ViewPtr = std::shared_ptr<const SatView>;

/// A full subcategory of a view, materialized as a finite presentation.
CategoryPtr materialize(const SatView& view, const std::vector<SatObject>& objects, const std::vector<std::string>& names);

/// Words of length 1..bound in shortlex order followed by the empty word, so
/// the first |ob A| objects are A itself. Names are joined by "+", the empty
/// word is "()".
CategoryPtr additive_hull(const CategoryPtr& a, std::size_t bound);
std::vector<Word> words_up_to(std::size_t alphabet, std::size_t bound);

/// F_⊕ between hulls of equal bound.
KFunctor functor_plus(const KFunctor& f, std::size_t bound);
KFunctor functor_plus(const KFunctor& f, std::size_t src_bound, std::size_t tgt_bound);

struct KaroubiObject {
    std::string object;
    Vector idempotent;
};
/// Identity objects keep their names; listed idempotents become "x.e0", ...
CategoryPtr karoubi(const CategoryPtr& a, const std::vector<KaroubiObject>& idempotents);

/// A K-linear functor from a finite presentation into a saturation view.
/// hom(x,y) maps Hom_A(x,y) into the ambient space of (F x, F y).
struct ViewFunctor {
    CategoryPtr src;
    ViewPtr tgt;
    std::vector<SatObject> objects;
    std::vector<Matrix> homs;

    const Matrix& hom(std::size_t x, std::size_t y) const { return homs[x * src->size() + y]; }
    Matrix& hom(std::size_t x, std::size_t y) { return homs[x * src->size() + y]; }
    Vector apply(std::size_t x, std::size_t y, const Vector& f) const;
    std::vector<std::string> validate() const;
    /// Hom matrix in view coordinates.
    Matrix hom_coordinates(std::size_t x, std::size_t y) const;
};

/// ι_A : A -> SatView(A), x -> (x,1).
ViewFunctor inclusion(const CategoryPtr& a, const ViewPtr& view);
ViewFunctor inclusion(const CategoryPtr& a);
/// ι_B ∘ F.
ViewFunctor to_view(const KFunctor& f, const ViewPtr& view_of_target);

/// The extension of G : A -> SatView(C) to SatView(A) -> SatView(C).
class SaturatedExtension {
public:
    explicit SaturatedExtension(ViewFunctor g);
    const ViewFunctor& generator() const noexcept { return g_; }
    SatObject map_object(const SatObject& s) const;
    /// Maps an ambient morphism Mat(u,v) over A to Mat(G u, G v) over C.
    Vector map_morphism(const Word& u, const Word& v, const Vector& m) const;

private:
    Word image_word(const Word& w) const;
    ViewFunctor g_;
};

/// G̃ ∘ F for F : A -> SatView(B) and the extension of G : B -> SatView(C).
ViewFunctor compose(const SaturatedExtension& g, const ViewFunctor& f);

/// A view functor as an ordinary functor into the materialized full
/// subcategory on `objects` (the functor's images are appended when absent).
struct MaterializedFunctor {
    CategoryPtr category;
    KFunctor functor;
};
MaterializedFunctor materialize(const ViewFunctor& f, const std::vector<SatObject>& extra = {});

/// Decides whether two parallel view functors are isomorphic.
IsoTest view_functor_iso_test(const ViewFunctor& f0, const ViewFunctor& f1, const SearchOptions& opts = {});

} // namespace moritakit
