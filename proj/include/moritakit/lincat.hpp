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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "moritakit/algebra.hpp"
#include "moritakit/field.hpp"
#include "moritakit/linalg.hpp"

namespace moritakit {

/// A finite K-linear category presented by structure constants.
///
/// Objects are strings; Hom(x,y) has a fixed ordered basis of size
/// hom_dim(x,y). For every triple (x,y,z) the composition of basis element
/// b of Hom(y,z) after basis element a of Hom(x,y) is a coefficient vector
/// in Hom(x,z).
class KCategory {
public:
    KCategory() = default;
    /// `dims[x*n+y]` is dim Hom(x,y). Compositions and identities start at 0.
    KCategory(FieldPtr field, std::vector<std::string> objects, std::vector<std::size_t> dims);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Field& field() const noexcept { return *field_; }
    std::size_t size() const noexcept { return objects_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::string& object(std::size_t i) const { return objects_.at(i); }
    std::size_t index(const std::string& name) const;
    bool has_object(const std::string& name) const { return index_.count(name) != 0; }
    std::size_t hom_dim(std::size_t x, std::size_t y) const { return dims_[x * size() + y]; }

    /// Coefficients of (basis b of Hom(y,z)) ∘ (basis a of Hom(x,y)).
    Vector basis_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a) const;
    void set_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a, const Vector& v);
    const Vector& identity(std::size_t x) const { return ids_.at(x); }
    void set_identity(std::size_t x, Vector v);

    /// g ∘ f for g in Hom(y,z), f in Hom(x,y).
    Vector compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const;
    /// Matrix of f -> g∘f, Hom(x,y) -> Hom(x,z).
    Matrix post_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& g) const;
    /// Matrix of g -> g∘f, Hom(y,z) -> Hom(x,z).
    Matrix pre_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& f) const;

    /// Violated axioms; empty iff the presentation is a K-category.
    std::vector<std::string> validate() const;
    void require_valid() const;

    /// Exact equality of presentations (names, dims, constants).
    bool same_presentation(const KCategory& other) const;

    /// The raw composition block of (x,y,z), layout [(b*dim(x,y)+a)*dim(x,z)+c].
    const Vector& composition_block(std::size_t x, std::size_t y, std::size_t z) const {
        return comp_[(x * size() + y) * size() + z];
    }

private:
    FieldPtr field_;
    std::vector<std::string> objects_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> dims_;
    std::vector<Vector> comp_;
    std::vector<Vector> ids_;
};

using CategoryPtr = std::shared_ptr<const KCategory>;

struct Morphism {
    std::size_t src = 0;
    std::size_t tgt = 0;
    Vector coeffs;
};

/// A K-linear functor between finite presentations. hom(x,y) is the
/// dim Hom(Fx,Fy) x dim Hom(x,y) matrix of F on Hom(x,y).
struct KFunctor {
    CategoryPtr src;
    CategoryPtr tgt;
    std::vector<std::size_t> object_map;
    std::vector<Matrix> homs;

    const Matrix& hom(std::size_t x, std::size_t y) const { return homs[x * src->size() + y]; }
    Matrix& hom(std::size_t x, std::size_t y) { return homs[x * src->size() + y]; }
    Vector apply(std::size_t x, std::size_t y, const Vector& f) const;

    /// Violated functor axioms; empty iff F is a K-linear functor.
    std::vector<std::string> validate() const;
    void require_valid() const;

    static KFunctor identity(const CategoryPtr& a);
    /// A functor with the given object map and zero hom matrices.
    static KFunctor blank(const CategoryPtr& src, const CategoryPtr& tgt, std::vector<std::size_t> object_map);
};

/// g ∘ f
KFunctor compose(const KFunctor& g, const KFunctor& f);
bool same_functor(const KFunctor& a, const KFunctor& b);

/// Components η_x in Hom(F0 x, F1 x).
struct NaturalTransformation {
    std::vector<Vector> components;
};

bool is_natural(const KFunctor& f0, const KFunctor& f1, const NaturalTransformation& eta);
/// Inverse of f in Hom(x,y), as an element of Hom(y,x), if it exists.
std::optional<Vector> inverse_morphism(const KCategory& c, std::size_t x, std::size_t y, const Vector& f);
bool is_natural_isomorphism(const KFunctor& f0, const KFunctor& f1, const NaturalTransformation& eta);

/// Basis (columns) of the space of natural transformations F0 -> F1; a column
/// stacks the components in object order.
Matrix nat_trans_space(const KFunctor& f0, const KFunctor& f1);
NaturalTransformation unpack_transformation(const KFunctor& f0, const KFunctor& f1, const Vector& stacked);

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v) noexcept;

struct SearchOptions {
    std::uint64_t budget = 1u << 16;
    std::uint64_t seed = 42;
    std::size_t random_trials = 40;
};

/// Outcome of searching a linear space for an element with an open property.
struct CombinationSearch {
    Verdict verdict = Verdict::no;
    Vector coefficients;  // in the given basis
    std::uint64_t examined = 0;
    bool exhaustive = false;
};

/// Looks for a combination of the basis columns satisfying `accept`. Finite
/// fields: random probes, then exhaustive enumeration when q^dim fits the
/// budget (a true decision). Q: enumeration of {-1,0,1} coefficients up to the
/// budget, then random rational probes; never answers `no`.
CombinationSearch find_combination(const Field& f, const Matrix& basis, const std::function<bool(const Vector&)>& accept,
                                   const SearchOptions& opts);

struct IsoTest {
    Verdict verdict = Verdict::no;
    std::optional<NaturalTransformation> witness;
    std::size_t space_dim = 0;
    std::uint64_t examined = 0;
};

IsoTest functor_iso_test(const KFunctor& f0, const KFunctor& f1, const SearchOptions& opts = {});

// ---------------------------------------------------------------- constructors

/// One object "*" with End = R.
CategoryPtr algebra_as_category(const Algebra& r, const std::string& object = "*");
/// End(x) as an algebra in the hom basis.
Algebra endomorphism_algebra(const KCategory& c, std::size_t x);
/// The ground field as a one-object category.
CategoryPtr unit_category(const FieldPtr& f);
/// The empty category.
CategoryPtr empty_category(const FieldPtr& f);

/// An ordinary small category with finite hom-sets.
struct Presentation {
    struct Arrow {
        std::string name;
        std::size_t src;
        std::size_t tgt;
    };
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<std::size_t> identities;             // arrow index per object
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;  // (g,f) -> g∘f

    static Presentation bullet();
    static Presentation one_arrow();
    static Presentation parallel_pair();
    static Presentation iso_interval();
};

/// F_K C: hom(x,y) has the arrows x -> y (in listed order) as basis.
CategoryPtr free_kcategory(const FieldPtr& f, const Presentation& c);

/// Objects "(x,y)" in lexicographic order, Hom basis index a*dim B(y,y')+b.
CategoryPtr tensor_product(const KCategory& a, const KCategory& b);
/// F ⊗ G between tensor products.
KFunctor tensor_functor(const KFunctor& f, const KFunctor& g, const CategoryPtr& src, const CategoryPtr& tgt);
KFunctor tensor_functor(const KFunctor& f, const KFunctor& g);
CategoryPtr opposite(const KCategory& a);
/// Constants pushed along the structural embedding K -> L.
CategoryPtr scalar_extension(const KCategory& a, const FieldPtr& L);
KFunctor scalar_extension(const KFunctor& f, const CategoryPtr& src_l, const CategoryPtr& tgt_l);
/// The relabeling K ⊗ A -> A.
KFunctor unit_relabeling(const CategoryPtr& k_tensor_a, const CategoryPtr& a);
/// The relabeling A ⊗ B -> B ⊗ A.
KFunctor symmetry_relabeling(const KCategory& a, const KCategory& b, const CategoryPtr& ab, const CategoryPtr& ba);

} // namespace moritakit
