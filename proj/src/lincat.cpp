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

#include "moritakit/lincat.hpp"

#include <random>
#include <set>

namespace moritakit {

namespace {

constexpr std::size_t kMaxReported = 20;

std::string triple_name(const KCategory& c, std::size_t x, std::size_t y, std::size_t z) {
    return c.object(x) + "|" + c.object(y) + "|" + c.object(z);
}

Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix r = Matrix::zero(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (f.is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (f.is_zero(b(k, l))) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
                }
        }
    return r;
}

} // namespace

// ------------------------------------------------------------------ KCategory

KCategory::KCategory(FieldPtr field, std::vector<std::string> objects, std::vector<std::size_t> dims)
    : field_(std::move(field)), objects_(std::move(objects)), dims_(std::move(dims)) {
    const std::size_t n = objects_.size();
    if (dims_.size() != n * n) throw Error(ErrorCode::invalid_category, "hom dimension table has the wrong size");
    for (std::size_t i = 0; i < n; ++i)
        if (!index_.emplace(objects_[i], i).second)
            throw Error(ErrorCode::invalid_category, "duplicate object id '" + objects_[i] + "'");
    comp_.resize(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                comp_[(x * n + y) * n + z].assign(hom_dim(y, z) * hom_dim(x, y) * hom_dim(x, z), field_->zero());
    ids_.resize(n);
    for (std::size_t x = 0; x < n; ++x) ids_[x].assign(hom_dim(x, x), field_->zero());
}

std::size_t KCategory::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::object_mismatch, "unknown object '" + name + "'");
    return it->second;
}

Vector KCategory::basis_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a) const {
    const std::size_t dxz = hom_dim(x, z);
    const Vector& block = composition_block(x, y, z);
    const std::size_t at = (b * hom_dim(x, y) + a) * dxz;
    return Vector(block.begin() + static_cast<std::ptrdiff_t>(at), block.begin() + static_cast<std::ptrdiff_t>(at + dxz));
}

void KCategory::set_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a,
                              const Vector& v) {
    const std::size_t dxz = hom_dim(x, z);
    if (v.size() != dxz) throw Error(ErrorCode::invalid_category, "composite has the wrong length");
    Vector& block = comp_[(x * size() + y) * size() + z];
    const std::size_t at = (b * hom_dim(x, y) + a) * dxz;
    for (std::size_t c = 0; c < dxz; ++c) block[at + c] = v[c];
}

void KCategory::set_identity(std::size_t x, Vector v) {
    if (v.size() != hom_dim(x, x)) throw Error(ErrorCode::invalid_category, "identity has the wrong length");
    ids_.at(x) = std::move(v);
}

Vector KCategory::compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const {
    const Field& k = *field_;
    const std::size_t dxy = hom_dim(x, y);
    const std::size_t dyz = hom_dim(y, z);
    const std::size_t dxz = hom_dim(x, z);
    if (g.size() != dyz || f.size() != dxy) throw Error(ErrorCode::index_out_of_range, "compose: length mismatch");
    Vector r(dxz, k.zero());
    const Vector& block = composition_block(x, y, z);
    for (std::size_t b = 0; b < dyz; ++b) {
        if (k.is_zero(g[b])) continue;
        for (std::size_t a = 0; a < dxy; ++a) {
            if (k.is_zero(f[a])) continue;
            const Elem c = k.mul(g[b], f[a]);
            const std::size_t at = (b * dxy + a) * dxz;
            for (std::size_t t = 0; t < dxz; ++t) {
                const Elem& m = block[at + t];
                if (!k.is_zero(m)) r[t] = k.add(r[t], k.mul(c, m));
            }
        }
    }
    return r;
}

Matrix KCategory::post_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& g) const {
    const Field& k = *field_;
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < hom_dim(x, y); ++a)
        cols.push_back(compose(x, y, z, g, moritakit::unit_vector(k, hom_dim(x, y), a)));
    return Matrix::from_columns(k, hom_dim(x, z), cols);
}

Matrix KCategory::pre_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& f) const {
    const Field& k = *field_;
    std::vector<Vector> cols;
    for (std::size_t b = 0; b < hom_dim(y, z); ++b)
        cols.push_back(compose(x, y, z, moritakit::unit_vector(k, hom_dim(y, z), b), f));
    return Matrix::from_columns(k, hom_dim(x, z), cols);
}

std::vector<std::string> KCategory::validate() const {
    std::vector<std::string> out;
    if (!field_) return {"missing ring"};
    const Field& k = *field_;
    const std::size_t n = size();
    for (const auto& block : comp_)
        for (const auto& c : block)
            if (!k.contains(c)) return {"structure constant outside the ring"};
    for (const auto& id : ids_)
        for (const auto& c : id)
            if (!k.contains(c)) return {"identity coefficient outside the ring"};
    for (std::size_t x = 0; x < n && out.size() < kMaxReported; ++x) {
        for (std::size_t y = 0; y < n && out.size() < kMaxReported; ++y) {
            for (std::size_t a = 0; a < hom_dim(x, y); ++a) {
                const Vector f = moritakit::unit_vector(k, hom_dim(x, y), a);
                if (!equal(k, compose(x, y, y, ids_[y], f), f)) {
                    out.push_back("left unit law fails at " + object(x) + "|" + object(y) + " basis " +
                                  std::to_string(a));
                    break;
                }
                if (!equal(k, compose(x, x, y, f, ids_[x]), f)) {
                    out.push_back("right unit law fails at " + object(x) + "|" + object(y) + " basis " +
                                  std::to_string(a));
                    break;
                }
            }
        }
    }
    for (std::size_t w = 0; w < n && out.size() < kMaxReported; ++w)
        for (std::size_t x = 0; x < n && out.size() < kMaxReported; ++x)
            for (std::size_t y = 0; y < n && out.size() < kMaxReported; ++y)
                for (std::size_t z = 0; z < n && out.size() < kMaxReported; ++z) {
                    const std::size_t dwx = hom_dim(w, x), dxy = hom_dim(x, y), dyz = hom_dim(y, z);
                    bool bad = false;
                    for (std::size_t c = 0; c < dyz && !bad; ++c)
                        for (std::size_t b = 0; b < dxy && !bad; ++b) {
                            const Vector hg = basis_composite(x, y, z, c, b);
                            for (std::size_t a = 0; a < dwx && !bad; ++a) {
                                const Vector lhs = compose(w, x, z, hg, moritakit::unit_vector(k, dwx, a));
                                const Vector gf = basis_composite(w, x, y, b, a);
                                const Vector rhs = compose(w, y, z, moritakit::unit_vector(k, dyz, c), gf);
                                if (!equal(k, lhs, rhs)) bad = true;
                            }
                        }
                    if (bad)
                        out.push_back("associativity fails on " + object(w) + "|" + triple_name(*this, x, y, z));
                }
    return out;
}

void KCategory::require_valid() const {
    const auto v = validate();
    if (!v.empty()) throw Error(ErrorCode::invalid_category, v.front());
}

bool KCategory::same_presentation(const KCategory& other) const {
    if (!same_field(field_, other.field_)) return false;
    if (objects_ != other.objects_ || dims_ != other.dims_) return false;
    return comp_ == other.comp_ && ids_ == other.ids_;
}

// ------------------------------------------------------------------- KFunctor

Vector KFunctor::apply(std::size_t x, std::size_t y, const Vector& f) const {
    return moritakit::apply(src->field(), hom(x, y), f);
}

std::vector<std::string> KFunctor::validate() const {
    std::vector<std::string> out;
    if (!src || !tgt) return {"functor without source or target"};
    if (!same_field(src->field_ptr(), tgt->field_ptr())) return {"source and target live over different rings"};
    const Field& k = src->field();
    const std::size_t n = src->size();
    if (object_map.size() != n) return {"object map has the wrong size"};
    for (auto t : object_map)
        if (t >= tgt->size()) return {"object map leaves the target"};
    if (homs.size() != n * n) return {"hom matrix table has the wrong size"};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Matrix& m = hom(x, y);
            if (m.rows() != tgt->hom_dim(object_map[x], object_map[y]) || m.cols() != src->hom_dim(x, y))
                return {"hom matrix " + src->object(x) + "|" + src->object(y) + " has the wrong shape"};
        }
    for (std::size_t x = 0; x < n; ++x)
        if (!equal(k, apply(x, x, src->identity(x)), tgt->identity(object_map[x])))
            out.push_back("identity of " + src->object(x) + " is not preserved");
    for (std::size_t x = 0; x < n && out.size() < kMaxReported; ++x)
        for (std::size_t y = 0; y < n && out.size() < kMaxReported; ++y)
            for (std::size_t z = 0; z < n && out.size() < kMaxReported; ++z) {
                bool bad = false;
                for (std::size_t b = 0; b < src->hom_dim(y, z) && !bad; ++b)
                    for (std::size_t a = 0; a < src->hom_dim(x, y) && !bad; ++a) {
                        const Vector lhs = apply(x, z, src->basis_composite(x, y, z, b, a));
                        const Vector rhs = tgt->compose(object_map[x], object_map[y], object_map[z], hom(y, z).column(b),
                                                        hom(x, y).column(a));
                        if (!equal(k, lhs, rhs)) bad = true;
                    }
                if (bad) out.push_back("composition not preserved on " + triple_name(*src, x, y, z));
            }
    return out;
}

void KFunctor::require_valid() const {
    const auto v = validate();
    if (!v.empty()) throw Error(ErrorCode::invalid_category, "invalid functor: " + v.front());
}

KFunctor KFunctor::identity(const CategoryPtr& a) {
    std::vector<std::size_t> obj(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) obj[i] = i;
    KFunctor f = blank(a, a, std::move(obj));
    for (std::size_t x = 0; x < a->size(); ++x)
        for (std::size_t y = 0; y < a->size(); ++y) f.hom(x, y) = Matrix::identity(a->field(), a->hom_dim(x, y));
    return f;
}

KFunctor KFunctor::blank(const CategoryPtr& src, const CategoryPtr& tgt, std::vector<std::size_t> object_map) {
    KFunctor f;
    f.src = src;
    f.tgt = tgt;
    f.object_map = std::move(object_map);
    const std::size_t n = src->size();
    f.homs.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            f.hom(x, y) = Matrix::zero(src->field(), tgt->hom_dim(f.object_map[x], f.object_map[y]), src->hom_dim(x, y));
    return f;
}

KFunctor compose(const KFunctor& g, const KFunctor& f) {
    if (f.tgt != g.src && !f.tgt->same_presentation(*g.src))
        throw Error(ErrorCode::object_mismatch, "functors are not composable");
    std::vector<std::size_t> obj(f.src->size());
    for (std::size_t x = 0; x < obj.size(); ++x) obj[x] = g.object_map[f.object_map[x]];
    KFunctor r = KFunctor::blank(f.src, g.tgt, std::move(obj));
    for (std::size_t x = 0; x < f.src->size(); ++x)
        for (std::size_t y = 0; y < f.src->size(); ++y)
            r.hom(x, y) = multiply(f.src->field(), g.hom(f.object_map[x], f.object_map[y]), f.hom(x, y));
    return r;
}

bool same_functor(const KFunctor& a, const KFunctor& b) {
    if (a.object_map != b.object_map || a.homs.size() != b.homs.size()) return false;
    for (std::size_t i = 0; i < a.homs.size(); ++i)
        if (!equal(a.src->field(), a.homs[i], b.homs[i])) return false;
    return true;
}

// ------------------------------------------------------ natural transformations

bool is_natural(const KFunctor& f0, const KFunctor& f1, const NaturalTransformation& eta) {
    const KCategory& a = *f0.src;
    const KCategory& b = *f0.tgt;
    const Field& k = a.field();
    if (eta.components.size() != a.size()) return false;
    for (std::size_t x = 0; x < a.size(); ++x)
        if (eta.components[x].size() != b.hom_dim(f0.object_map[x], f1.object_map[x])) return false;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            for (std::size_t i = 0; i < a.hom_dim(x, y); ++i) {
                const Vector g0 = f0.hom(x, y).column(i);
                const Vector g1 = f1.hom(x, y).column(i);
                const Vector lhs = b.compose(f0.object_map[x], f0.object_map[y], f1.object_map[y], eta.components[y], g0);
                const Vector rhs = b.compose(f0.object_map[x], f1.object_map[x], f1.object_map[y], g1, eta.components[x]);
                if (!equal(k, lhs, rhs)) return false;
            }
    return true;
}

std::optional<Vector> inverse_morphism(const KCategory& c, std::size_t x, std::size_t y, const Vector& f) {
    const Field& k = c.field();
    // z in Hom(y,x): z∘f = 1_x and f∘z = 1_y.
    const Matrix zf = c.pre_composition(x, y, x, f);   // z -> z∘f, Hom(y,x) -> Hom(x,x)
    const Matrix fz = c.post_composition(y, x, y, f);  // z -> f∘z, Hom(y,x) -> Hom(y,y)
    const Matrix sys = vstack(k, {zf, fz});
    Vector rhs = c.identity(x);
    rhs.insert(rhs.end(), c.identity(y).begin(), c.identity(y).end());
    return solve(k, sys, rhs);
}

bool is_natural_isomorphism(const KFunctor& f0, const KFunctor& f1, const NaturalTransformation& eta) {
    if (!is_natural(f0, f1, eta)) return false;
    for (std::size_t x = 0; x < f0.src->size(); ++x)
        if (!inverse_morphism(*f0.tgt, f0.object_map[x], f1.object_map[x], eta.components[x])) return false;
    return true;
}

namespace {

std::vector<std::size_t> component_offsets(const KFunctor& f0, const KFunctor& f1) {
    std::vector<std::size_t> off(f0.src->size() + 1, 0);
    for (std::size_t x = 0; x < f0.src->size(); ++x)
        off[x + 1] = off[x] + f0.tgt->hom_dim(f0.object_map[x], f1.object_map[x]);
    return off;
}

void require_parallel(const KFunctor& f0, const KFunctor& f1) {
    if ((f0.src != f1.src && !f0.src->same_presentation(*f1.src)) ||
        (f0.tgt != f1.tgt && !f0.tgt->same_presentation(*f1.tgt)))
        throw Error(ErrorCode::object_mismatch, "functors are not parallel");
}

} // namespace

Matrix nat_trans_space(const KFunctor& f0, const KFunctor& f1) {
    require_parallel(f0, f1);
    const KCategory& a = *f0.src;
    const KCategory& b = *f0.tgt;
    const Field& k = a.field();
    const auto off = component_offsets(f0, f1);
    const std::size_t unknowns = off.back();
    std::vector<Matrix> rows;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
            const std::size_t px = f0.object_map[x], py = f0.object_map[y];
            const std::size_t qx = f1.object_map[x], qy = f1.object_map[y];
            for (std::size_t i = 0; i < a.hom_dim(x, y); ++i) {
                // η_y ∘ F0(f) - F1(f) ∘ η_x = 0 in Hom(F0x, F1y)
                const Matrix lhs = b.pre_composition(px, py, qy, f0.hom(x, y).column(i));
                const Matrix rhs = b.post_composition(px, qx, qy, f1.hom(x, y).column(i));
                Matrix eq = Matrix::zero(k, b.hom_dim(px, qy), unknowns);
                for (std::size_t r = 0; r < eq.rows(); ++r) {
                    for (std::size_t c = 0; c < lhs.cols(); ++c) eq(r, off[y] + c) = lhs(r, c);
                    for (std::size_t c = 0; c < rhs.cols(); ++c)
                        eq(r, off[x] + c) = k.sub(eq(r, off[x] + c), rhs(r, c));
                }
                if (eq.rows() > 0) rows.push_back(std::move(eq));
            }
        }
    if (rows.empty()) return Matrix::identity(k, unknowns);
    return kernel(k, vstack(k, rows));
}

NaturalTransformation unpack_transformation(const KFunctor& f0, const KFunctor& f1, const Vector& stacked) {
    const auto off = component_offsets(f0, f1);
    NaturalTransformation eta;
    for (std::size_t x = 0; x + 1 < off.size(); ++x)
        eta.components.emplace_back(stacked.begin() + static_cast<std::ptrdiff_t>(off[x]),
                                    stacked.begin() + static_cast<std::ptrdiff_t>(off[x + 1]));
    return eta;
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

CombinationSearch find_combination(const Field& f, const Matrix& basis, const std::function<bool(const Vector&)>& accept,
                                   const SearchOptions& opts) {
    CombinationSearch out;
    const std::size_t k = basis.cols();
    auto test = [&](const Vector& c) {
        ++out.examined;
        const Vector v = k == 0 ? zero_vector(f, basis.rows()) : apply(f, basis, c);
        if (accept(v)) {
            out.verdict = Verdict::yes;
            out.coefficients = c;
            return true;
        }
        return false;
    };
    if (k == 0) {
        out.exhaustive = true;
        if (!test({})) out.verdict = Verdict::no;
        return out;
    }
    std::mt19937_64 rng(opts.seed);
    if (f.is_finite()) {
        const std::uint64_t q = f.order();
        for (std::size_t t = 0; t < opts.random_trials; ++t) {
            Vector c(k);
            for (auto& x : c) x = f.element(rng() % q);
            if (test(c)) return out;
        }
        std::uint64_t total = 1;
        bool fits = true;
        for (std::size_t i = 0; i < k && fits; ++i) {
            if (total > opts.budget / q) fits = false;
            total *= q;
        }
        if (!fits || total > opts.budget) {
            out.verdict = Verdict::inconclusive;
            return out;
        }
        Vector c(k, f.zero());
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t r = code;
            for (std::size_t i = 0; i < k; ++i) {
                c[i] = f.element(r % q);
                r /= q;
            }
            if (test(c)) {
                out.exhaustive = true;
                return out;
            }
        }
        out.exhaustive = true;
        out.verdict = Verdict::no;
        return out;
    }
    // Infinite field: ternary box, then random rationals.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k && total <= opts.budget; ++i) total *= 3;
    const std::uint64_t limit = std::min<std::uint64_t>(total, opts.budget);
    Vector c(k, f.zero());
    const Elem minus = f.from_int(-1);
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::uint64_t r = code;
        for (std::size_t i = 0; i < k; ++i) {
            const auto d = r % 3;
            c[i] = d == 0 ? f.zero() : (d == 1 ? f.one() : minus);
            r /= 3;
        }
        if (test(c)) return out;
    }
    for (std::size_t t = 0; t < opts.random_trials; ++t) {
        for (auto& x : c) {
            const long num = static_cast<long>(rng() % 19) - 9;
            const long den = static_cast<long>(rng() % 4) + 1;
            x = f.from_rational(Rational(num, den));
        }
        if (test(c)) return out;
    }
    out.verdict = Verdict::inconclusive;
    return out;
}

IsoTest functor_iso_test(const KFunctor& f0, const KFunctor& f1, const SearchOptions& opts) {
    require_parallel(f0, f1);
    IsoTest out;
    const KCategory& a = *f0.src;
    const KCategory& b = *f0.tgt;
    const Field& k = a.field();
    // Invertible components force equal endomorphism dimensions.
    for (std::size_t x = 0; x < a.size(); ++x) {
        const std::size_t p = f0.object_map[x], q = f1.object_map[x];
        if (b.hom_dim(p, p) != b.hom_dim(q, q) || b.hom_dim(p, q) != b.hom_dim(q, p)) {
            out.verdict = Verdict::no;
            return out;
        }
    }
    const Matrix space = nat_trans_space(f0, f1);
    out.space_dim = space.cols();
    auto accept = [&](const Vector& v) {
        const NaturalTransformation eta = unpack_transformation(f0, f1, v);
        for (std::size_t x = 0; x < a.size(); ++x)
            if (!inverse_morphism(b, f0.object_map[x], f1.object_map[x], eta.components[x])) return false;
        return true;
    };
    if (f0.object_map == f1.object_map) {
        Vector ids;
        for (std::size_t x = 0; x < a.size(); ++x) {
            const Vector& id = b.identity(f0.object_map[x]);
            ids.insert(ids.end(), id.begin(), id.end());
        }
        const NaturalTransformation eta = unpack_transformation(f0, f1, ids);
        ++out.examined;
        if (is_natural(f0, f1, eta)) {
            out.verdict = Verdict::yes;
            out.witness = eta;
            return out;
        }
    }
    const CombinationSearch s = find_combination(k, space, accept, opts);
    out.examined += s.examined;
    out.verdict = s.verdict;
    if (s.verdict == Verdict::yes) {
        const Vector v = space.cols() == 0 ? zero_vector(k, space.rows()) : apply(k, space, s.coefficients);
        out.witness = unpack_transformation(f0, f1, v);
    }
    return out;
}

// ---------------------------------------------------------------- constructors

CategoryPtr algebra_as_category(const Algebra& r, const std::string& object) {
    r.require_valid();
    auto c = std::make_shared<KCategory>(r.field, std::vector<std::string>{object}, std::vector<std::size_t>{r.dim});
    for (std::size_t b = 0; b < r.dim; ++b)
        for (std::size_t a = 0; a < r.dim; ++a) c->set_composite(0, 0, 0, b, a, r.multiply(r.basis(b), r.basis(a)));
    c->set_identity(0, r.unit);
    return c;
}

Algebra endomorphism_algebra(const KCategory& c, std::size_t x) {
    Algebra r;
    r.field = c.field_ptr();
    r.dim = c.hom_dim(x, x);
    r.mult = c.composition_block(x, x, x);
    r.unit = c.identity(x);
    return r;
}

CategoryPtr unit_category(const FieldPtr& f) { return algebra_as_category(Algebra::ground(f)); }

CategoryPtr empty_category(const FieldPtr& f) { return std::make_shared<KCategory>(f, std::vector<std::string>{}, std::vector<std::size_t>{}); }

Presentation Presentation::bullet() {
    Presentation p;
    p.objects = {"*"};
    p.arrows = {{"id", 0, 0}};
    p.identities = {0};
    p.composition[{0, 0}] = 0;
    return p;
}

namespace {

Presentation two_object_base() {
    Presentation p;
    p.objects = {"0", "1"};
    p.arrows = {{"id0", 0, 0}, {"id1", 1, 1}};
    p.identities = {0, 1};
    p.composition[{0, 0}] = 0;
    p.composition[{1, 1}] = 1;
    return p;
}

void add_arrow_0_to_1(Presentation& p, const std::string& name) {
    const std::size_t a = p.arrows.size();
    p.arrows.push_back({name, 0, 1});
    p.composition[{a, 0}] = a;
    p.composition[{1, a}] = a;
}

} // namespace

Presentation Presentation::one_arrow() {
    Presentation p = two_object_base();
    add_arrow_0_to_1(p, "a");
    return p;
}

Presentation Presentation::parallel_pair() {
    Presentation p = two_object_base();
    add_arrow_0_to_1(p, "a");
    add_arrow_0_to_1(p, "b");
    return p;
}

Presentation Presentation::iso_interval() {
    Presentation p = two_object_base();
    add_arrow_0_to_1(p, "u");
    const std::size_t v = p.arrows.size();
    p.arrows.push_back({"u^-1", 1, 0});
    p.composition[{v, 1}] = v;
    p.composition[{0, v}] = v;
    p.composition[{2, v}] = 1;  // u ∘ u^-1 = id1
    p.composition[{v, 2}] = 0;  // u^-1 ∘ u = id0
    return p;
}

CategoryPtr free_kcategory(const FieldPtr& f, const Presentation& c) {
    const std::size_t n = c.objects.size();
    auto bad = [](const std::string& why) { return Error(ErrorCode::invalid_presentation, why); };
    if (c.identities.size() != n) throw bad("every object needs an identity arrow");
    std::vector<std::size_t> dims(n * n, 0);
    std::vector<std::size_t> local(c.arrows.size());
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
        const auto& ar = c.arrows[i];
        if (ar.src >= n || ar.tgt >= n) throw bad("arrow '" + ar.name + "' has an unknown endpoint");
        local[i] = dims[ar.src * n + ar.tgt]++;
    }
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t id = c.identities[x];
        if (id >= c.arrows.size() || c.arrows[id].src != x || c.arrows[id].tgt != x)
            throw bad("identity of '" + c.objects[x] + "' is not an endomorphism");
    }
    auto comp = [&](std::size_t g, std::size_t fa) {
        auto it = c.composition.find({g, fa});
        if (it == c.composition.end())
            throw bad("composite " + c.arrows[g].name + "∘" + c.arrows[fa].name + " is missing");
        const std::size_t h = it->second;
        if (h >= c.arrows.size() || c.arrows[h].src != c.arrows[fa].src || c.arrows[h].tgt != c.arrows[g].tgt)
            throw bad("composite " + c.arrows[g].name + "∘" + c.arrows[fa].name + " has the wrong endpoints");
        return h;
    };
    for (std::size_t a = 0; a < c.arrows.size(); ++a) {
        if (comp(c.identities[c.arrows[a].tgt], a) != a || comp(a, c.identities[c.arrows[a].src]) != a)
            throw bad("unit law fails for '" + c.arrows[a].name + "'");
    }
    for (std::size_t a = 0; a < c.arrows.size(); ++a)
        for (std::size_t b = 0; b < c.arrows.size(); ++b) {
            if (c.arrows[b].src != c.arrows[a].tgt) continue;
            for (std::size_t d = 0; d < c.arrows.size(); ++d) {
                if (c.arrows[d].src != c.arrows[b].tgt) continue;
                if (comp(comp(d, b), a) != comp(d, comp(b, a)))
                    throw bad("composition table is not associative");
            }
        }
    auto cat = std::make_shared<KCategory>(f, c.objects, dims);
    const Field& k = *f;
    for (std::size_t a = 0; a < c.arrows.size(); ++a)
        for (std::size_t b = 0; b < c.arrows.size(); ++b) {
            if (c.arrows[b].src != c.arrows[a].tgt) continue;
            const std::size_t h = comp(b, a);
            const std::size_t x = c.arrows[a].src, y = c.arrows[a].tgt, z = c.arrows[b].tgt;
            cat->set_composite(x, y, z, local[b], local[a], moritakit::unit_vector(k, dims[x * n + z], local[h]));
        }
    for (std::size_t x = 0; x < n; ++x)
        cat->set_identity(x, moritakit::unit_vector(k, dims[x * n + x], local[c.identities[x]]));
    return cat;
}

CategoryPtr tensor_product(const KCategory& a, const KCategory& b) {
    require_same_field(a.field_ptr(), b.field_ptr(), "tensor_product");
    const Field& k = a.field();
    const std::size_t na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) names.push_back("(" + a.object(x) + "," + b.object(y) + ")");
    std::vector<std::size_t> dims(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dims[i * n + j] = a.hom_dim(i / nb, j / nb) * b.hom_dim(i % nb, j % nb);
    auto t = std::make_shared<KCategory>(a.field_ptr(), names, dims);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t x = i / nb, y = i % nb;
        Vector id(dims[i * n + i], k.zero());
        const Vector& ia = a.identity(x);
        const Vector& ib = b.identity(y);
        for (std::size_t p = 0; p < ia.size(); ++p)
            for (std::size_t q = 0; q < ib.size(); ++q) id[p * ib.size() + q] = k.mul(ia[p], ib[q]);
        t->set_identity(i, std::move(id));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t x1 = i / nb, y1 = i % nb, x2 = j / nb, y2 = j % nb, x3 = l / nb, y3 = l % nb;
                const std::size_t bij = b.hom_dim(y1, y2), bjl = b.hom_dim(y2, y3), bil = b.hom_dim(y1, y3);
                for (std::size_t ga = 0; ga < a.hom_dim(x2, x3); ++ga)
                    for (std::size_t gb = 0; gb < bjl; ++gb)
                        for (std::size_t fa = 0; fa < a.hom_dim(x1, x2); ++fa)
                            for (std::size_t fb = 0; fb < bij; ++fb) {
                                const Vector ca = a.basis_composite(x1, x2, x3, ga, fa);
                                const Vector cb = b.basis_composite(y1, y2, y3, gb, fb);
                                Vector v(ca.size() * cb.size(), k.zero());
                                for (std::size_t p = 0; p < ca.size(); ++p) {
                                    if (k.is_zero(ca[p])) continue;
                                    for (std::size_t q = 0; q < cb.size(); ++q)
                                        if (!k.is_zero(cb[q])) v[p * bil + q] = k.mul(ca[p], cb[q]);
                                }
                                t->set_composite(i, j, l, ga * bjl + gb, fa * bij + fb, v);
                            }
            }
    return t;
}

KFunctor tensor_functor(const KFunctor& f, const KFunctor& g, const CategoryPtr& src, const CategoryPtr& tgt) {
    const std::size_t na = f.src->size(), nb = g.src->size();
    const std::size_t mb = g.tgt->size();
    std::vector<std::size_t> obj(na * nb);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) obj[x * nb + y] = f.object_map[x] * mb + g.object_map[y];
    KFunctor t = KFunctor::blank(src, tgt, std::move(obj));
    const Field& k = src->field();
    for (std::size_t i = 0; i < na * nb; ++i)
        for (std::size_t j = 0; j < na * nb; ++j)
            t.hom(i, j) = kronecker(k, f.hom(i / nb, j / nb), g.hom(i % nb, j % nb));
    return t;
}

KFunctor tensor_functor(const KFunctor& f, const KFunctor& g) {
    return tensor_functor(f, g, tensor_product(*f.src, *g.src), tensor_product(*f.tgt, *g.tgt));
}

CategoryPtr opposite(const KCategory& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> dims(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = a.hom_dim(y, x);
    auto o = std::make_shared<KCategory>(a.field_ptr(), a.objects(), dims);
    for (std::size_t x = 0; x < n; ++x) {
        o->set_identity(x, a.identity(x));
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t b = 0; b < a.hom_dim(z, y); ++b)
                    for (std::size_t c = 0; c < a.hom_dim(y, x); ++c)
                        o->set_composite(x, y, z, b, c, a.basis_composite(z, y, x, c, b));
    }
    return o;
}

CategoryPtr scalar_extension(const KCategory& a, const FieldPtr& L) {
    if (same_field(a.field_ptr(), L)) return std::make_shared<KCategory>(a);
    if (L->kind() != FieldKind::extension || !same_field(L->base(), a.field_ptr()))
        throw Error(ErrorCode::ring_mismatch, "target field is not an extension of the category's ring");
    const std::size_t n = a.size();
    std::vector<std::size_t> dims(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = a.hom_dim(x, y);
    auto e = std::make_shared<KCategory>(L, a.objects(), dims);
    auto lift = [&](const Vector& v) {
        Vector w;
        w.reserve(v.size());
        for (const auto& c : v) w.push_back(L->embed(c));
        return w;
    };
    for (std::size_t x = 0; x < n; ++x) {
        e->set_identity(x, lift(a.identity(x)));
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t b = 0; b < a.hom_dim(y, z); ++b)
                    for (std::size_t c = 0; c < a.hom_dim(x, y); ++c)
                        e->set_composite(x, y, z, b, c, lift(a.basis_composite(x, y, z, b, c)));
    }
    return e;
}

KFunctor scalar_extension(const KFunctor& f, const CategoryPtr& src_l, const CategoryPtr& tgt_l) {
    const FieldPtr& L = src_l->field_ptr();
    KFunctor e = KFunctor::blank(src_l, tgt_l, f.object_map);
    for (std::size_t i = 0; i < f.homs.size(); ++i)
        e.homs[i] = map_entries(f.homs[i], [&](const Elem& c) { return L->embed(c); });
    return e;
}

KFunctor unit_relabeling(const CategoryPtr& k_tensor_a, const CategoryPtr& a) {
    std::vector<std::size_t> obj(a->size());
    for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = i;
    KFunctor f = KFunctor::blank(k_tensor_a, a, std::move(obj));
    for (std::size_t x = 0; x < a->size(); ++x)
        for (std::size_t y = 0; y < a->size(); ++y) f.hom(x, y) = Matrix::identity(a->field(), a->hom_dim(x, y));
    return f;
}

KFunctor symmetry_relabeling(const KCategory& a, const KCategory& b, const CategoryPtr& ab, const CategoryPtr& ba) {
    const std::size_t na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::size_t> obj(n);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) obj[x * nb + y] = y * na + x;
    KFunctor f = KFunctor::blank(ab, ba, obj);
    const Field& k = ab->field();
    // Hom((x,y),(x',y')) has basis p*db+q; the swapped hom has basis q*da+p.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t da = a.hom_dim(i / nb, j / nb), db = b.hom_dim(i % nb, j % nb);
            Matrix m = Matrix::zero(k, da * db, da * db);
            for (std::size_t p = 0; p < da; ++p)
                for (std::size_t q = 0; q < db; ++q) m(q * da + p, p * db + q) = k.one();
            f.hom(i, j) = std::move(m);
        }
    return f;
}

} // namespace moritakit
