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

#include "moritakit/envelopes.hpp"

#include <algorithm>
#include <set>

namespace moritakit {

namespace {

std::size_t block_count(const Word& src, const Word& tgt) { return src.size() * tgt.size(); }

} // namespace

// -------------------------------------------------------------------- SatView

SatView::SatView(CategoryPtr base) : base_(std::move(base)) {
    if (!base_) throw Error(ErrorCode::invalid_input, "SatView needs a base category");
}

std::size_t SatView::ambient_dim(const Word& src, const Word& tgt) const {
    std::size_t d = 0;
    for (std::size_t i : tgt)
        for (std::size_t j : src) d += base_->hom_dim(j, i);
    return d;
}

std::size_t SatView::block_offset(const Word& src, const Word& tgt, std::size_t i, std::size_t j) const {
    std::size_t off = 0;
    for (std::size_t r = 0; r < tgt.size(); ++r)
        for (std::size_t c = 0; c < src.size(); ++c) {
            if (r == i && c == j) return off;
            off += base_->hom_dim(src[c], tgt[r]);
        }
    return off;
}

Vector SatView::ambient_compose(const Word& u, const Word& v, const Word& w, const Vector& b, const Vector& a) const {
    const Field& k = field();
    const KCategory& c = *base_;
    Vector out = ambient_zero(u, w);
    // offsets of all blocks, computed once
    auto offsets = [&](const Word& s, const Word& t) {
        std::vector<std::size_t> off(block_count(s, t) + 1, 0);
        std::size_t n = 0;
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t q = 0; q < s.size(); ++q, ++n) off[n + 1] = off[n] + c.hom_dim(s[q], t[r]);
        return off;
    };
    const auto oa = offsets(u, v), ob = offsets(v, w), oo = offsets(u, w);
    auto slice = [](const Vector& m, std::size_t from, std::size_t to) {
        return Vector(m.begin() + static_cast<std::ptrdiff_t>(from), m.begin() + static_cast<std::ptrdiff_t>(to));
    };
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t kk = 0; kk < u.size(); ++kk) {
            const std::size_t bo = i * u.size() + kk;
            for (std::size_t j = 0; j < v.size(); ++j) {
                const std::size_t bb = i * v.size() + j, ba = j * u.size() + kk;
                if (ob[bb] == ob[bb + 1] || oa[ba] == oa[ba + 1]) continue;
                const Vector bij = slice(b, ob[bb], ob[bb + 1]);
                const Vector ajk = slice(a, oa[ba], oa[ba + 1]);
                if (is_zero(k, bij) || is_zero(k, ajk)) continue;
                const Vector p = c.compose(u[kk], v[j], w[i], bij, ajk);
                for (std::size_t t = 0; t < p.size(); ++t) out[oo[bo] + t] = k.add(out[oo[bo] + t], p[t]);
            }
        }
    return out;
}

Vector SatView::ambient_identity(const Word& w) const {
    Vector out = ambient_zero(w, w);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t off = block_offset(w, w, i, i);
        const Vector& id = base_->identity(w[i]);
        std::copy(id.begin(), id.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
    }
    return out;
}

SatObject SatView::object(std::size_t x) const {
    if (x >= base_->size()) throw Error(ErrorCode::object_mismatch, "object index out of range");
    return plus({x});
}

SatObject SatView::plus(const Word& w) const {
    for (std::size_t x : w)
        if (x >= base_->size()) throw Error(ErrorCode::object_mismatch, "object index out of range");
    return SatObject{w, ambient_identity(w)};
}

bool SatView::is_idempotent(const SatObject& s) const {
    if (s.idem.size() != ambient_dim(s.word, s.word)) return false;
    return equal(field(), ambient_compose(s.word, s.word, s.word, s.idem, s.idem), s.idem);
}

void SatView::require_object(const SatObject& s) const {
    for (std::size_t x : s.word)
        if (x >= base_->size()) throw Error(ErrorCode::object_mismatch, "word letter outside the base category");
    if (s.idem.size() != ambient_dim(s.word, s.word))
        throw Error(ErrorCode::object_mismatch, "idempotent has the wrong shape for its word");
    for (const auto& c : s.idem)
        if (!field().contains(c)) throw Error(ErrorCode::ring_mismatch, "idempotent entry outside the field");
    if (!is_idempotent(s)) throw Error(ErrorCode::not_idempotent, "e∘e != e");
}

std::string SatView::key(const SatObject& s, const SatObject& t) const {
    std::string k;
    for (std::size_t x : s.word) k += std::to_string(x) + ",";
    k += ";";
    for (const auto& c : s.idem) k += field().to_string(c) + ",";
    k += "|";
    for (std::size_t x : t.word) k += std::to_string(x) + ",";
    k += ";";
    for (const auto& c : t.idem) k += field().to_string(c) + ",";
    return k;
}

const Subspace& SatView::hom(const SatObject& s, const SatObject& t) const {
    const std::string k = key(s, t);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(k);
        if (it != cache_.end()) return *it->second;
    }
    const Field& f = field();
    const std::size_t n = ambient_dim(s.word, t.word);
    std::vector<Vector> cols;
    cols.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const Vector em = unit_vector(f, n, m);
        const Vector me = ambient_compose(s.word, s.word, t.word, em, s.idem);
        cols.push_back(ambient_compose(s.word, t.word, t.word, t.idem, me));
    }
    auto sub = std::make_shared<const Subspace>(Subspace::span(f, Matrix::from_columns(f, n, cols)));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(k, std::move(sub));
    return *it->second;
}

bool SatView::contains(const SatObject& s, const SatObject& t, const Vector& ambient) const {
    return ambient.size() == ambient_dim(s.word, t.word) && hom(s, t).contains(field(), ambient);
}

Vector SatView::embed(const SatObject& s, const SatObject& t, const Vector& coords) const {
    const Subspace& h = hom(s, t);
    if (coords.size() != h.dim()) throw Error(ErrorCode::invalid_input, "coordinate vector has the wrong length");
    return h.embed(field(), coords);
}

Vector SatView::coordinates(const SatObject& s, const SatObject& t, const Vector& ambient) const {
    auto c = hom(s, t).coordinates(field(), ambient);
    if (!c) throw Error(ErrorCode::invalid_input, "matrix is not a morphism between these objects");
    return *c;
}

Vector SatView::compose(const SatObject& s, const SatObject& t, const SatObject& u, const Vector& g, const Vector& f) const {
    const Vector a = embed(s, t, f);
    const Vector b = embed(t, u, g);
    return hom(s, u).coordinates_unchecked(field(), ambient_compose(s.word, t.word, u.word, b, a));
}

namespace {

/// Places m in Mat(src_small, tgt_small) into Mat(src_big, tgt_big), with the
/// small words starting at letter `src_off` and `tgt_off` of the big ones.
Vector place(const SatView& v, const Word& src_big, const Word& tgt_big, std::size_t src_off, std::size_t tgt_off,
             const Word& src_small, const Word& tgt_small, const Vector& m, Vector out) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < tgt_small.size(); ++i)
        for (std::size_t j = 0; j < src_small.size(); ++j) {
            const std::size_t d = v.base()->hom_dim(src_small[j], tgt_small[i]);
            const std::size_t off = v.block_offset(src_big, tgt_big, tgt_off + i, src_off + j);
            for (std::size_t t = 0; t < d; ++t) out[off + t] = m[at + t];
            at += d;
        }
    return out;
}

} // namespace

SatView::DirectSum SatView::direct_sum(const std::vector<SatObject>& parts) const {
    DirectSum out;
    Word w;
    std::vector<std::size_t> start;
    for (const auto& p : parts) {
        require_object(p);
        start.push_back(w.size());
        w.insert(w.end(), p.word.begin(), p.word.end());
    }
    Vector idem = ambient_zero(w, w);
    for (std::size_t k = 0; k < parts.size(); ++k)
        idem = place(*this, w, w, start[k], start[k], parts[k].word, parts[k].word, parts[k].idem, std::move(idem));
    out.object = SatObject{w, idem};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const Word& pk = parts[k].word;
        out.injections.push_back(place(*this, pk, w, 0, start[k], pk, pk, parts[k].idem, ambient_zero(pk, w)));
        out.projections.push_back(place(*this, w, pk, start[k], 0, pk, pk, parts[k].idem, ambient_zero(w, pk)));
    }
    return out;
}

SatView::Splitting SatView::split(const SatObject& s, const Vector& f) const {
    require_object(s);
    if (!contains(s, s, f)) throw Error(ErrorCode::not_idempotent, "split: not an endomorphism of the object");
    SatObject image{s.word, f};
    if (!is_idempotent(image)) throw Error(ErrorCode::not_idempotent, "split: f∘f != f");
    return Splitting{image, f, f};
}

std::string SatView::word_name(const Word& w) const {
    if (w.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "+";
        s += base_->object(w[i]);
    }
    return s;
}

// -------------------------------------------------------------- materialized

CategoryPtr materialize(const SatView& view, const std::vector<SatObject>& objects, const std::vector<std::string>& names) {
    const std::size_t n = objects.size();
    if (names.size() != n) throw Error(ErrorCode::invalid_input, "one name per object required");
    const Field& k = view.field();
    std::vector<std::size_t> dims(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = view.hom_dim(objects[x], objects[y]);
    auto c = std::make_shared<KCategory>(view.field_ptr(), names, dims);
    for (std::size_t x = 0; x < n; ++x) {
        c->set_identity(x, view.identity(objects[x]));
        for (std::size_t y = 0; y < n; ++y) {
            const Subspace& hxy = view.hom(objects[x], objects[y]);
            for (std::size_t z = 0; z < n; ++z) {
                const Subspace& hyz = view.hom(objects[y], objects[z]);
                const Subspace& hxz = view.hom(objects[x], objects[z]);
                for (std::size_t b = 0; b < hyz.dim(); ++b)
                    for (std::size_t a = 0; a < hxy.dim(); ++a) {
                        const Vector m = view.ambient_compose(objects[x].word, objects[y].word, objects[z].word,
                                                              hyz.basis_vector(b), hxy.basis_vector(a));
                        c->set_composite(x, y, z, b, a, hxz.coordinates_unchecked(k, m));
                    }
            }
        }
    }
    return c;
}

std::vector<Word> words_up_to(std::size_t alphabet, std::size_t bound) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= bound; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (std::size_t x = 0; x < alphabet; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    out.push_back(Word{});
    return out;
}

CategoryPtr additive_hull(const CategoryPtr& a, std::size_t bound) {
    if (bound == 0) throw Error(ErrorCode::invalid_input, "additive hull bound must be at least 1");
    const SatView view(a);
    std::vector<SatObject> objs;
    std::vector<std::string> names;
    for (const Word& w : words_up_to(a->size(), bound)) {
        objs.push_back(view.plus(w));
        names.push_back(view.word_name(w));
    }
    return materialize(view, objs, names);
}

KFunctor functor_plus(const KFunctor& f, std::size_t bound) { return functor_plus(f, bound, bound); }

KFunctor functor_plus(const KFunctor& f, std::size_t src_bound, std::size_t tgt_bound) {
    if (src_bound != tgt_bound) throw Error(ErrorCode::bound_mismatch, "hull bounds differ");
    const CategoryPtr src = additive_hull(f.src, src_bound);
    const CategoryPtr tgt = additive_hull(f.tgt, tgt_bound);
    const SatView vs(f.src), vt(f.tgt);
    const auto words = words_up_to(f.src->size(), src_bound);
    const auto twords = words_up_to(f.tgt->size(), tgt_bound);
    auto word_index = [&](const Word& w) {
        return static_cast<std::size_t>(std::find(twords.begin(), twords.end(), w) - twords.begin());
    };
    std::vector<Word> images;
    std::vector<std::size_t> obj;
    for (const Word& w : words) {
        Word v;
        for (std::size_t x : w) v.push_back(f.object_map[x]);
        obj.push_back(word_index(v));
        images.push_back(std::move(v));
    }
    KFunctor r = KFunctor::blank(src, tgt, obj);
    const Field& k = f.src->field();
    for (std::size_t x = 0; x < words.size(); ++x)
        for (std::size_t y = 0; y < words.size(); ++y) {
            const Word &u = words[x], &v = words[y];
            Matrix& m = r.hom(x, y);
            std::size_t col = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = 0; j < u.size(); ++j) {
                    const Matrix& h = f.hom(u[j], v[i]);
                    const std::size_t row = vt.block_offset(images[x], images[y], i, j);
                    for (std::size_t c = 0; c < h.cols(); ++c)
                        for (std::size_t rr = 0; rr < h.rows(); ++rr) m(row + rr, col + c) = h(rr, c);
                    col += h.cols();
                }
            (void)k;
        }
    return r;
}

CategoryPtr karoubi(const CategoryPtr& a, const std::vector<KaroubiObject>& idempotents) {
    const SatView view(a);
    std::vector<SatObject> objs;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < a->size(); ++x) {
        objs.push_back(view.object(x));
        names.push_back(a->object(x));
    }
    std::vector<std::size_t> counter(a->size(), 0);
    for (const auto& e : idempotents) {
        const std::size_t x = a->index(e.object);
        SatObject s{{x}, e.idempotent};
        if (e.idempotent.size() != a->hom_dim(x, x))
            throw Error(ErrorCode::not_idempotent, "idempotent on '" + e.object + "' has the wrong length");
        if (!view.is_idempotent(s)) throw Error(ErrorCode::not_idempotent, "listed element of End(" + e.object + ") is not idempotent");
        objs.push_back(std::move(s));
        names.push_back(e.object + ".e" + std::to_string(counter[x]++));
    }
    return materialize(view, objs, names);
}

// ---------------------------------------------------------------- ViewFunctor

Vector ViewFunctor::apply(std::size_t x, std::size_t y, const Vector& f) const {
    return moritakit::apply(src->field(), hom(x, y), f);
}

std::vector<std::string> ViewFunctor::validate() const {
    std::vector<std::string> out;
    const KCategory& a = *src;
    const SatView& v = *tgt;
    const Field& k = a.field();
    if (!same_field(a.field_ptr(), v.base()->field_ptr())) return {"source and target live over different fields"};
    if (objects.size() != a.size()) return {"object map has the wrong size"};
    if (homs.size() != a.size() * a.size()) return {"hom table has the wrong size"};
    for (const auto& s : objects) {
        try {
            v.require_object(s);
        } catch (const Error& e) {
            return {std::string("bad image object: ") + e.what()};
        }
    }
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
            const Matrix& h = hom(x, y);
            if (h.rows() != v.ambient_dim(objects[x].word, objects[y].word) || h.cols() != a.hom_dim(x, y))
                return {"hom matrix " + a.object(x) + "|" + a.object(y) + " has the wrong shape"};
            for (std::size_t c = 0; c < h.cols(); ++c)
                if (!v.contains(objects[x], objects[y], h.column(c))) {
                    out.push_back("image of a basis morphism " + a.object(x) + "->" + a.object(y) + " leaves the hom space");
                    break;
                }
        }
    if (!out.empty()) return out;
    for (std::size_t x = 0; x < a.size(); ++x)
        if (!equal(k, apply(x, x, a.identity(x)), objects[x].idem)) out.push_back("identity of " + a.object(x) + " not preserved");
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            for (std::size_t z = 0; z < a.size(); ++z) {
                bool bad = false;
                for (std::size_t b = 0; b < a.hom_dim(y, z) && !bad; ++b)
                    for (std::size_t c = 0; c < a.hom_dim(x, y) && !bad; ++c) {
                        const Vector lhs = apply(x, z, a.basis_composite(x, y, z, b, c));
                        const Vector rhs = v.ambient_compose(objects[x].word, objects[y].word, objects[z].word,
                                                             hom(y, z).column(b), hom(x, y).column(c));
                        bad = !equal(k, lhs, rhs);
                    }
                if (bad) out.push_back("composition not preserved on " + a.object(x) + "|" + a.object(y) + "|" + a.object(z));
            }
    return out;
}

Matrix ViewFunctor::hom_coordinates(std::size_t x, std::size_t y) const {
    const Field& k = src->field();
    const Matrix& h = hom(x, y);
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < h.cols(); ++c) cols.push_back(tgt->coordinates(objects[x], objects[y], h.column(c)));
    return Matrix::from_columns(k, tgt->hom_dim(objects[x], objects[y]), cols);
}

ViewFunctor inclusion(const CategoryPtr& a, const ViewPtr& view) {
    ViewFunctor f{a, view, {}, {}};
    for (std::size_t x = 0; x < a->size(); ++x) f.objects.push_back(view->object(x));
    f.homs.resize(a->size() * a->size());
    for (std::size_t x = 0; x < a->size(); ++x)
        for (std::size_t y = 0; y < a->size(); ++y) f.hom(x, y) = Matrix::identity(a->field(), a->hom_dim(x, y));
    return f;
}

ViewFunctor inclusion(const CategoryPtr& a) { return inclusion(a, std::make_shared<const SatView>(a)); }

ViewFunctor to_view(const KFunctor& f, const ViewPtr& view) {
    if (view->base() != f.tgt && !view->base()->same_presentation(*f.tgt))
        throw Error(ErrorCode::object_mismatch, "view is not over the functor's target");
    ViewFunctor g{f.src, view, {}, f.homs};
    for (std::size_t x = 0; x < f.src->size(); ++x) g.objects.push_back(view->object(f.object_map[x]));
    return g;
}

// --------------------------------------------------------- SaturatedExtension

SaturatedExtension::SaturatedExtension(ViewFunctor g) : g_(std::move(g)) {}

Word SaturatedExtension::image_word(const Word& w) const {
    Word out;
    for (std::size_t x : w) {
        if (x >= g_.objects.size()) throw Error(ErrorCode::object_mismatch, "word letter outside the functor's source");
        out.insert(out.end(), g_.objects[x].word.begin(), g_.objects[x].word.end());
    }
    return out;
}

SatObject SaturatedExtension::map_object(const SatObject& s) const {
    return SatObject{image_word(s.word), map_morphism(s.word, s.word, s.idem)};
}

Vector SaturatedExtension::map_morphism(const Word& u, const Word& v, const Vector& m) const {
    const SatView& tv = *g_.tgt;
    const KCategory& a = *g_.src;
    const Word gu = image_word(u), gv = image_word(v);
    std::vector<std::size_t> su(u.size() + 1, 0), sv(v.size() + 1, 0);
    for (std::size_t j = 0; j < u.size(); ++j) su[j + 1] = su[j] + g_.objects[u[j]].word.size();
    for (std::size_t i = 0; i < v.size(); ++i) sv[i + 1] = sv[i] + g_.objects[v[i]].word.size();
    Vector out = tv.ambient_zero(gu, gv);
    std::size_t at = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            const std::size_t d = a.hom_dim(u[j], v[i]);
            const Vector mij(m.begin() + static_cast<std::ptrdiff_t>(at), m.begin() + static_cast<std::ptrdiff_t>(at + d));
            at += d;
            const Vector img = g_.apply(u[j], v[i], mij);
            out = place(tv, gu, gv, su[j], sv[i], g_.objects[u[j]].word, g_.objects[v[i]].word, img, std::move(out));
        }
    return out;
}

ViewFunctor compose(const SaturatedExtension& g, const ViewFunctor& f) {
    const ViewFunctor& gen = g.generator();
    if (f.tgt->base() != gen.src && !f.tgt->base()->same_presentation(*gen.src))
        throw Error(ErrorCode::object_mismatch, "maps are not composable");
    ViewFunctor r{f.src, gen.tgt, {}, {}};
    const std::size_t n = f.src->size();
    for (std::size_t x = 0; x < n; ++x) r.objects.push_back(g.map_object(f.objects[x]));
    r.homs.resize(n * n);
    const Field& k = f.src->field();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Matrix& h = f.hom(x, y);
            std::vector<Vector> cols;
            for (std::size_t c = 0; c < h.cols(); ++c)
                cols.push_back(g.map_morphism(f.objects[x].word, f.objects[y].word, h.column(c)));
            r.hom(x, y) = Matrix::from_columns(k, gen.tgt->ambient_dim(r.objects[x].word, r.objects[y].word), cols);
        }
    return r;
}

namespace {

bool same_object(const Field& k, const SatObject& a, const SatObject& b) {
    return a.word == b.word && equal(k, a.idem, b.idem);
}

} // namespace

namespace {

std::size_t find_or_add(const Field& k, std::vector<SatObject>& objs, const SatObject& s) {
    for (std::size_t i = 0; i < objs.size(); ++i)
        if (same_object(k, objs[i], s)) return i;
    objs.push_back(s);
    return objs.size() - 1;
}

KFunctor functor_into(const ViewFunctor& f, const CategoryPtr& c, const std::vector<SatObject>& objs) {
    const Field& k = f.src->field();
    std::vector<SatObject> copy = objs;
    std::vector<std::size_t> obj;
    for (const auto& s : f.objects) obj.push_back(find_or_add(k, copy, s));
    KFunctor out = KFunctor::blank(f.src, c, obj);
    for (std::size_t x = 0; x < f.src->size(); ++x)
        for (std::size_t y = 0; y < f.src->size(); ++y) out.hom(x, y) = f.hom_coordinates(x, y);
    return out;
}

std::vector<std::string> numbered_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

} // namespace

MaterializedFunctor materialize(const ViewFunctor& f, const std::vector<SatObject>& extra) {
    const Field& k = f.src->field();
    std::vector<SatObject> objs = extra;
    for (const auto& s : f.objects) find_or_add(k, objs, s);
    MaterializedFunctor out;
    out.category = materialize(*f.tgt, objs, numbered_names(objs.size()));
    out.functor = functor_into(f, out.category, objs);
    return out;
}

IsoTest view_functor_iso_test(const ViewFunctor& f0, const ViewFunctor& f1, const SearchOptions& opts) {
    if ((f0.src != f1.src && !f0.src->same_presentation(*f1.src)) ||
        (f0.tgt->base() != f1.tgt->base() && !f0.tgt->base()->same_presentation(*f1.tgt->base())))
        throw Error(ErrorCode::object_mismatch, "view functors are not parallel");
    const Field& k = f0.src->field();
    std::vector<SatObject> objs;
    for (const auto& s : f0.objects) find_or_add(k, objs, s);
    for (const auto& s : f1.objects) find_or_add(k, objs, s);
    const CategoryPtr c = materialize(*f0.tgt, objs, numbered_names(objs.size()));
    KFunctor g0 = functor_into(f0, c, objs);
    KFunctor g1 = functor_into(f1, c, objs);
    g1.src = g0.src;
    return functor_iso_test(g0, g1, opts);
}

} // namespace moritakit
