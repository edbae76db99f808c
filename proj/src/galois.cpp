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

#include "moritakit/galois.hpp"

#include <functional>
#include <map>

namespace moritakit {

namespace {

Elem basis_element(const GaloisExtension& e, std::size_t a) {
    return e.element(unit_vector(*e.base(), e.degree(), a));
}

Matrix block_diagonal(const Field& k, const Matrix& block, std::size_t copies) {
    const std::size_t r = block.rows(), c = block.cols();
    Matrix m = Matrix::zero(k, r * copies, c * copies);
    for (std::size_t t = 0; t < copies; ++t)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(t * r + i, t * c + j) = block(i, j);
    return m;
}

Matrix induced_on_quotient(const Field& k, const Quotient& q, const Matrix& ambient_map) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < q.dim(); ++c)
        cols.push_back(q.project(k, apply(k, ambient_map, q.lift(k, unit_vector(k, q.dim(), c)))));
    return Matrix::from_columns(k, q.dim(), cols);
}

std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

/// Digits of a tensor index, first slot most significant.
std::vector<std::size_t> digits_of(std::size_t idx, std::size_t d, std::size_t slots) {
    std::vector<std::size_t> out(slots);
    for (std::size_t s = slots; s-- > 0;) {
        out[s] = idx % d;
        idx /= d;
    }
    return out;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t d) {
    std::size_t idx = 0;
    for (auto x : digits) idx = idx * d + x;
    return idx;
}

/// Applies m on one mode of a tensor with the given mode sizes.
Vector mode_product(const Field& k, const Vector& t, std::vector<std::size_t>& dims, std::size_t s, const Matrix& m) {
    std::size_t left = 1, right = 1;
    for (std::size_t i = 0; i < s; ++i) left *= dims[i];
    for (std::size_t i = s + 1; i < dims.size(); ++i) right *= dims[i];
    const std::size_t mid = dims[s], rows = m.rows();
    std::vector<std::vector<std::pair<std::size_t, Elem>>> col_nz(mid);
    for (std::size_t c = 0; c < mid; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (!k.is_zero(m(r, c))) col_nz[c].emplace_back(r, m(r, c));
    Vector out(left * rows * right, k.zero());
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t c = 0; c < mid; ++c)
            for (std::size_t r = 0; r < right; ++r) {
                const Elem& x = t[(l * mid + c) * right + r];
                if (k.is_zero(x)) continue;
                for (const auto& [row, v] : col_nz[c]) {
                    Elem& o = out[(l * rows + row) * right + r];
                    o = k.add(o, k.mul(v, x));
                }
            }
    dims[s] = rows;
    return out;
}

/// K-matrix of a K-bilinear map between restricted L-spaces. `product(i,j)`
/// gives the L-coordinates of the image of the L-basis pair (i,j); the
/// K-bilinear extension sends (b_a e_i, b_b e_j) to b_a·b_b·product(i,j).
Matrix restricted_bilinear(const GaloisExtension& e, std::size_t d1, std::size_t d2, std::size_t d3,
                           const std::function<Vector(std::size_t, std::size_t)>& product) {
    const Field& k = *e.base();
    const Field& l = *e.field();
    const std::size_t n = e.degree();
    std::vector<Elem> units;
    for (std::size_t a = 0; a < n; ++a) units.push_back(basis_element(e, a));
    Matrix m = Matrix::zero(k, d3 * n, d1 * n * d2 * n);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            const Vector p = product(i, j);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Elem ab = l.mul(units[a], units[b]);
                    const std::size_t col = (i * n + a) * d2 * n + (j * n + b);
                    for (std::size_t t = 0; t < d3; ++t) {
                        if (l.is_zero(p[t])) continue;
                        const Vector c = e.coords(l.mul(ab, p[t]));
                        for (std::size_t x = 0; x < n; ++x) m(t * n + x, col) = c[x];
                    }
                }
        }
    return m;
}

/// K-coordinates of an L-vector.
Vector restrict_vector(const GaloisExtension& e, const Vector& v) {
    Vector out;
    out.reserve(v.size() * e.degree());
    for (const auto& x : v)
        for (auto& c : e.coords(x)) out.push_back(std::move(c));
    return out;
}

Vector kron_power(const Field& k, const Vector& v, std::size_t slots) {
    Vector out{k.one()};
    for (std::size_t s = 0; s < slots; ++s) {
        Vector next(out.size() * v.size(), k.zero());
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) next[i * v.size() + j] = k.mul(out[i], v[j]);
        out = std::move(next);
    }
    return out;
}

void require_over(const Algebra& s, const GaloisExtension& e) {
    if (!s.field || !same_field(s.field, e.field()))
        throw Error(ErrorCode::extension_mismatch, "algebra is not defined over the extension field");
}

struct CorAlgebraData {
    CorModule mod;
    Algebra alg;
    std::vector<Vector> amb;
};

std::vector<Vector> basis_ambients(const Field& k, const CorModule& c) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < c.dim(); ++i) out.push_back(c.ambient(unit_vector(k, c.dim(), i)));
    return out;
}

CorAlgebraData cor_algebra_data(const Algebra& s, const ExtensionPtr& ext) {
    require_over(s, *ext);
    s.require_valid();
    const GaloisExtension& e = *ext;
    const Field& k = *e.base();
    CorAlgebraData out;
    out.mod = cor_module(LModule::standard(ext, s.dim));
    out.amb = basis_ambients(k, out.mod);
    const Matrix mu = restricted_bilinear(e, s.dim, s.dim, s.dim,
                                          [&](std::size_t i, std::size_t j) { return s.multiply(s.basis(i), s.basis(j)); });
    const std::size_t dc = out.mod.dim(), w = out.mod.width();
    Algebra& a = out.alg;
    a.field = e.base();
    a.dim = dc;
    a.mult = Vector(dc * dc * dc, k.zero());
    for (std::size_t x = 0; x < dc; ++x)
        for (std::size_t y = 0; y < dc; ++y) {
            const Vector c = out.mod.coordinates(transport_bilinear(k, out.mod.slots, out.amb[x], w, out.amb[y], w, mu));
            for (std::size_t z = 0; z < dc; ++z) a.mult[(x * dc + y) * dc + z] = c[z];
        }
    a.unit = out.mod.coordinates(kron_power(k, restrict_vector(e, s.unit), out.mod.slots));
    const auto bad = a.validate();
    if (!bad.empty()) throw Error(ErrorCode::invalid_algebra, "corestricted algebra: " + bad.front());
    return out;
}

struct CorBimoduleData {
    Bimodule bimodule;
    CorModule mod;
    std::vector<Vector> amb;
};

CorBimoduleData cor_bimodule_data(const Bimodule& m, const ExtensionPtr& ext, bool certify) {
    require_over(m.left, *ext);
    require_over(m.right, *ext);
    m.require_valid();
    const GaloisExtension& e = *ext;
    const Field& k = *e.base();
    if (certify) bimodule_to_functor(m);
    const CorAlgebraData r = cor_algebra_data(m.left, ext);
    const CorAlgebraData s = cor_algebra_data(m.right, ext);
    CorBimoduleData out;
    out.mod = cor_module(LModule::standard(ext, m.dim));
    out.amb = basis_ambients(k, out.mod);
    const std::size_t slots = out.mod.slots, wm = out.mod.width();
    const Matrix lam = restricted_bilinear(e, m.left.dim, m.dim, m.dim,
                                           [&](std::size_t i, std::size_t j) { return m.left_action[i].column(j); });
    const Matrix rho = restricted_bilinear(e, m.dim, m.right.dim, m.dim,
                                           [&](std::size_t i, std::size_t j) { return m.right_action[j].column(i); });
    Bimodule& b = out.bimodule;
    b.left = r.alg;
    b.right = s.alg;
    b.dim = out.mod.dim();
    for (std::size_t x = 0; x < r.alg.dim; ++x) {
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < b.dim; ++c)
            cols.push_back(out.mod.coordinates(transport_bilinear(k, slots, r.amb[x], r.mod.width(), out.amb[c], wm, lam)));
        b.left_action.push_back(Matrix::from_columns(k, b.dim, cols));
    }
    for (std::size_t y = 0; y < s.alg.dim; ++y) {
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < b.dim; ++c)
            cols.push_back(out.mod.coordinates(transport_bilinear(k, slots, out.amb[c], wm, s.amb[y], s.mod.width(), rho)));
        b.right_action.push_back(Matrix::from_columns(k, b.dim, cols));
    }
    b.require_valid();
    if (certify) {
        try {
            bimodule_to_functor(b);
        } catch (const Error& err) {
            throw Error(ErrorCode::not_projective, std::string("corestriction lost projectivity (internal fault): ") + err.what());
        }
    }
    return out;
}

} // namespace

// ------------------------------------------------------------------ LModule

LModule LModule::standard(const ExtensionPtr& ext, std::size_t dim) {
    LModule v;
    v.ext = ext;
    v.dim = dim;
    for (std::size_t a = 0; a < ext->degree(); ++a) v.scalars.push_back(block_diagonal(*ext->base(), ext->basis_multiplication(a), dim));
    return v;
}

Matrix LModule::scalar(const Elem& x) const {
    const Field& k = base();
    const Vector c = ext->coords(x);
    Matrix m = Matrix::zero(k, k_dim(), k_dim());
    for (std::size_t a = 0; a < c.size(); ++a)
        if (!k.is_zero(c[a])) m = add(k, m, map_entries(scalars[a], [&](const Elem& v) { return k.mul(c[a], v); }));
    return m;
}

std::vector<std::string> LModule::validate() const {
    if (!ext) return {"missing extension"};
    const std::size_t n = ext->degree();
    if (scalars.size() != n) return {"one scalar matrix per basis element of L required"};
    for (const auto& s : scalars)
        if (s.rows() != k_dim() || s.cols() != k_dim()) return {"scalar matrix has the wrong shape"};
    const Field& k = base();
    const Field& l = *ext->field();
    if (!equal(k, scalar(l.one()), Matrix::identity(k, k_dim()))) return {"1 does not act as the identity"};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!equal(k, multiply(k, scalars[a], scalars[b]), scalar(l.mul(basis_element(*ext, a), basis_element(*ext, b)))))
                return {"scalar action is not multiplicative"};
    return {};
}

Matrix l_matrix(const GaloisExtension& e, std::size_t rows, std::size_t cols, const std::vector<Elem>& entries) {
    const Field& k = *e.base();
    const std::size_t n = e.degree();
    Matrix m = Matrix::zero(k, rows * n, cols * n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Matrix b = e.multiplication(entries.at(i * cols + j));
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) m(i * n + x, j * n + y) = b(x, y);
        }
    return m;
}

LModule twist(const LModule& v, std::size_t sigma) {
    if (sigma >= v.ext->order()) throw Error(ErrorCode::index_out_of_range, "twist: group index out of range");
    const std::size_t inv = v.ext->inverse(sigma);
    LModule t = v;
    for (std::size_t a = 0; a < v.ext->degree(); ++a) t.scalars[a] = v.scalar(v.ext->apply(inv, basis_element(*v.ext, a)));
    return t;
}

LModule direct_sum(const LModule& v, const LModule& w) {
    if (!v.ext->same_as(*w.ext)) throw Error(ErrorCode::extension_mismatch, "direct sum over different extensions");
    const Field& k = v.base();
    LModule s;
    s.ext = v.ext;
    s.dim = v.dim + w.dim;
    for (std::size_t a = 0; a < v.ext->degree(); ++a) {
        Matrix m = Matrix::zero(k, s.k_dim(), s.k_dim());
        const std::size_t o = v.k_dim();
        for (std::size_t i = 0; i < o; ++i)
            for (std::size_t j = 0; j < o; ++j) m(i, j) = v.scalars[a](i, j);
        for (std::size_t i = 0; i < w.k_dim(); ++i)
            for (std::size_t j = 0; j < w.k_dim(); ++j) m(o + i, o + j) = w.scalars[a](i, j);
        s.scalars.push_back(std::move(m));
    }
    return s;
}

LTensor tensor_l(const LModule& v, const LModule& w) {
    if (!v.ext->same_as(*w.ext)) throw Error(ErrorCode::extension_mismatch, "tensor over different extensions");
    const Field& k = v.base();
    const std::size_t dv = v.k_dim(), dw = w.k_dim(), amb = dv * dw;
    std::vector<Vector> relators;
    for (std::size_t a = 0; a < v.ext->degree(); ++a) {
        const Matrix& sv = v.scalars[a];
        const Matrix& sw = w.scalars[a];
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t j = 0; j < dw; ++j) {
                Vector rel(amb, k.zero());
                for (std::size_t x = 0; x < dv; ++x)
                    if (!k.is_zero(sv(x, i))) rel[x * dw + j] = k.add(rel[x * dw + j], sv(x, i));
                for (std::size_t y = 0; y < dw; ++y)
                    if (!k.is_zero(sw(y, j))) rel[i * dw + y] = k.sub(rel[i * dw + y], sw(y, j));
                if (!is_zero(k, rel)) relators.push_back(std::move(rel));
            }
    }
    LTensor out;
    out.quotient = Quotient(k, amb, relators.empty() ? Matrix::zero(k, 0, amb) : Matrix::from_rows(k, amb, relators));
    const std::size_t n = v.ext->degree();
    if (out.quotient.dim() % n != 0) throw Error(ErrorCode::invalid_input, "balanced tensor has dimension not divisible by [L:K]");
    out.module.ext = v.ext;
    out.module.dim = out.quotient.dim() / n;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix amb_map = Matrix::zero(k, amb, amb);
        const Matrix& sv = v.scalars[a];
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t x = 0; x < dv; ++x)
                if (!k.is_zero(sv(x, i)))
                    for (std::size_t j = 0; j < dw; ++j) amb_map(x * dw + j, i * dw + j) = sv(x, i);
        out.module.scalars.push_back(induced_on_quotient(k, out.quotient, amb_map));
    }
    return out;
}

// ------------------------------------------------------------------ G-modules

std::vector<std::string> GaloisModule::validate() const {
    auto bad = carrier.validate();
    if (!bad.empty()) return bad;
    const GaloisExtension& e = *carrier.ext;
    const Field& k = carrier.base();
    if (action.size() != e.order()) return {"one action matrix per group element required"};
    for (const auto& m : action)
        if (m.rows() != carrier.k_dim() || m.cols() != carrier.k_dim()) return {"action matrix has the wrong shape"};
    if (!equal(k, action[e.identity()], Matrix::identity(k, carrier.k_dim()))) return {"identity does not act trivially"};
    for (std::size_t s = 0; s < e.order(); ++s)
        for (std::size_t t = 0; t < e.order(); ++t)
            if (!equal(k, multiply(k, action[s], action[t]), action[e.compose(s, t)])) return {"action violates the group law"};
    for (std::size_t s = 0; s < e.order(); ++s)
        for (std::size_t a = 0; a < e.degree(); ++a)
            if (!equal(k, multiply(k, action[s], carrier.scalars[a]),
                       multiply(k, carrier.scalar(e.apply(s, basis_element(e, a))), action[s])))
                return {"action is not skew-linear"};
    return {};
}

GaloisModule GaloisModule::natural(const ExtensionPtr& ext, std::size_t dim) {
    GaloisModule w;
    w.carrier = LModule::standard(ext, dim);
    for (std::size_t s = 0; s < ext->order(); ++s) w.action.push_back(block_diagonal(*ext->base(), ext->matrix(s), dim));
    return w;
}

GaloisModule GaloisModule::random(const ExtensionPtr& ext, std::size_t dim, std::mt19937_64& rng) {
    const Field& k = *ext->base();
    const std::size_t n = ext->degree();
    auto random_scalar = [&]() {
        Vector c(n);
        for (auto& x : c) x = k.is_finite() ? k.element(rng() % k.order()) : k.from_int(static_cast<long long>(rng() % 7) - 3);
        return ext->element(c);
    };
    GaloisModule w = natural(ext, dim);
    for (;;) {
        std::vector<Elem> entries(dim * dim);
        for (auto& x : entries) x = random_scalar();
        const Matrix p = l_matrix(*ext, dim, dim, entries);
        const auto pinv = inverse(k, p);
        if (!pinv) continue;
        for (auto& a : w.action) a = multiply(k, *pinv, multiply(k, a, p));
        return w;
    }
}

Matrix fixed_points(const GaloisModule& w) {
    const Field& k = w.carrier.base();
    const std::size_t d = w.carrier.k_dim();
    std::vector<Matrix> blocks;
    for (std::size_t s = 1; s < w.action.size(); ++s) blocks.push_back(sub(k, w.action[s], Matrix::identity(k, d)));
    if (blocks.empty()) return Matrix::identity(k, d);
    return kernel(k, vstack(k, blocks));
}

Matrix counit(const GaloisModule& w, const Matrix& fixed) {
    const Field& k = w.carrier.base();
    const std::size_t n = w.carrier.ext->degree(), f = fixed.cols();
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < f; ++c) cols.push_back(apply(k, w.carrier.scalars[a], fixed.column(c)));
    return Matrix::from_columns(k, w.carrier.k_dim(), cols);
}

bool counit_is_equivariant(const GaloisModule& w, const Matrix& fixed, const Matrix& eps) {
    const Field& k = w.carrier.base();
    const GaloisExtension& e = *w.carrier.ext;
    const std::size_t f = fixed.cols();
    for (std::size_t s = 0; s < e.order(); ++s) {
        const Matrix& sig = e.matrix(s);
        Matrix lifted = Matrix::zero(k, e.degree() * f, e.degree() * f);
        for (std::size_t b = 0; b < e.degree(); ++b)
            for (std::size_t a = 0; a < e.degree(); ++a)
                for (std::size_t c = 0; c < f; ++c) lifted(b * f + c, a * f + c) = sig(b, a);
        if (!equal(k, multiply(k, w.action[s], eps), multiply(k, eps, lifted))) return false;
    }
    return true;
}

// ------------------------------------------------------------------ transport

Vector transport_linear(const Field& k, std::size_t slots, const Vector& x, std::size_t d_in, const Matrix& phi) {
    std::vector<std::size_t> dims(slots, d_in);
    Vector t = x;
    for (std::size_t s = 0; s < slots; ++s) t = mode_product(k, t, dims, s, phi);
    return t;
}

Vector transport_bilinear(const Field& k, std::size_t slots, const Vector& x, std::size_t d1, const Vector& y,
                          std::size_t d2, const Matrix& phi) {
    const std::size_t d12 = d1 * d2;
    Vector z(power(d12, slots), k.zero());
    std::vector<std::pair<std::vector<std::size_t>, const Elem*>> ys;
    for (std::size_t j = 0; j < y.size(); ++j)
        if (!k.is_zero(y[j])) ys.emplace_back(digits_of(j, d2, slots), &y[j]);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (k.is_zero(x[i])) continue;
        const auto di = digits_of(i, d1, slots);
        for (const auto& [dj, v] : ys) {
            std::size_t idx = 0;
            for (std::size_t s = 0; s < slots; ++s) idx = idx * d12 + di[s] * d2 + dj[s];
            z[idx] = k.add(z[idx], k.mul(x[i], *v));
        }
    }
    std::vector<std::size_t> dims(slots, d12);
    for (std::size_t s = 0; s < slots; ++s) z = mode_product(k, z, dims, s, phi);
    return z;
}

// ------------------------------------------------------------------ Cor

Vector CorModule::ambient(const Vector& coords) const {
    const Field& k = module.base();
    return quotient.lift(k, fixed.embed(k, coords));
}

Vector CorModule::coordinates(const Vector& amb) const {
    const Field& k = module.base();
    auto c = fixed.coordinates(k, quotient.project(k, amb));
    if (!c) throw Error(ErrorCode::invalid_input, "element is not G-invariant");
    return *c;
}

CorModule cor_module(const LModule& v) {
    const GaloisExtension& e = *v.ext;
    const Field& k = v.base();
    CorModule out;
    out.module = v;
    out.slots = e.order();
    const std::size_t slots = out.slots, d = v.k_dim(), amb = power(d, slots);

    std::vector<LModule> twists;
    for (std::size_t s = 0; s < slots; ++s) twists.push_back(twist(v, s));

    std::vector<Vector> relators;
    for (std::size_t s = 0; s + 1 < slots; ++s)
        for (std::size_t a = 0; a < e.degree(); ++a) {
            const Matrix& left = twists[s].scalars[a];
            const Matrix& right = twists[s + 1].scalars[a];
            for (std::size_t t = 0; t < amb; ++t) {
                auto dig = digits_of(t, d, slots);
                Vector rel(amb, k.zero());
                const std::size_t i = dig[s], j = dig[s + 1];
                for (std::size_t x = 0; x < d; ++x)
                    if (!k.is_zero(left(x, i))) {
                        dig[s] = x;
                        const std::size_t idx = index_of(dig, d);
                        rel[idx] = k.add(rel[idx], left(x, i));
                    }
                dig[s] = i;
                for (std::size_t y = 0; y < d; ++y)
                    if (!k.is_zero(right(y, j))) {
                        dig[s + 1] = y;
                        const std::size_t idx = index_of(dig, d);
                        rel[idx] = k.sub(rel[idx], right(y, j));
                    }
                if (!is_zero(k, rel)) relators.push_back(std::move(rel));
            }
        }
    out.quotient = Quotient(k, amb, relators.empty() ? Matrix::zero(k, 0, amb) : Matrix::from_rows(k, amb, relators));
    const std::size_t q = out.quotient.dim();

    // output slot τρ takes input slot ρ
    for (std::size_t tau = 0; tau < slots; ++tau) {
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < q; ++c) {
            const Vector src = out.quotient.lift(k, unit_vector(k, q, c));
            Vector moved(amb, k.zero());
            for (std::size_t t = 0; t < amb; ++t) {
                if (k.is_zero(src[t])) continue;
                const auto dig = digits_of(t, d, slots);
                std::vector<std::size_t> od(slots);
                for (std::size_t r = 0; r < slots; ++r) od[e.compose(tau, r)] = dig[r];
                moved[index_of(od, d)] = src[t];
            }
            cols.push_back(out.quotient.project(k, moved));
        }
        out.action.push_back(Matrix::from_columns(k, q, cols));
    }
    for (std::size_t a = 0; a < e.degree(); ++a) {
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < q; ++c) {
            const Vector src = out.quotient.lift(k, unit_vector(k, q, c));
            std::vector<std::size_t> dims(slots, d);
            cols.push_back(out.quotient.project(k, mode_product(k, src, dims, 0, twists[0].scalars[a])));
        }
        out.l_action.push_back(Matrix::from_columns(k, q, cols));
    }
    std::vector<Matrix> blocks;
    for (std::size_t tau = 1; tau < slots; ++tau) blocks.push_back(sub(k, out.action[tau], Matrix::identity(k, q)));
    out.fixed = blocks.empty() ? Subspace::whole(k, q) : Subspace::from_basis(k, kernel(k, vstack(k, blocks)));
    return out;
}

CorMonoidal cor_monoidal(const LModule& v, const LModule& w) {
    if (!v.ext->same_as(*w.ext)) throw Error(ErrorCode::extension_mismatch, "cor_monoidal over different extensions");
    const Field& k = v.base();
    CorMonoidal out;
    out.v = cor_module(v);
    out.w = cor_module(w);
    out.tensor = tensor_l(v, w);
    out.vw = cor_module(out.tensor.module);
    const std::size_t dv = v.k_dim(), dw = w.k_dim();
    std::vector<Vector> phi_cols;
    for (std::size_t c = 0; c < dv * dw; ++c) phi_cols.push_back(out.tensor.quotient.project(k, unit_vector(k, dv * dw, c)));
    const Matrix phi = Matrix::from_columns(k, out.tensor.quotient.dim(), phi_cols);
    const auto av = basis_ambients(k, out.v);
    const auto aw = basis_ambients(k, out.w);
    std::vector<Vector> cols;
    for (const auto& x : av)
        for (const auto& y : aw) cols.push_back(out.vw.coordinates(transport_bilinear(k, out.v.slots, x, dv, y, dw, phi)));
    out.map = Matrix::from_columns(k, out.vw.dim(), cols);
    out.bijective = out.map.rows() == out.map.cols() && rank(k, out.map) == out.map.rows();
    return out;
}

CorDimensionIso cor_dimension_iso(const LModule& v, std::size_t m) {
    if (m == 0) throw Error(ErrorCode::invalid_input, "cor_dimension_iso needs m >= 1");
    const GaloisExtension& e = *v.ext;
    const Field& k = v.base();
    const std::size_t g = e.order();
    LModule vm = v;
    for (std::size_t i = 1; i < m; ++i) vm = direct_sum(vm, v);
    CorDimensionIso out;
    out.source = cor_module(vm);
    out.summand = cor_module(v);
    const std::size_t d = v.k_dim(), nf = power(m, g);
    out.copies = nf;

    auto act = [&](std::size_t tau, const std::vector<std::size_t>& f) {
        std::vector<std::size_t> r(g);
        for (std::size_t s = 0; s < g; ++s) r[e.compose(tau, s)] = f[s];
        return r;
    };
    struct Summand {
        std::vector<std::size_t> cosets;  // ρ_j
        std::vector<std::size_t> targets; // index of ρ_j·g
        Vector b;                         // K-coordinates of b_k
    };
    std::vector<Summand> summands;
    std::vector<bool> seen(nf, false);
    for (std::size_t fi = 0; fi < nf; ++fi) {
        if (seen[fi]) continue;
        const auto f = digits_of(fi, m, g);
        std::vector<std::size_t> stab, cosets, targets;
        for (std::size_t tau = 0; tau < g; ++tau) {
            const std::size_t t = index_of(act(tau, f), m);
            if (t == fi) stab.push_back(tau);
            if (!seen[t]) {
                seen[t] = true;
                cosets.push_back(tau);
                targets.push_back(t);
            }
        }
        const Matrix fixed_field = e.fixed_field(stab);
        if (fixed_field.cols() != cosets.size())
            throw Error(ErrorCode::invalid_input, "fixed field of a stabilizer has the wrong degree");
        for (std::size_t kk = 0; kk < fixed_field.cols(); ++kk) summands.push_back({cosets, targets, fixed_field.column(kk)});
    }

    const std::size_t ds = out.summand.dim();
    const std::size_t comp = power(d, g);
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < out.source.dim(); ++c) {
        const Vector x = out.source.ambient(unit_vector(k, out.source.dim(), c));
        std::vector<Vector> parts(nf, Vector(comp, k.zero()));
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (k.is_zero(x[t])) continue;
            const auto dig = digits_of(t, m * d, g);
            std::vector<std::size_t> f(g), inner(g);
            for (std::size_t s = 0; s < g; ++s) {
                f[s] = dig[s] / d;
                inner[s] = dig[s] % d;
            }
            parts[index_of(f, m)][index_of(inner, d)] = x[t];
        }
        std::vector<Vector> q(nf);
        for (std::size_t f = 0; f < nf; ++f) q[f] = out.summand.quotient.project(k, parts[f]);
        Vector col;
        for (const auto& sm : summands) {
            Vector y(out.summand.quotient.dim(), k.zero());
            for (std::size_t j = 0; j < sm.cosets.size(); ++j) {
                const Elem coeff = e.apply(sm.cosets[j], e.element(sm.b));
                const Vector cc = e.coords(coeff);
                Matrix lm = Matrix::zero(k, y.size(), y.size());
                for (std::size_t a = 0; a < cc.size(); ++a)
                    if (!k.is_zero(cc[a])) lm = add(k, lm, map_entries(out.summand.l_action[a], [&](const Elem& z) { return k.mul(cc[a], z); }));
                y = add(k, y, apply(k, lm, q[sm.targets[j]]));
            }
            const auto yc = out.summand.fixed.coordinates(k, y);
            if (!yc) throw Error(ErrorCode::invalid_input, "orbit combination is not G-invariant");
            col.insert(col.end(), yc->begin(), yc->end());
        }
        cols.push_back(std::move(col));
    }
    out.map = Matrix::from_columns(k, nf * ds, cols);
    out.bijective = out.map.rows() == out.map.cols() && rank(k, out.map) == out.map.rows();
    return out;
}

Algebra restrict_scalars(const Algebra& s, const GaloisExtension& e) {
    require_over(s, e);
    const Field& k = *e.base();
    Algebra a;
    a.field = e.base();
    a.dim = s.dim * e.degree();
    const Matrix mu = restricted_bilinear(e, s.dim, s.dim, s.dim,
                                          [&](std::size_t i, std::size_t j) { return s.multiply(s.basis(i), s.basis(j)); });
    a.mult = Vector(a.dim * a.dim * a.dim, k.zero());
    for (std::size_t x = 0; x < a.dim; ++x)
        for (std::size_t y = 0; y < a.dim; ++y)
            for (std::size_t z = 0; z < a.dim; ++z) a.mult[(x * a.dim + y) * a.dim + z] = mu(z, x * a.dim + y);
    a.unit = restrict_vector(e, s.unit);
    return a;
}

Algebra cor_algebra(const Algebra& s, const ExtensionPtr& ext) { return cor_algebra_data(s, ext).alg; }

Bimodule cor_bimodule(const Bimodule& m, const ExtensionPtr& ext) { return cor_bimodule_data(m, ext, true).bimodule; }

CategoryPtr cor_category(const KCategory& a, const ExtensionPtr& ext) {
    if (!same_field(a.field_ptr(), ext->field()))
        throw Error(ErrorCode::extension_mismatch, "category is not defined over the extension field");
    a.require_valid();
    const GaloisExtension& e = *ext;
    const Field& k = *e.base();
    const std::size_t n = a.size();
    std::map<std::size_t, CorModule> mods;
    std::map<std::size_t, std::vector<Vector>> ambs;
    auto mod = [&](std::size_t d) -> const CorModule& {
        auto it = mods.find(d);
        if (it == mods.end()) {
            it = mods.emplace(d, cor_module(LModule::standard(ext, d))).first;
            ambs[d] = basis_ambients(k, it->second);
        }
        return it->second;
    };
    std::vector<std::size_t> dims(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = mod(a.hom_dim(x, y)).dim();
    auto out = std::make_shared<KCategory>(e.base(), a.objects(), dims);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const std::size_t dxy = a.hom_dim(x, y), dyz = a.hom_dim(y, z), dxz = a.hom_dim(x, z);
                const CorModule& cxz = mod(dxz);
                const CorModule& cxy = mod(dxy);
                const CorModule& cyz = mod(dyz);
                if (cxy.dim() == 0 || cyz.dim() == 0) continue;
                const Matrix comp = restricted_bilinear(e, dyz, dxy, dxz,
                                                        [&](std::size_t g, std::size_t f) { return a.basis_composite(x, y, z, g, f); });
                const auto& ag = ambs[dyz];
                const auto& af = ambs[dxy];
                for (std::size_t g = 0; g < cyz.dim(); ++g)
                    for (std::size_t f = 0; f < cxy.dim(); ++f)
                        out->set_composite(x, y, z, g, f,
                                           cxz.coordinates(transport_bilinear(k, cxz.slots, ag[g], cyz.width(), af[f], cxy.width(), comp)));
            }
    for (std::size_t x = 0; x < n; ++x) {
        const CorModule& c = mod(a.hom_dim(x, x));
        out->set_identity(x, c.coordinates(kron_power(k, restrict_vector(e, a.identity(x)), c.slots)));
    }
    const auto bad = out->validate();
    if (!bad.empty()) throw Error(ErrorCode::invalid_category, "corestricted category: " + bad.front());
    return out;
}

TensorCompatibility cor_tensor_compatibility(const Bimodule& m, const Bimodule& n, const ExtensionPtr& ext) {
    if (!same_algebra(m.right, n.left)) throw Error(ErrorCode::ring_mismatch, "M ⊗_S N needs matching S");
    const GaloisExtension& e = *ext;
    const Field& k = *e.base();
    const TensorOver mn = tensor_over(m, n);
    const CorBimoduleData cm = cor_bimodule_data(m, ext, true);
    const CorBimoduleData cn = cor_bimodule_data(n, ext, true);
    const CorBimoduleData cmn = cor_bimodule_data(mn.module, ext, true);
    const TensorOver lhs = tensor_over(cm.bimodule, cn.bimodule);

    TensorCompatibility out;
    out.lhs = lhs.module;
    out.rhs = cmn.bimodule;
    const Matrix phi = restricted_bilinear(e, m.dim, n.dim, mn.module.dim, [&](std::size_t i, std::size_t j) {
        return mn.quotient.project(*e.field(), unit_vector(*e.field(), m.dim * n.dim, i * n.dim + j));
    });
    const std::size_t a = cm.bimodule.dim, b = cn.bimodule.dim;
    std::vector<Vector> psi_cols;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            psi_cols.push_back(cmn.mod.coordinates(
                transport_bilinear(k, cm.mod.slots, cm.amb[i], cm.mod.width(), cn.amb[j], cn.mod.width(), phi)));
    const Matrix psi = Matrix::from_columns(k, cmn.bimodule.dim, psi_cols);
    out.well_defined = true;
    for (std::size_t c = 0; c < a * b && out.well_defined; ++c) {
        const Vector u = unit_vector(k, a * b, c);
        if (!equal(k, apply(k, psi, u), apply(k, psi, lhs.quotient.lift(k, lhs.quotient.project(k, u))))) out.well_defined = false;
    }
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < lhs.quotient.dim(); ++c) cols.push_back(apply(k, psi, lhs.quotient.lift(k, unit_vector(k, lhs.quotient.dim(), c))));
    out.map = Matrix::from_columns(k, cmn.bimodule.dim, cols);
    out.bijective = out.map.rows() == out.map.cols() && rank(k, out.map) == out.map.rows();
    out.bimodule_hom = is_bimodule_hom(out.lhs, out.rhs, out.map);
    return out;
}

} // namespace moritakit
