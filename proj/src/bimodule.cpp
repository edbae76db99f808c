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

#include "moritakit/bimodule.hpp"

#include <random>

namespace moritakit {

namespace {

Matrix combine(const Field& k, std::size_t dim, const std::vector<Matrix>& basis, const Vector& c) {
    Matrix m = Matrix::zero(k, dim, dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!k.is_zero(c[i])) m = add(k, m, map_entries(basis[i], [&](const Elem& x) { return k.mul(c[i], x); }));
    return m;
}

Matrix block_diagonal(const Field& k, const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m = Matrix::zero(k, r, c);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

/// Restriction of a linear map to an invariant subspace, in its basis.
Matrix restrict_to(const Field& k, const Subspace& sub, const Matrix& map) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < sub.dim(); ++c) {
        auto co = sub.coordinates(k, apply(k, map, sub.basis_vector(c)));
        if (!co) throw Error(ErrorCode::invalid_input, "subspace is not invariant under the action");
        cols.push_back(*co);
    }
    return Matrix::from_columns(k, sub.dim(), cols);
}

} // namespace

Matrix Bimodule::act_left(const Vector& r) const { return combine(field(), dim, left_action, r); }
Matrix Bimodule::act_right(const Vector& s) const { return combine(field(), dim, right_action, s); }

std::vector<std::string> Bimodule::validate() const {
    if (!left.field || !right.field) return {"missing algebra"};
    if (!same_field(left.field, right.field)) return {"left and right algebras live over different fields"};
    if (left_action.size() != left.dim || right_action.size() != right.dim) return {"one action matrix per basis element required"};
    for (const auto& m : left_action)
        if (m.rows() != dim || m.cols() != dim) return {"left action matrix has the wrong shape"};
    for (const auto& m : right_action)
        if (m.rows() != dim || m.cols() != dim) return {"right action matrix has the wrong shape"};
    const Field& k = field();
    std::vector<std::string> out;
    const Matrix id = Matrix::identity(k, dim);
    if (!equal(k, act_left(left.unit), id)) out.push_back("unit of the left algebra does not act as the identity");
    if (!equal(k, act_right(right.unit), id)) out.push_back("unit of the right algebra does not act as the identity");
    for (std::size_t i = 0; i < left.dim; ++i)
        for (std::size_t j = 0; j < left.dim; ++j)
            if (!equal(k, multiply(k, left_action[i], left_action[j]), act_left(left.multiply(left.basis(i), left.basis(j))))) {
                out.push_back("left action is not associative");
                i = left.dim;
                break;
            }
    for (std::size_t i = 0; i < right.dim; ++i)
        for (std::size_t j = 0; j < right.dim; ++j)
            if (!equal(k, multiply(k, right_action[j], right_action[i]), act_right(right.multiply(right.basis(i), right.basis(j))))) {
                out.push_back("right action is not associative");
                i = right.dim;
                break;
            }
    for (std::size_t i = 0; i < left.dim; ++i)
        for (std::size_t j = 0; j < right.dim; ++j)
            if (!equal(k, multiply(k, left_action[i], right_action[j]), multiply(k, right_action[j], left_action[i]))) {
                out.push_back("left and right actions do not commute");
                i = left.dim;
                break;
            }
    return out;
}

void Bimodule::require_valid() const {
    const auto v = validate();
    if (!v.empty()) throw Error(ErrorCode::invalid_input, "invalid bimodule: " + v.front());
}

Bimodule Bimodule::regular(const Algebra& s) {
    Bimodule m;
    m.left = s;
    m.right = s;
    m.dim = s.dim;
    for (std::size_t i = 0; i < s.dim; ++i) {
        m.left_action.push_back(s.left_multiplication(s.basis(i)));
        m.right_action.push_back(s.right_multiplication(s.basis(i)));
    }
    return m;
}

Bimodule Bimodule::free(const Algebra& s, std::size_t n) {
    const Field& k = *s.field;
    Bimodule m;
    m.left = s;
    m.right = s;
    m.dim = s.dim * n;
    for (std::size_t i = 0; i < s.dim; ++i) {
        m.left_action.push_back(block_diagonal(k, std::vector<Matrix>(n, s.left_multiplication(s.basis(i)))));
        m.right_action.push_back(block_diagonal(k, std::vector<Matrix>(n, s.right_multiplication(s.basis(i)))));
    }
    return m;
}

Bimodule Bimodule::row_ideal(const Algebra& s, const Vector& e) {
    const Field& k = *s.field;
    std::vector<Vector> span;
    for (std::size_t j = 0; j < s.dim; ++j) span.push_back(s.multiply(e, s.basis(j)));
    const Subspace sub = Subspace::span(k, Matrix::from_columns(k, s.dim, span));
    Bimodule m;
    m.left = Algebra::ground(s.field);
    m.right = s;
    m.dim = sub.dim();
    m.left_action.push_back(Matrix::identity(k, m.dim));
    for (std::size_t j = 0; j < s.dim; ++j) m.right_action.push_back(restrict_to(k, sub, s.right_multiplication(s.basis(j))));
    return m;
}

Bimodule Bimodule::column_ideal(const Algebra& s, const Vector& e) {
    const Field& k = *s.field;
    std::vector<Vector> span;
    for (std::size_t j = 0; j < s.dim; ++j) span.push_back(s.multiply(s.basis(j), e));
    const Subspace sub = Subspace::span(k, Matrix::from_columns(k, s.dim, span));
    Bimodule m;
    m.left = s;
    m.right = Algebra::ground(s.field);
    m.dim = sub.dim();
    for (std::size_t j = 0; j < s.dim; ++j) m.left_action.push_back(restrict_to(k, sub, s.left_multiplication(s.basis(j))));
    m.right_action.push_back(Matrix::identity(k, m.dim));
    return m;
}

Bimodule Bimodule::from_homomorphism(const Algebra& r, const Algebra& s, const Matrix& phi) {
    if (!is_algebra_homomorphism(r, s, phi)) throw Error(ErrorCode::invalid_algebra, "not an algebra homomorphism");
    Bimodule m = regular(s);
    m.left = r;
    m.left_action.clear();
    for (std::size_t i = 0; i < r.dim; ++i) m.left_action.push_back(s.left_multiplication(phi.column(i)));
    return m;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (!same_field(a.field, b.field) || a.dim != b.dim) return false;
    const Field& k = *a.field;
    return equal(k, a.mult, b.mult) && equal(k, a.unit, b.unit);
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    if (!same_algebra(a.left, b.left) || !same_algebra(a.right, b.right))
        throw Error(ErrorCode::ring_mismatch, "direct sum of bimodules over different algebras");
    const Field& k = a.field();
    Bimodule m;
    m.left = a.left;
    m.right = a.right;
    m.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.left.dim; ++i) m.left_action.push_back(block_diagonal(k, {a.left_action[i], b.left_action[i]}));
    for (std::size_t j = 0; j < a.right.dim; ++j)
        m.right_action.push_back(block_diagonal(k, {a.right_action[j], b.right_action[j]}));
    return m;
}

TensorOver tensor_over(const Bimodule& m, const Bimodule& n) {
    if (!same_algebra(m.right, n.left)) throw Error(ErrorCode::ring_mismatch, "M ⊗_S N needs M_S and _SN over the same S");
    const Field& k = m.field();
    const std::size_t dm = m.dim, dn = n.dim, amb = dm * dn;
    std::vector<Vector> relators;
    for (std::size_t s = 0; s < m.right.dim; ++s) {
        const Matrix& rs = m.right_action[s];
        const Matrix& ls = n.left_action[s];
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                Vector rel(amb, k.zero());
                // (m_i·s) ⊗ n_j
                for (std::size_t a = 0; a < dm; ++a)
                    if (!k.is_zero(rs(a, i))) rel[a * dn + j] = k.add(rel[a * dn + j], rs(a, i));
                // - m_i ⊗ (s·n_j)
                for (std::size_t b = 0; b < dn; ++b)
                    if (!k.is_zero(ls(b, j))) rel[i * dn + b] = k.sub(rel[i * dn + b], ls(b, j));
                relators.push_back(std::move(rel));
            }
    }
    TensorOver out;
    out.quotient = Quotient(k, amb, relators.empty() ? Matrix::zero(k, 0, amb) : Matrix::from_rows(k, amb, relators));
    const std::size_t q = out.quotient.dim();
    auto induced = [&](const std::function<Vector(const Vector&)>& act) {
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < q; ++c) cols.push_back(out.quotient.project(k, act(out.quotient.lift(k, unit_vector(k, q, c)))));
        return Matrix::from_columns(k, q, cols);
    };
    Bimodule& t = out.module;
    t.left = m.left;
    t.right = n.right;
    t.dim = q;
    for (std::size_t r = 0; r < m.left.dim; ++r) {
        const Matrix& l = m.left_action[r];
        t.left_action.push_back(induced([&](const Vector& v) {
            Vector w(amb, k.zero());
            for (std::size_t i = 0; i < dm; ++i)
                for (std::size_t j = 0; j < dn; ++j) {
                    const Elem& c = v[i * dn + j];
                    if (k.is_zero(c)) continue;
                    for (std::size_t a = 0; a < dm; ++a)
                        if (!k.is_zero(l(a, i))) w[a * dn + j] = k.add(w[a * dn + j], k.mul(c, l(a, i)));
                }
            return w;
        }));
    }
    for (std::size_t s = 0; s < n.right.dim; ++s) {
        const Matrix& rr = n.right_action[s];
        t.right_action.push_back(induced([&](const Vector& v) {
            Vector w(amb, k.zero());
            for (std::size_t i = 0; i < dm; ++i)
                for (std::size_t j = 0; j < dn; ++j) {
                    const Elem& c = v[i * dn + j];
                    if (k.is_zero(c)) continue;
                    for (std::size_t b = 0; b < dn; ++b)
                        if (!k.is_zero(rr(b, j))) w[i * dn + b] = k.add(w[i * dn + b], k.mul(c, rr(b, j)));
                }
            return w;
        }));
    }
    return out;
}

bool is_bimodule_hom(const Bimodule& a, const Bimodule& b, const Matrix& f) {
    const Field& k = a.field();
    if (f.rows() != b.dim || f.cols() != a.dim) return false;
    if (!same_algebra(a.left, b.left) || !same_algebra(a.right, b.right)) return false;
    for (std::size_t i = 0; i < a.left.dim; ++i)
        if (!equal(k, multiply(k, f, a.left_action[i]), multiply(k, b.left_action[i], f))) return false;
    for (std::size_t j = 0; j < a.right.dim; ++j)
        if (!equal(k, multiply(k, f, a.right_action[j]), multiply(k, b.right_action[j], f))) return false;
    return true;
}

Matrix bimodule_hom_space(const Bimodule& a, const Bimodule& b) {
    if (!same_algebra(a.left, b.left) || !same_algebra(a.right, b.right))
        throw Error(ErrorCode::ring_mismatch, "bimodules over different algebras");
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t i = 0; i < a.left.dim; ++i) pairs.emplace_back(a.left_action[i], b.left_action[i]);
    for (std::size_t j = 0; j < a.right.dim; ++j) pairs.emplace_back(a.right_action[j], b.right_action[j]);
    return intertwiners(a.field(), b.dim, a.dim, pairs);
}

BimoduleIso bimodule_iso(const Bimodule& a, const Bimodule& b, const SearchOptions& opts) {
    BimoduleIso out;
    if (a.dim != b.dim) return out;
    const Field& k = a.field();
    const Matrix space = bimodule_hom_space(a, b);
    out.space_dim = space.cols();
    const CombinationSearch s = find_combination(k, space, [&](const Vector& v) {
        return is_invertible(k, unflatten(k, b.dim, a.dim, v));
    }, opts);
    out.verdict = s.verdict;
    if (s.verdict == Verdict::yes) {
        const Vector v = space.cols() == 0 ? zero_vector(k, a.dim * b.dim) : apply(k, space, s.coefficients);
        out.map = unflatten(k, b.dim, a.dim, v);
    }
    return out;
}

ProjectiveFunctor bimodule_to_functor(const Bimodule& m, const std::optional<std::vector<Vector>>& given) {
    m.require_valid();
    const Field& k = m.field();
    const Algebra& s = m.right;
    const std::size_t dm = m.dim, ds = s.dim;
    ProjectiveFunctor out;
    auto submodule = [&](const std::vector<Vector>& gens) {
        std::vector<Vector> span;
        for (const auto& g : gens)
            for (std::size_t j = 0; j < ds; ++j) span.push_back(apply(k, m.right_action[j], g));
        if (span.empty()) return Subspace();
        return Subspace::span(k, Matrix::from_columns(k, dm, span));
    };
    if (given) {
        out.generators = *given;
        for (const auto& g : out.generators)
            if (g.size() != dm) throw Error(ErrorCode::invalid_input, "generator has the wrong length");
        if (submodule(out.generators).dim() != dm)
            throw Error(ErrorCode::not_finitely_generated, "the given elements do not generate M as a right module");
    } else {
        // A single generator first (basis vectors, then seeded combinations), so
        // cyclic modules such as S itself map to words of length one.
        if (dm > 0 && dm <= ds) {
            std::mt19937_64 rng(0x5eedULL);
            auto draw = [&]() {
                return k.is_finite() ? k.element(rng() % k.order()) : k.from_int(static_cast<long long>(rng() % 5) - 2);
            };
            for (std::size_t t = 0; t < dm + 32 && out.generators.empty(); ++t) {
                Vector g = t < dm ? unit_vector(k, dm, t) : zero_vector(k, dm);
                if (t >= dm)
                    for (auto& x : g) x = draw();
                if (submodule({g}).dim() == dm) out.generators.push_back(std::move(g));
            }
        }
        Subspace cur = submodule(out.generators);
        for (std::size_t i = 0; i < dm && cur.dim() < dm; ++i) {
            const Vector e = unit_vector(k, dm, i);
            if (cur.dim() > 0 && cur.contains(k, e)) continue;
            out.generators.push_back(e);
            cur = submodule(out.generators);
        }
        if (cur.dim() != dm && dm > 0) throw Error(ErrorCode::not_finitely_generated, "generation check failed");
    }
    const std::size_t n = out.generators.size();
    // π : S^n -> M, (s_k) -> Σ m_k·s_k
    std::vector<Vector> pcols;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t j = 0; j < ds; ++j) pcols.push_back(apply(k, m.right_action[j], out.generators[g]));
    out.surjection = Matrix::from_columns(k, dm, pcols);
    // right S-linear maps M -> S^n
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t j = 0; j < ds; ++j)
        pairs.emplace_back(m.right_action[j], block_diagonal(k, std::vector<Matrix>(n, s.right_multiplication(s.basis(j)))));
    const Matrix homs = intertwiners(k, n * ds, dm, pairs);
    // π∘σ = 1
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < homs.cols(); ++c)
        cols.push_back(flatten(multiply(k, out.surjection, unflatten(k, n * ds, dm, homs.column(c)))));
    const Vector target = flatten(Matrix::identity(k, dm));
    std::optional<Vector> coeff;
    if (dm == 0) coeff = Vector(homs.cols(), k.zero());
    else if (!cols.empty()) coeff = solve(k, Matrix::from_columns(k, dm * dm, cols), target);
    if (!coeff) throw Error(ErrorCode::not_projective, "the surjection S^n -> M has no S-linear section");
    const Vector sig = homs.cols() == 0 ? zero_vector(k, n * ds * dm) : apply(k, homs, *coeff);
    out.section = unflatten(k, n * ds, dm, sig);

    const CategoryPtr rc = algebra_as_category(m.left, "*");
    const CategoryPtr sc = algebra_as_category(s, "*");
    auto view = std::make_shared<const SatView>(sc);
    const Word w(n, 0);
    // ambient Mat(w,w): block (j,k) at (j*n+k)*ds
    auto matrix_of = [&](const Matrix& lin) {
        Vector amb(n * n * ds, k.zero());
        for (std::size_t g = 0; g < n; ++g) {
            const Vector col = apply(k, out.section, apply(k, lin, out.generators[g]));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t c = 0; c < ds; ++c) amb[(j * n + g) * ds + c] = col[j * ds + c];
        }
        return amb;
    };
    out.idempotent = matrix_of(Matrix::identity(k, dm));
    ViewFunctor f{rc, view, {SatObject{w, out.idempotent}}, {}};
    std::vector<Vector> hcols;
    for (std::size_t i = 0; i < m.left.dim; ++i) hcols.push_back(matrix_of(m.left_action[i]));
    f.homs.push_back(Matrix::from_columns(k, n * n * ds, hcols));
    out.functor = std::move(f);
    return out;
}

Bimodule functor_to_bimodule(const ViewFunctor& g) {
    if (g.src->size() != 1 || g.tgt->base()->size() != 1)
        throw Error(ErrorCode::object_mismatch, "functor_to_bimodule needs one-object source and target");
    const SatView& v = *g.tgt;
    const Field& k = g.src->field();
    Bimodule m;
    m.left = endomorphism_algebra(*g.src, 0);
    m.right = endomorphism_algebra(*v.base(), 0);
    const SatObject one = v.object(0);
    const SatObject& img = g.objects[0];
    const Subspace& h = v.hom(one, img);
    m.dim = h.dim();
    for (std::size_t i = 0; i < m.left.dim; ++i) {
        const Vector gr = g.hom(0, 0).column(i);
        std::vector<Vector> cols;
        for (std::size_t t = 0; t < m.dim; ++t)
            cols.push_back(h.coordinates_unchecked(k, v.ambient_compose(one.word, img.word, img.word, gr, h.basis_vector(t))));
        m.left_action.push_back(Matrix::from_columns(k, m.dim, cols));
    }
    for (std::size_t j = 0; j < m.right.dim; ++j) {
        const Vector sj = unit_vector(k, m.right.dim, j);
        std::vector<Vector> cols;
        for (std::size_t t = 0; t < m.dim; ++t)
            cols.push_back(h.coordinates_unchecked(k, v.ambient_compose(one.word, one.word, img.word, h.basis_vector(t), sj)));
        m.right_action.push_back(Matrix::from_columns(k, m.dim, cols));
    }
    return m;
}

} // namespace moritakit
