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

#include "moritakit/acceptance/oracles.hpp"

#include <functional>

namespace moritakit::acceptance {

namespace {

/// All vectors of Hom(x,y) over a finite field.
std::vector<Vector> all_morphisms(const KCategory& b, std::size_t x, std::size_t y) {
    const Field& k = b.field();
    const std::size_t d = b.hom_dim(x, y);
    std::vector<Vector> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= k.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector v(d);
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = k.element(r % k.order());
            r /= k.order();
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

bool is_retract_of_sum(const KCategory& b, const std::vector<SatObject>& images, std::size_t y, std::size_t max_word) {
    const Field& k = b.field();
    const std::size_t m = images.size();
    std::vector<std::vector<Vector>> ins(m), outs(m);
    for (std::size_t s = 0; s < m; ++s) {
        const std::size_t x = images[s].word.at(0);
        const Vector& e = images[s].idem;
        for (auto& i : all_morphisms(b, y, x))
            if (equal(k, b.compose(y, x, x, e, i), i)) ins[s].push_back(i);
        for (auto& p : all_morphisms(b, x, y))
            if (equal(k, b.compose(x, x, y, p, e), p)) outs[s].push_back(p);
    }
    // Σ_j p_j∘i_j over words of image indices, enumerated as nondecreasing
    // sequences since the order of summands does not matter.
    std::function<bool(std::size_t, std::size_t, const Vector&)> go = [&](std::size_t len, std::size_t from, const Vector& acc) {
        if (len == 0) return equal(k, acc, b.identity(y));
        for (std::size_t s = from; s < m; ++s) {
            const std::size_t x = images[s].word[0];
            for (const auto& i : ins[s])
                for (const auto& p : outs[s])
                    if (go(len - 1, s, add(k, acc, b.compose(y, x, y, p, i)))) return true;
        }
        return false;
    };
    for (std::size_t len = 1; len <= max_word; ++len)
        if (go(len, 0, zero_vector(k, b.hom_dim(y, y)))) return true;
    return false;
}

bool retract_oracle(const KCategory& b, const std::vector<SatObject>& images, std::size_t max_word) {
    for (std::size_t y = 0; y < b.size(); ++y)
        if (!is_retract_of_sum(b, images, y, max_word)) return false;
    return true;
}

std::size_t sandwich_rank_oracle(const Algebra& a) {
    const Field& k = *a.field;
    const std::size_t d = a.dim;
    std::vector<Vector> cols;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector col;
            for (std::size_t j = 0; j < d; ++j) {
                const Vector v = a.multiply(a.multiply(a.basis(x), a.basis(j)), a.basis(y));
                col.insert(col.end(), v.begin(), v.end());
            }
            cols.push_back(std::move(col));
        }
    return rank(k, Matrix::from_columns(k, d * d, cols));
}

std::size_t power(std::size_t m, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= m;
    return r;
}

} // namespace moritakit::acceptance
