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

#include "moritakit/io.hpp"

#include <fstream>
#include <sstream>

namespace moritakit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_input, what); }

const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t size_of(const Json& j, const char* key) {
    const Json& v = field_of(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) bad(std::string("\"") + key + "\" must be a natural number");
    return v.get<std::size_t>();
}

std::size_t object_index(const KCategory& c, const Json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (!c.has_object(name)) bad("unknown object \"" + name + "\"");
        return c.index(name);
    }
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const auto i = j.get<long long>();
        if (i < 0 || static_cast<std::size_t>(i) >= c.size()) bad("object index out of range");
        return static_cast<std::size_t>(i);
    }
    bad("objects are referenced by name or index");
}

Json ring_keys(const Field& f) {
    switch (f.kind()) {
    case FieldKind::rationals: return Json{{"ring", "Q"}};
    case FieldKind::prime: return Json{{"ring", "GF"}, {"p", f.characteristic()}};
    case FieldKind::extension: break;
    }
    if (!f.modulus().empty())
        return Json{{"ring", "GF"}, {"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
    const Field& b = *f.base();
    Json mult = Json::array();
    const std::size_t n = f.degree();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Vector c(f.structure_constants().begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                     f.structure_constants().begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
            row.push_back(vector_to_json(b, c));
        }
        mult.push_back(std::move(row));
    }
    return Json{{"ring", "ext"}, {"base", ring_to_json(b)}, {"degree", n}, {"mult", mult}, {"unit", vector_to_json(b, f.unit_vector())}};
}

Vector table_from_json(const Field& b, const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) bad("structure table has the wrong shape");
    Vector out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) bad("structure table has the wrong shape");
        for (const auto& cell : row) {
            Vector c = vector_from_json(b, cell);
            if (c.size() != n) bad("structure table entry has the wrong length");
            out.insert(out.end(), c.begin(), c.end());
        }
    }
    return out;
}

} // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        bad(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    out << dump(j);
}

Json ring_to_json(const Field& f) { return ring_keys(f); }

FieldPtr ring_from_json(const Json& j, const FieldPtr& context) {
    const Json& r = j.is_object() && j.contains("ring") ? j.at("ring") : j;
    if (r.is_string()) {
        const auto kind = r.get<std::string>();
        if (kind == "Q") return Field::rationals();
        if (kind == "L") {
            if (!context) bad("ring \"L\" needs an extension context");
            return context;
        }
        if (kind == "GF") {
            const auto p = field_of(j, "p").get<std::uint64_t>();
            const unsigned n = j.contains("n") ? j.at("n").get<unsigned>() : 1;
            if (n == 1) return Field::prime(p);
            if (j.contains("modulus")) return Field::galois_field(p, n, j.at("modulus").get<std::vector<std::uint64_t>>());
            return Field::galois_field(p, n);
        }
        if (kind == "ext") {
            const FieldPtr base = ring_from_json(field_of(j, "base"), context);
            const std::size_t n = size_of(j, "degree");
            Vector mult = table_from_json(*base, field_of(j, "mult"), n);
            Vector unit = vector_from_json(*base, field_of(j, "unit"));
            return Field::extension(base, static_cast<unsigned>(n), std::move(mult), std::move(unit));
        }
        bad("unknown ring \"" + kind + "\"");
    }
    if (r.is_object()) return ring_from_json(r, context);
    bad("malformed ring");
}

Json elem_to_json(const Field& f, const Elem& x) {
    switch (f.kind()) {
    case FieldKind::rationals: return std::get<Rational>(x).get_str();
    case FieldKind::prime: return std::get<std::uint64_t>(x);
    case FieldKind::extension: return vector_to_json(*f.base(), f.coordinates(x));
    }
    return nullptr;
}

Elem elem_from_json(const Field& f, const Json& j) {
    switch (f.kind()) {
    case FieldKind::rationals: {
        if (j.is_number_integer()) return f.from_int(j.get<long long>());
        if (!j.is_string()) bad("rational scalars are strings \"num/den\" or integers");
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) bad("malformed rational \"" + j.get<std::string>() + "\"");
        if (q.get_den() == 0) bad("rational with zero denominator");
        q.canonicalize();
        return f.from_rational(q);
    }
    case FieldKind::prime: {
        if (!j.is_number_integer()) bad("GF(p) scalars are integers");
        const long long v = j.get<long long>();
        return f.from_int(v);
    }
    case FieldKind::extension: {
        Vector c = vector_from_json(*f.base(), j);
        if (c.size() != f.degree()) bad("extension scalar has the wrong number of coordinates");
        return f.from_coordinates(c);
    }
    }
    bad("unsupported field");
}

Json vector_to_json(const Field& f, const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(elem_to_json(f, x));
    return a;
}

Vector vector_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) bad("expected a list of scalars");
    Vector v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(elem_from_json(f, x));
    return v;
}

Json matrix_to_json(const Field& f, const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(f, m.row(i)));
    return a;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) bad("matrix has the wrong number of rows");
    Matrix m = Matrix::zero(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vector r = vector_from_json(f, j[i]);
        if (r.size() != cols) bad("matrix row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

std::string pair_key(const KCategory& c, std::size_t x, std::size_t y) { return c.object(x) + "|" + c.object(y); }

std::vector<std::string> split_key(const std::string& key, std::size_t parts) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : key) {
        if (ch == '|') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    if (out.size() != parts) bad("malformed key \"" + key + "\"");
    return out;
}

Json category_to_json(const KCategory& c) {
    const Field& f = c.field();
    const std::size_t n = c.size();
    Json hom = Json::object(), comp = Json::object(), ids = Json::object();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) hom[pair_key(c, x, y)] = c.hom_dim(x, y);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (c.hom_dim(x, y) == 0 || c.hom_dim(y, z) == 0 || c.hom_dim(x, z) == 0) continue;
                Json table = Json::array();
                for (std::size_t b = 0; b < c.hom_dim(y, z); ++b) {
                    Json row = Json::array();
                    for (std::size_t a = 0; a < c.hom_dim(x, y); ++a) row.push_back(vector_to_json(f, c.basis_composite(x, y, z, b, a)));
                    table.push_back(std::move(row));
                }
                comp[c.object(x) + "|" + c.object(y) + "|" + c.object(z)] = std::move(table);
            }
    for (std::size_t x = 0; x < n; ++x) ids[c.object(x)] = vector_to_json(f, c.identity(x));
    return Json{{"ring", ring_to_json(f)}, {"objects", c.objects()}, {"hom", hom}, {"comp", comp}, {"id", ids}};
}

CategoryPtr category_from_json(const Json& j, const FieldPtr& context) {
    const FieldPtr f = ring_from_json(field_of(j, "ring"), context);
    const auto objects = field_of(j, "objects").get<std::vector<std::string>>();
    const std::size_t n = objects.size();
    for (const auto& o : objects)
        if (o.find('|') != std::string::npos) bad("object names may not contain '|'");
    std::vector<std::size_t> dims(n * n, 0);
    {
        KCategory names(f, objects, dims);
        for (const auto& [key, d] : field_of(j, "hom").items()) {
            const auto parts = split_key(key, 2);
            dims[object_index(names, parts[0]) * n + object_index(names, parts[1])] = d.get<std::size_t>();
        }
    }
    auto c = std::make_shared<KCategory>(f, objects, dims);
    if (j.contains("comp"))
        for (const auto& [key, t] : j.at("comp").items()) {
            const auto parts = split_key(key, 3);
            const std::size_t x = object_index(*c, parts[0]);
            const std::size_t y = object_index(*c, parts[1]);
            const std::size_t z = object_index(*c, parts[2]);
            if (!t.is_array() || t.size() != c->hom_dim(y, z)) bad("composition table has the wrong number of rows");
            for (std::size_t b = 0; b < t.size(); ++b) {
                if (!t[b].is_array() || t[b].size() != c->hom_dim(x, y)) bad("composition table row has the wrong length");
                for (std::size_t a = 0; a < t[b].size(); ++a) {
                    Vector v = vector_from_json(*f, t[b][a]);
                    if (v.size() != c->hom_dim(x, z)) bad("composite has the wrong length");
                    c->set_composite(x, y, z, b, a, v);
                }
            }
        }
    const Json& ids = field_of(j, "id");
    for (std::size_t x = 0; x < n; ++x) {
        if (!ids.contains(objects[x])) bad("missing identity for \"" + objects[x] + "\"");
        Vector v = vector_from_json(*f, ids.at(objects[x]));
        if (v.size() != c->hom_dim(x, x)) bad("identity has the wrong length");
        c->set_identity(x, std::move(v));
    }
    return c;
}

Json functor_to_json(const KFunctor& f) {
    const KCategory& s = *f.src;
    const KCategory& t = *f.tgt;
    Json obj = Json::object(), homs = Json::object();
    for (std::size_t x = 0; x < s.size(); ++x) obj[s.object(x)] = t.object(f.object_map[x]);
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y)
            if (s.hom_dim(x, y) > 0) homs[pair_key(s, x, y)] = matrix_to_json(t.field(), f.hom(x, y));
    return Json{{"source", category_to_json(s)}, {"target", category_to_json(t)}, {"obj_map", obj}, {"hom_maps", homs}};
}

KFunctor functor_from_json(const Json& j, const FieldPtr& context) {
    const CategoryPtr s = category_from_json(field_of(j, "source"), context);
    const CategoryPtr t = category_from_json(field_of(j, "target"), context);
    const Json& oj = field_of(j, "obj_map");
    std::vector<std::size_t> omap;
    for (std::size_t x = 0; x < s->size(); ++x) {
        if (!oj.contains(s->object(x))) bad("obj_map misses \"" + s->object(x) + "\"");
        omap.push_back(object_index(*t, oj.at(s->object(x))));
    }
    KFunctor f = KFunctor::blank(s, t, omap);
    if (j.contains("hom_maps"))
        for (const auto& [key, m] : j.at("hom_maps").items()) {
            const auto parts = split_key(key, 2);
            const std::size_t x = object_index(*s, parts[0]);
            const std::size_t y = object_index(*s, parts[1]);
            f.hom(x, y) = matrix_from_json(t->field(), m, t->hom_dim(omap[x], omap[y]), s->hom_dim(x, y));
        }
    return f;
}

Json algebra_to_json(const Algebra& a) {
    const Field& f = *a.field;
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim; ++j) row.push_back(vector_to_json(f, a.multiply(a.basis(i), a.basis(j))));
        mult.push_back(std::move(row));
    }
    return Json{{"ring", ring_to_json(f)}, {"dim", a.dim}, {"mult", mult}, {"unit", vector_to_json(f, a.unit)}};
}

Algebra algebra_from_json(const Json& j, const FieldPtr& context) {
    Algebra a;
    a.field = ring_from_json(field_of(j, "ring"), context);
    a.dim = size_of(j, "dim");
    a.mult = table_from_json(*a.field, field_of(j, "mult"), a.dim);
    a.unit = vector_from_json(*a.field, field_of(j, "unit"));
    if (a.unit.size() != a.dim) bad("unit has the wrong length");
    return a;
}

Json bimodule_to_json(const Bimodule& m) {
    const Field& f = m.field();
    Json l = Json::array(), r = Json::array();
    for (const auto& x : m.left_action) l.push_back(matrix_to_json(f, x));
    for (const auto& x : m.right_action) r.push_back(matrix_to_json(f, x));
    return Json{{"left", algebra_to_json(m.left)}, {"right", algebra_to_json(m.right)}, {"dim", m.dim}, {"left_action", l}, {"right_action", r}};
}

Bimodule bimodule_from_json(const Json& j, const FieldPtr& context) {
    Bimodule m;
    m.left = algebra_from_json(field_of(j, "left"), context);
    m.right = algebra_from_json(field_of(j, "right"), context);
    m.dim = size_of(j, "dim");
    const Json& l = field_of(j, "left_action");
    const Json& r = field_of(j, "right_action");
    if (!l.is_array() || l.size() != m.left.dim || !r.is_array() || r.size() != m.right.dim)
        bad("one action matrix per algebra basis element required");
    for (const auto& x : l) m.left_action.push_back(matrix_from_json(m.field(), x, m.dim, m.dim));
    for (const auto& x : r) m.right_action.push_back(matrix_from_json(m.field(), x, m.dim, m.dim));
    return m;
}

Json extension_to_json(const GaloisExtension& e) {
    Json j = ring_to_json(*e.base());
    const Field& l = *e.field();
    const Field& k = *e.base();
    const std::size_t n = e.degree();
    j["degree"] = n;
    if (!l.modulus().empty()) j["modulus"] = l.modulus();
    Json mult = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b)
            row.push_back(vector_to_json(k, e.basis_multiplication(a).column(b)));
        mult.push_back(std::move(row));
    }
    j["mult_table"] = mult;
    j["unit"] = vector_to_json(k, l.unit_vector());
    Json group = Json::array();
    for (const auto& g : e.group()) group.push_back(matrix_to_json(k, g));
    j["group"] = group;
    return j;
}

ExtensionPtr extension_from_json(const Json& j) {
    if (j.contains("extension")) {
        const auto kind = j.at("extension").get<std::string>();
        if (kind == "GF") return std::make_shared<GaloisExtension>(GaloisExtension::finite(field_of(j, "p").get<std::uint64_t>(), field_of(j, "n").get<unsigned>()));
        if (kind == "Q") return std::make_shared<GaloisExtension>(GaloisExtension::quadratic(field_of(j, "d").get<long>()));
        bad("unknown extension shorthand \"" + kind + "\"");
    }
    const FieldPtr k = ring_from_json(j);
    const std::size_t n = size_of(j, "degree");
    FieldPtr l;
    if (j.contains("modulus")) {
        l = Field::galois_field(k->characteristic(), static_cast<unsigned>(n), j.at("modulus").get<std::vector<std::uint64_t>>());
    } else {
        // mult_table[a][b] = coordinates of b_a·b_b
        l = Field::extension(k, static_cast<unsigned>(n), table_from_json(*k, field_of(j, "mult_table"), n),
                             vector_from_json(*k, field_of(j, "unit")));
    }
    const Json& g = field_of(j, "group");
    if (!g.is_array()) bad("group must be a list of matrices");
    std::vector<Matrix> group;
    for (const auto& m : g) group.push_back(matrix_from_json(*k, m, n, n));
    return std::make_shared<GaloisExtension>(l, std::move(group));
}

LModule lmodule_from_json(const ExtensionPtr& ext, const Json& j) { return LModule::standard(ext, size_of(j, "l_dim")); }

Presentation presentation_from_json(const Json& j) {
    Presentation p;
    p.objects = field_of(j, "objects").get<std::vector<std::string>>();
    auto obj = [&](const Json& o) {
        const auto name = o.get<std::string>();
        for (std::size_t i = 0; i < p.objects.size(); ++i)
            if (p.objects[i] == name) return i;
        bad("unknown object \"" + name + "\"");
    };
    for (const auto& a : field_of(j, "arrows"))
        p.arrows.push_back({field_of(a, "name").get<std::string>(), obj(field_of(a, "src")), obj(field_of(a, "tgt"))});
    auto arrow = [&](const Json& o) {
        const auto name = o.get<std::string>();
        for (std::size_t i = 0; i < p.arrows.size(); ++i)
            if (p.arrows[i].name == name) return i;
        bad("unknown arrow \"" + name + "\"");
    };
    for (const auto& i : field_of(j, "identities")) p.identities.push_back(arrow(i));
    if (p.identities.size() != p.objects.size()) bad("one identity arrow per object required");
    if (j.contains("composition"))
        for (const auto& c : j.at("composition")) p.composition[{arrow(field_of(c, "g")), arrow(field_of(c, "f"))}] = arrow(field_of(c, "result"));
    return p;
}

Json sat_object_to_json(const SatView& v, const SatObject& s) {
    Json word = Json::array(), idem = Json::array();
    for (auto x : s.word) word.push_back(v.base()->object(x));
    const KCategory& b = *v.base();
    for (std::size_t i = 0; i < s.word.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < s.word.size(); ++j) {
            const std::size_t off = v.block_offset(s.word, s.word, i, j);
            const std::size_t len = b.hom_dim(s.word[j], s.word[i]);
            row.push_back(vector_to_json(v.field(), Vector(s.idem.begin() + static_cast<std::ptrdiff_t>(off),
                                                          s.idem.begin() + static_cast<std::ptrdiff_t>(off + len))));
        }
        idem.push_back(std::move(row));
    }
    return Json{{"word", word}, {"idem", idem}};
}

SatObject sat_object_from_json(const SatView& v, const Json& j) {
    SatObject s;
    for (const auto& x : field_of(j, "word")) s.word.push_back(object_index(*v.base(), x));
    if (!j.contains("idem")) {
        s.idem = v.ambient_identity(s.word);
        return s;
    }
    const Json& idem = j.at("idem");
    const KCategory& b = *v.base();
    const std::size_t n = s.word.size();
    if (!idem.is_array() || idem.size() != n) bad("idem must be a block matrix over the word");
    s.idem = v.ambient_zero(s.word, s.word);
    for (std::size_t i = 0; i < n; ++i) {
        if (!idem[i].is_array() || idem[i].size() != n) bad("idem must be a block matrix over the word");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const Vector block = vector_from_json(v.field(), idem[i][jj]);
            if (block.size() != b.hom_dim(s.word[jj], s.word[i])) bad("idem block has the wrong length");
            const std::size_t off = v.block_offset(s.word, s.word, i, jj);
            for (std::size_t c = 0; c < block.size(); ++c) s.idem[off + c] = block[c];
        }
    }
    v.require_object(s);
    return s;
}

/// Objects as SatObjects and homs keyed "x|y" with ambient columns.
Json view_functor_to_json(const ViewFunctor& f) {
    const KCategory& s = *f.src;
    const SatView& v = *f.tgt;
    Json obj = Json::object(), homs = Json::object();
    for (std::size_t x = 0; x < s.size(); ++x) obj[s.object(x)] = sat_object_to_json(v, f.objects[x]);
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y)
            if (s.hom_dim(x, y) > 0) homs[pair_key(s, x, y)] = matrix_to_json(v.field(), f.hom(x, y));
    return Json{{"source", category_to_json(s)}, {"target", category_to_json(*v.base())}, {"obj_map", obj}, {"hom_maps", homs}};
}

ViewFunctor view_functor_from_json(const Json& j, const FieldPtr& context) {
    const CategoryPtr s = category_from_json(field_of(j, "source"), context);
    const CategoryPtr t = category_from_json(field_of(j, "target"), context);
    auto view = std::make_shared<const SatView>(t);
    ViewFunctor f{s, view, {}, {}};
    const Json& oj = field_of(j, "obj_map");
    for (std::size_t x = 0; x < s->size(); ++x) {
        if (!oj.contains(s->object(x))) bad("obj_map misses \"" + s->object(x) + "\"");
        f.objects.push_back(sat_object_from_json(*view, oj.at(s->object(x))));
    }
    const std::size_t n = s->size();
    f.homs.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            f.homs[x * n + y] = Matrix::zero(view->field(), view->ambient_dim(f.objects[x].word, f.objects[y].word), s->hom_dim(x, y));
    if (j.contains("hom_maps"))
        for (const auto& [key, m] : j.at("hom_maps").items()) {
            const auto parts = split_key(key, 2);
            const std::size_t x = object_index(*s, parts[0]);
            const std::size_t y = object_index(*s, parts[1]);
            f.homs[x * n + y] = matrix_from_json(view->field(), m, view->ambient_dim(f.objects[x].word, f.objects[y].word), s->hom_dim(x, y));
        }
    return f;
}

Json transformation_to_json(const KFunctor& f0, const NaturalTransformation& eta) {
    Json comps = Json::array();
    for (const auto& c : eta.components) comps.push_back(vector_to_json(f0.tgt->field(), c));
    return Json{{"components", comps}};
}

NaturalTransformation transformation_from_json(const KFunctor& f0, const KFunctor& f1, const Json& j) {
    NaturalTransformation eta;
    const Json& c = field_of(j, "components");
    if (!c.is_array() || c.size() != f0.src->size()) bad("one component per object required");
    for (std::size_t x = 0; x < c.size(); ++x) {
        Vector v = vector_from_json(f0.tgt->field(), c[x]);
        if (v.size() != f0.tgt->hom_dim(f0.object_map[x], f1.object_map[x])) bad("component has the wrong length");
        eta.components.push_back(std::move(v));
    }
    return eta;
}

} // namespace moritakit::io
