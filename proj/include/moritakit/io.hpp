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

#include <string>

#include <json.hpp>

#include "moritakit/algebra.hpp"
#include "moritakit/bimodule.hpp"
#include "moritakit/envelopes.hpp"
#include "moritakit/field.hpp"
#include "moritakit/galois.hpp"
#include "moritakit/galois_extension.hpp"
#include "moritakit/lincat.hpp"

namespace moritakit::io {

/// Keys are emitted sorted, so equal values serialize byte-identically.
using Json = nlohmann::json;

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

/// {"ring":"Q"}, {"ring":"GF","p":p} or {"ring":"GF","p":p,"n":n,"modulus":[…]},
/// and {"ring":"ext","base":…,"degree":n,"mult":[…],"unit":[…]} otherwise.
/// A bare "L" resolves to `context` (the extension field of a job).
Json ring_to_json(const Field& f);
FieldPtr ring_from_json(const Json& j, const FieldPtr& context = nullptr);

/// Q: "num/den" (integers accepted on input); GF(p): integer; extensions:
/// the list of base coordinates, low to high.
Json elem_to_json(const Field& f, const Elem& x);
Elem elem_from_json(const Field& f, const Json& j);
Json vector_to_json(const Field& f, const Vector& v);
Vector vector_from_json(const Field& f, const Json& j);
/// A list of rows.
Json matrix_to_json(const Field& f, const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);

/// {"ring", "objects", "hom": {"x|y": dim}, "comp": {"x|y|z": table},
///  "id": {"x": coeffs}} where table[b][a] is b∘a.
Json category_to_json(const KCategory& c);
CategoryPtr category_from_json(const Json& j, const FieldPtr& context = nullptr);

/// {"source", "target", "obj_map": {"x": "Fx"}, "hom_maps": {"x|y": rows}}.
Json functor_to_json(const KFunctor& f);
KFunctor functor_from_json(const Json& j, const FieldPtr& context = nullptr);

/// {"ring", "dim", "mult" (mult[i][j] = coefficients of e_i·e_j), "unit"}.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, const FieldPtr& context = nullptr);

/// {"left", "right", "dim", "left_action", "right_action"}.
Json bimodule_to_json(const Bimodule& m);
Bimodule bimodule_from_json(const Json& j, const FieldPtr& context = nullptr);

/// Base ring keys plus "degree", "mult_table", "unit", "group" (list of
/// matrices as rows). Shorthands: {"extension":"GF","p":p,"n":n} and
/// {"extension":"Q","d":d} for Q(sqrt d).
Json extension_to_json(const GaloisExtension& e);
ExtensionPtr extension_from_json(const Json& j);

/// {"l_dim": m} for L^m.
LModule lmodule_from_json(const ExtensionPtr& ext, const Json& j);

/// Free category presentation: {"objects", "arrows": [{"name","src","tgt"}],
/// "identities": [arrow names], "composition": [{"g","f","result"}]}.
Presentation presentation_from_json(const Json& j);

/// {"word": [ids], "idem": blocks} with idem[i][j] the (i,j) block.
Json sat_object_to_json(const SatView& v, const SatObject& s);
SatObject sat_object_from_json(const SatView& v, const Json& j);
/// The functor format with SatObjects in "obj_map" and ambient hom columns.
Json view_functor_to_json(const ViewFunctor& f);
ViewFunctor view_functor_from_json(const Json& j, const FieldPtr& context = nullptr);

Json transformation_to_json(const KFunctor& f0, const NaturalTransformation& eta);
NaturalTransformation transformation_from_json(const KFunctor& f0, const KFunctor& f1, const Json& j);

} // namespace moritakit::io
