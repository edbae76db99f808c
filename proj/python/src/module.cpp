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

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moritakit/acceptance/criteria.hpp"
#include "moritakit/azumaya.hpp"
#include "moritakit/cli.hpp"
#include "moritakit/io.hpp"

namespace py = pybind11;
using namespace moritakit;

namespace {

Algebra parse_algebra(const std::string& text) { return io::algebra_from_json(io::Json::parse(text)); }

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

py::list run_acceptance(const std::string& suite, std::uint64_t seed) {
    if (!acceptance::known_suite(suite)) throw py::value_error("unknown suite '" + suite + "'");
    std::vector<acceptance::CriterionResult> results;
    {
        py::gil_scoped_release release;
        results = acceptance::run_suite(suite, seed);
    }
    py::list out;
    for (const auto& r : results) {
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        d["limit"] = r.limit;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_moritakit, m) {
    m.doc() = "Morita theory of finite linear categories";

    py::register_exception<Error>(m, "MoritakitError", PyExc_ValueError);

    m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
    m.def(
        "is_azumaya", [](const std::string& algebra) { return is_azumaya(parse_algebra(algebra)); }, py::arg("algebra_json"));
    m.def(
        "sandwich_rank",
        [](const std::string& algebra) {
            const auto c = azumaya_certificate(parse_algebra(algebra));
            return py::make_tuple(c.rank, c.expected);
        },
        py::arg("algebra_json"), "(rank, dim²) of A ⊗ A^op -> End_K(A).");
    m.def(
        "trivialize",
        [](const std::string& algebra, std::uint64_t budget) -> py::object {
            const Algebra a = parse_algebra(algebra);
            TrivializeOptions opts;
            opts.budget = budget;
            const Trivialization t = morita_trivialize(a, opts);
            if (t.verdict != Verdict::yes) return py::none();
            return py::str(io::dump(io::vector_to_json(*a.field, *t.idempotent)));
        },
        py::arg("algebra_json"), py::arg("budget") = 1u << 16, "A rank-one idempotent as JSON, or None when unknown.");
    m.def("acceptance", &run_acceptance, py::arg("suite") = "all", py::arg("seed") = 42);
}
