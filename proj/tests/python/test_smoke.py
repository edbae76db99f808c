# Copyright 2026 The moritakit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import pathlib

import pytest

import moritakit

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def read(name):
    return (DATA / name).read_text()


def test_matrix_algebra_is_azumaya():
    assert moritakit.is_azumaya(read("M2_GF3.json"))
    assert moritakit.sandwich_rank(read("M2_GF3.json")) == (16, 16)


def test_split_algebra_is_not_azumaya():
    rank, expected = moritakit.sandwich_rank(read("KxK.json"))
    assert expected == 4
    assert rank < 4
    assert not moritakit.is_azumaya(read("KxK.json"))


def test_trivialize_returns_an_idempotent():
    e = moritakit.trivialize(read("M2_GF2.json"))
    assert e is not None
    assert len(json.loads(e)) == 4
    assert moritakit.trivialize(read("H.json"), budget=500) is None


def test_cli_round_trip(tmp_path):
    out = tmp_path / "report.json"
    code, stdout, _ = moritakit.run_cli(["azumaya-check", str(DATA / "M2_GF3.json"), "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["verdict"] == "true"
    code, _, _ = moritakit.run_cli(["verify-witness", str(out)])
    assert code == 0


def test_cli_rejects_unknown_verbs():
    code, _, err = moritakit.run_cli(["frobnicate"])
    assert code == 2


def test_invalid_algebras_are_rejected():
    broken = json.dumps({"ring": {"ring": "Q"}, "dim": 1, "mult": [[[1]]], "unit": [0]})
    assert not moritakit.is_azumaya(broken)
    with pytest.raises(ValueError):
        moritakit.sandwich_rank(broken)


def test_core_acceptance_suite_passes():
    results = moritakit.acceptance("core", 7)
    assert [r["id"] for r in results] == [1, 2, 3, 4, 5]
    assert all(r["pass"] for r in results), [r["detail"] for r in results if not r["pass"]]
