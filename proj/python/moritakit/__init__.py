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

"""Python bindings for moritakit."""

import json as _json

from ._moritakit import (  # noqa: F401
    MoritakitError,
    acceptance,
    is_azumaya,
    run_cli,
    sandwich_rank,
    trivialize,
)


def algebra_json(algebra) -> str:
    """Accepts a dict or a JSON string describing an algebra."""
    return algebra if isinstance(algebra, str) else _json.dumps(algebra)


__all__ = [
    "MoritakitError",
    "acceptance",
    "algebra_json",
    "is_azumaya",
    "run_cli",
    "sandwich_rank",
    "trivialize",
]
