# Copyright 2026 The cubesep Authors
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

"""Python bindings for the cubesep library.

Graphs are plain dicts in the library's JSON graph format; exact quantities
are strings such as "3/8".
"""

from ._core import (
    BudgetExceeded,
    CubesepError,
    boost,
    cut,
    decompose,
    edge_expansion,
    full_cube,
    generate,
    oracle,
    rank_experiment,
    run,
    spectrum,
    sse,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "CubesepError",
    "boost",
    "cut",
    "decompose",
    "edge_expansion",
    "full_cube",
    "generate",
    "oracle",
    "rank_experiment",
    "run",
    "spectrum",
    "sse",
    "verify",
]
