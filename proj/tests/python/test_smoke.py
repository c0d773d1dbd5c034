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

import itertools
import json
from fractions import Fraction

import pytest

import cubesep


def edge_count_across(graph, side):
    side = set(side)
    return sum((u in side) != (v in side) for u, v in graph["edges"])


def test_full_cube_shape():
    q = cubesep.full_cube(4)
    assert q["n"] == 16
    assert len(q["edges"]) == 32
    assert q["labels"][5] == "0101"


def test_generate_is_deterministic():
    a = cubesep.generate(12, n=2100, seed=7)
    b = cubesep.generate(12, n=2100, seed=7)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["graph"]["n"] == 2100
    assert a["trace"]["final_max_degree"] <= 12


@pytest.mark.parametrize("method", ["coordinate", "exact", "spectral"])
def test_cut_reports_its_own_boundary(method):
    q = cubesep.full_cube(3)
    r = cubesep.cut(q, method)
    assert r["boundary_size"] == edge_count_across(q, r["set"])
    assert Fraction(r["expansion"]) == Fraction(r["boundary_size"], len(r["set"]))


def test_exact_cut_matches_brute_force():
    g = {"n": 6, "edges": [[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3], [2, 3]]}
    best = min(
        Fraction(edge_count_across(g, s), len(s))
        for size in range(1, 4)
        for s in itertools.combinations(range(6), size)
    )
    assert Fraction(cubesep.cut(g, "exact")["expansion"]) == best
    assert Fraction(cubesep.edge_expansion(g, [0, 1, 2])["expansion"]) == Fraction(1, 3)


def test_oracles_on_small_graphs():
    star = {"n": 7, "edges": [[0, i] for i in range(1, 7)]}
    assert cubesep.oracle(star, "edge-sep")["size"] == 3
    k4 = {"n": 4, "edges": [list(e) for e in itertools.combinations(range(4), 2)]}
    assert cubesep.oracle(k4, "vertex-sep", "original")["size"] == 2
    assert cubesep.oracle(k4, "vertex-sep", "remaining")["size"] == 3
    assert cubesep.oracle(cubesep.full_cube(3), "girth")["girth"] == 4


def test_sse_family_is_disjoint():
    r = cubesep.sse(cubesep.full_cube(6), "1/8")
    seen = set()
    assert r["sets"]
    for s in r["sets"]:
        assert not seen.intersection(s)
        seen.update(s)


def test_decompose_partitions_vertices():
    g = cubesep.generate(12, n=2100, seed=1)["graph"]
    r = cubesep.decompose(g, "1/2", "heuristic")
    covered = sorted(v for c in r["components"] for v in c["vertices"])
    assert covered == list(range(g["n"]))


def test_spectrum_of_cube():
    r = cubesep.spectrum(cubesep.full_cube(4))
    eig = sorted(r["eigenvalues"], reverse=True)
    expected = [4] + [2] * 4 + [0] * 6 + [-2] * 4 + [-4]
    assert eig == pytest.approx(expected, abs=1e-9)


def test_rank_experiment_and_boost():
    r = cubesep.rank_experiment(cubesep.full_cube(6), 0.5, 0.25, 1, "1/8")
    assert r["sampling"] == "sampled"
    b = cubesep.boost(cubesep.full_cube(3))
    assert b["separator"]["largest_component"] <= 2 * 8 // 3


def test_errors_map_to_python_exceptions():
    with pytest.raises(cubesep.BudgetExceeded):
        cubesep.oracle(cubesep.full_cube(6), "edge-sep")
    with pytest.raises(ValueError):
        cubesep.cut(cubesep.full_cube(3), "nope")
    assert issubclass(cubesep.BudgetExceeded, cubesep.CubesepError)


def test_run_then_verify(tmp_path):
    spec = {"schema": 1, "pipeline": ["generate", "cut"], "params": {"d": 12, "n": 2100}, "seeds": [1, 2]}
    out = tmp_path / "bundle"
    report = cubesep.run(spec, str(out))
    assert report["exit_code"] == 0
    assert cubesep.verify(str(out))["passed"]
