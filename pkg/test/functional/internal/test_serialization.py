# Copyright 2026 The pairformer authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You
# may not use this file except in compliance with the License. A copy of
# the License is located at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is
# distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
# ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.
"""Functional tests for ``pairformer.internal.serialization``."""
import json

import pytest

from pairformer.exceptions import GraphFormatError, NotProperError
from pairformer.internal.serialization import (
    dump_graph,
    dumps,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    loads,
    to_dot,
)
from pairformer.internal.structures import Raw
from pairformer.realize import realize

from .. import functional_test_utils

pytestmark = [pytest.mark.local, pytest.mark.functional]


def test_canonical_vector_is_stable():
    text = functional_test_utils.read_vector("gamma2.json")

    assert dumps(loads(text)) == text


def test_non_canonical_vector_is_normalized():
    text = functional_test_utils.read_vector("cycle4.json")
    graph = loads(text)

    canonical = dumps(graph)

    assert canonical != text
    assert [entry["id"] for entry in json.loads(canonical)["vertices"]] == ["0", "1", "2", "3"]
    assert json.loads(canonical)["edges"] == [["0", "1"], ["0", "3"], ["1", "2"], ["2", "3"]]
    assert dumps(loads(canonical)) == canonical


def test_structured_ids_survive(tmpdir):
    graph = realize(functional_test_utils.pair_from_specs("cyclic:2", "trivial"))
    target = str(tmpdir.join("realized.json"))

    dump_graph(graph, target)
    loaded = load_graph(target)

    assert loaded.vertex_ids == graph.vertex_ids
    assert loaded.edges == graph.edges
    assert graph_to_dict(loaded) == graph_to_dict(graph)


@pytest.mark.parametrize(
    "text",
    (
        pytest.param("{", id="invalid json"),
        pytest.param("[]", id="not an object"),
        pytest.param('{"types": ["a"], "vertices": []}', id="missing edges"),
        pytest.param('{"types": "a", "vertices": [], "edges": []}', id="types not a list"),
        pytest.param('{"types": ["a"], "vertices": [{"id": "0"}], "edges": []}', id="vertex without type"),
        pytest.param('{"types": ["a"], "vertices": [{"id": "0", "type": "a"}], "edges": []}', id="string type"),
        pytest.param('{"types": ["a"], "vertices": [{"id": "0", "type": true}], "edges": []}', id="boolean type"),
        pytest.param('{"types": ["a"], "vertices": [{"id": "Q(0)", "type": 0}], "edges": []}', id="bad id"),
        pytest.param('{"types": ["a"], "vertices": [{"id": "0", "type": 0}], "edges": [["0"]]}', id="short edge"),
    ),
)
def test_loads_rejects(text):
    with pytest.raises(GraphFormatError):
        loads(text)


def test_loads_validates():
    text = '{"types": ["a", "b"], "vertices": [{"id": "0", "type": 0}, {"id": "1", "type": 0}], "edges": [["0", "1"]]}'

    with pytest.raises(NotProperError):
        loads(text)


def test_loads_without_validation():
    raw = {"types": ["a", "b"], "vertices": [{"id": "0", "type": 0}, {"id": "1", "type": 0}], "edges": [["0", "1"]]}

    graph = graph_from_dict(raw, check=False)

    assert graph.edge_count == 1


def test_to_dot():
    graph = functional_test_utils.load_vector_graph("gamma2")

    dot = to_dot(graph, name="gamma")

    lines = dot.splitlines()
    assert lines[0] == 'graph "gamma" {'
    assert lines[-1] == "}"
    assert '  "pt(1)" [label="pt(1)", fillcolor="#2ca02c", type="2"];' in lines
    assert '  "base[](1,2;0)" -- "base[](1,2;1)";' in lines
    assert sum(1 for line in lines if " -- " in line) == graph.edge_count


def test_to_dot_quotes_names():
    graph = loads('{"types": ["say \\"hi\\""], "vertices": [{"id": "0", "type": 0}], "edges": []}')

    assert 'type="say \\"hi\\""' in to_dot(graph)
    assert graph.vertex_ids == (Raw(0),)


def test_load_graph_rejects_binary_file(tmpdir):
    target = tmpdir.join("graph.json")
    target.write_binary(b"\xff\xfe\x00")

    with pytest.raises(GraphFormatError):
        load_graph(str(target))
