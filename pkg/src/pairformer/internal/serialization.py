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
"""Canonical JSON and DOT renderings of colored graphs."""
import json
import logging
from typing import Dict

from pairformer.exceptions import GraphFormatError
from pairformer.graphs import ColoredGraph
from pairformer.identifiers import DOT_PALETTE, LOGGER_NAME
from pairformer.internal.structures import parse_vertex_id

_LOGGER = logging.getLogger(LOGGER_NAME)
__all__ = ("graph_to_dict", "graph_from_dict", "dumps", "loads", "load_graph", "dump_graph", "to_dot")


def graph_to_dict(graph: ColoredGraph) -> Dict:
    """Build the canonical JSON structure of a graph."""
    return {
        "types": list(graph.types),
        "vertices": [
            {"id": vertex.render(), "type": type_index}
            for vertex, type_index in zip(graph.vertex_ids, graph.vertex_types)
        ],
        "edges": [[left.render(), right.render()] for left, right in graph.edge_ids()],
    }


def graph_from_dict(raw: Dict, check: bool = True) -> ColoredGraph:
    """Load a graph from its JSON structure.

    :param raw: Parsed JSON
    :param check: Validate the incidence-system invariants
    :raises GraphFormatError: if the structure is malformed
    """
    if not isinstance(raw, dict) or not {"types", "vertices", "edges"} <= set(raw):
        raise GraphFormatError('Graph JSON must be an object with "types", "vertices" and "edges"')

    types = raw["types"]
    if not isinstance(types, list) or not all(isinstance(name, str) for name in types):
        raise GraphFormatError('"types" must be a list of strings')

    try:
        vertices = [(parse_vertex_id(str(entry["id"])), entry["type"]) for entry in raw["vertices"]]
        edges = [(parse_vertex_id(str(left)), parse_vertex_id(str(right))) for left, right in raw["edges"]]
    except (KeyError, TypeError, ValueError) as error:
        if isinstance(error, GraphFormatError):
            raise
        raise GraphFormatError(f"Malformed vertex or edge entry: {error!r}")

    for vertex, type_index in vertices:
        if not isinstance(type_index, int) or isinstance(type_index, bool):
            raise GraphFormatError(f'Vertex "{vertex}" has a non-integer type')

    return ColoredGraph.build(types, vertices, edges, check=check)


def dumps(graph: ColoredGraph) -> str:
    """Render a graph as canonical JSON text."""
    return json.dumps(graph_to_dict(graph), indent=2) + "\n"


def loads(text: str, check: bool = True) -> ColoredGraph:
    """Parse a graph from JSON text.

    :raises GraphFormatError: if the text is not valid graph JSON
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as error:
        raise GraphFormatError(f"Invalid JSON: {error}")
    return graph_from_dict(raw, check=check)


def load_graph(filename: str, check: bool = True) -> ColoredGraph:
    """Read a graph from a JSON file."""
    _LOGGER.debug("Loading graph from %s", filename)
    try:
        with open(filename, "r", encoding="utf-8") as graph_file:
            text = graph_file.read()
    except UnicodeDecodeError as error:
        raise GraphFormatError(f'Graph file "{filename}" is not UTF-8 text: {error}')
    return loads(text, check=check)


def dump_graph(graph: ColoredGraph, filename: str):
    """Write a graph to a JSON file."""
    _LOGGER.debug("Writing graph with %d vertices to %s", graph.vertex_count, filename)
    with open(filename, "w") as graph_file:
        graph_file.write(dumps(graph))


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: ColoredGraph, name: str = "incidence") -> str:
    """Render a graph in Graphviz DOT; vertices are colored by type, cycling through the palette."""
    lines = [f"graph {_quote(name)} {{", "  node [style=filled, fontcolor=white];"]
    for vertex, type_index in zip(graph.vertex_ids, graph.vertex_types):
        color = DOT_PALETTE[type_index % len(DOT_PALETTE)]
        label = vertex.render()
        lines.append(
            f"  {_quote(label)} [label={_quote(label)}, fillcolor={_quote(color)}, "
            f"type={_quote(graph.types[type_index])}];"
        )
    for left, right in graph.edge_ids():
        lines.append(f"  {_quote(left.render())} -- {_quote(right.render())};")
    lines.append("}")
    return "\n".join(lines) + "\n"
