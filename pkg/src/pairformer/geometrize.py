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
"""Upgrade of incidence systems to incidence geometries by completing every edge to a chamber."""
import logging
from collections import defaultdict
from typing import Dict, List, Tuple

import attr

from pairformer.exceptions import PreconditionDegreeError, PreconditionFlagError
from pairformer.graphs import ColoredGraph, maximal_cliques
from pairformer.identifiers import LOGGER_NAME
from pairformer.internal.structures import ChamberVertex, VertexId

_LOGGER = logging.getLogger(LOGGER_NAME)
Edge = Tuple[VertexId, VertexId]
__all__ = ("PreconditionReport", "check_preconditions", "geometrize", "chamber_index", "expected_size")


@attr.s(frozen=True)
class PreconditionReport:
    """Every violation of the geometrize preconditions.

    :param low_degree: Vertices of degree below two
    :param large_flags: Maximal flags of rank three or more
    """

    low_degree: Tuple[VertexId, ...] = attr.ib(converter=tuple)
    large_flags: Tuple[Tuple[VertexId, ...], ...] = attr.ib(converter=tuple)

    @property
    def ok(self) -> bool:
        """No violations."""
        return not self.low_degree and not self.large_flags


def check_preconditions(graph: ColoredGraph) -> PreconditionReport:
    """Collect vertices of degree below two and flags of rank above two."""
    return PreconditionReport(
        low_degree=[vertex for vertex, block in zip(graph.vertex_ids, graph.neighbors) if len(block) < 2],
        large_flags=[
            tuple(graph.vertex_ids[member] for member in clique)
            for clique in maximal_cliques(graph)
            if len(clique) > 2
        ],
    )


def expected_size(graph: ColoredGraph) -> Tuple[int, int]:
    """Vertex and edge counts of :func:`geometrize` output: ``|V| + |E|(|I|-2)`` and ``|E| |I| (|I|-1) / 2``."""
    rank = graph.rank
    return graph.vertex_count + graph.edge_count * (rank - 2), graph.edge_count * rank * (rank - 1) // 2


def geometrize(graph: ColoredGraph, strict: bool = True) -> ColoredGraph:
    """Complete every edge ``{v, w}`` to a chamber with one new vertex ``ChamberVertex((v, w), i)`` for each
    type ``i`` other than those of ``v`` and ``w``.

    The output is a geometry whenever all flags have rank two or less. The degree condition is what keeps the
    automorphism pair unchanged; with ``strict=False`` it is only logged.

    :param graph: Input system
    :param strict: Reject vertices of degree below two
    :raises PreconditionDegreeError: listing every vertex of degree below two
    :raises PreconditionFlagError: listing every flag of rank above two
    """
    report = check_preconditions(graph)
    if report.low_degree and not strict:
        _LOGGER.warning("Geometrizing despite %d vertices of degree below 2", len(report.low_degree))
    elif report.low_degree:
        names = ", ".join(str(vertex) for vertex in report.low_degree)
        raise PreconditionDegreeError(f"Vertices of degree below 2: {names}; run refine first", report.low_degree)
    if report.large_flags:
        names = ", ".join("{" + ",".join(str(member) for member in flag) + "}" for flag in report.large_flags)
        raise PreconditionFlagError(f"Flags of rank above 2: {names}; run refine first", report.large_flags)

    vertices: List[Tuple[VertexId, int]] = list(zip(graph.vertex_ids, graph.vertex_types))
    edges: List[Edge] = []
    for (a, b), edge in zip(graph.edges, graph.edge_ids()):
        present = {graph.vertex_types[a], graph.vertex_types[b]}
        chamber = list(edge)
        for type_index in range(graph.rank):
            if type_index not in present:
                vertex = ChamberVertex(edge, type_index)
                vertices.append((vertex, type_index))
                chamber.append(vertex)
        edges.extend((chamber[x], chamber[y]) for x in range(len(chamber)) for y in range(x + 1, len(chamber)))

    result = ColoredGraph.build(graph.types, vertices, edges)
    _LOGGER.info(
        "Geometrized %d edges into %d vertices and %d edges", graph.edge_count, result.vertex_count, result.edge_count
    )
    return result


def chamber_index(graph: ColoredGraph) -> Dict[Edge, Tuple[VertexId, ...]]:
    """Recover the chamber of every original edge from a :func:`geometrize` output.

    :returns: Map from original edge (sorted identifier pair) to the sorted members of its chamber
    """
    added: Dict[Edge, List[VertexId]] = defaultdict(list)
    for vertex in graph.vertex_ids:
        if isinstance(vertex, ChamberVertex):
            added[vertex.edge].append(vertex)

    chambers = {}
    for left, right in graph.edge_ids():
        if isinstance(left, ChamberVertex) or isinstance(right, ChamberVertex):
            continue
        members = [left, right] + added.get((left, right), [])
        chambers[(left, right)] = tuple(sorted(members, key=VertexId.sort_key))
    return chambers
