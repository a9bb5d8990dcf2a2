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
"""Incidence systems realizing a prescribed pair ``(G, H)`` from the labeled Cayley digraph of ``G``.

Every arc ``P(i) -> P(j)`` with label ``k`` (1-based position of ``g_j g_i^-1`` in the pair ordering) is
replaced by a gadget: a direction marker ``T(i,j)`` and a chain ``S(i,j,0) .. S(i,j,k+2)`` whose length
encodes the label. Element vertices are typed by coset, so right multiplication by ``a`` is type-preserving
exactly when ``a`` lies in ``H``.
"""
import logging
from typing import Dict, List, Tuple

import attr
import networkx as nx
from attr.validators import instance_of

from pairformer.automorphisms import ColorblindAutomorphism, induced_type_permutation, is_automorphism
from pairformer.exceptions import AuditFailureError, GraphTooLargeError, TrivialGroupError
from pairformer.graphs import ColoredGraph
from pairformer.groups import GroupPair
from pairformer.identifiers import LOGGER_NAME, MAX_GRAPH_VERTICES
from pairformer.internal.structures import PVertex, SVertex, TVertex, VertexId

_LOGGER = logging.getLogger(LOGGER_NAME)
__all__ = ("CayleyDigraph", "build_cayley_digraph", "realize", "expected_counts", "group_action", "self_check")


@attr.s(frozen=True)
class CayleyDigraph:
    """Complete labeled digraph on the pair ordering.

    :param order: Number of vertices ``g``
    :param labels: ``labels[(i, j)]`` is the 0-based ordering position of ``g_j g_i^-1``; never 0
    """

    order: int = attr.ib(validator=instance_of(int))
    labels: Dict[Tuple[int, int], int] = attr.ib(validator=instance_of(dict))

    def label_number(self, i: int, j: int) -> int:
        """1-based label of arc ``(i, j)``, in ``2 .. g``."""
        return self.labels[(i, j)] + 1

    def arcs(self) -> List[Tuple[int, int, int]]:
        """Arcs as ``(i, j, 1-based label)``, sorted."""
        return [(i, j, label + 1) for (i, j), label in sorted(self.labels.items())]


def _require_nontrivial(pair: GroupPair):
    if pair.group.order < 2:
        raise TrivialGroupError("The Cayley construction needs a non-trivial group")


def build_cayley_digraph(pair: GroupPair) -> CayleyDigraph:
    """Label every arc ``(i, j)``, ``i != j``, with the position of ``g_j g_i^-1`` in the pair ordering.

    :raises TrivialGroupError: for the trivial group
    """
    _require_nontrivial(pair)
    group, ordering = pair.group, pair.ordering
    position = {element: index for index, element in enumerate(ordering)}
    labels = {}
    for i, g_i in enumerate(ordering):
        inverse = group.inverse[g_i]
        for j, g_j in enumerate(ordering):
            if i != j:
                labels[(i, j)] = position[group.mul(g_j, inverse)]
    return CayleyDigraph(order=group.order, labels=labels)


def expected_counts(pair: GroupPair) -> Tuple[int, int]:
    """Closed-form vertex and edge counts of :func:`realize`.

    :raises TrivialGroupError: for the trivial group
    """
    _require_nontrivial(pair)
    g = pair.group.order
    chains = g * (g * (g + 1) // 2 - 1)
    return g + 4 * g * (g - 1) + chains, 7 * g * (g - 1) + chains


def realize(pair: GroupPair) -> ColoredGraph:
    """Build the incidence system of a pair.

    Types are ``"0" .. str(index + 2)``: element vertices take ``1 + coset position``, direction markers
    take 0, chain vertices take ``index + 1`` (even position) or ``index + 2`` (odd position).

    :raises TrivialGroupError: for the trivial group
    :raises GraphTooLargeError: if the closed-form vertex count exceeds the cap; nothing is built
    """
    vertex_count, _edge_count = expected_counts(pair)
    if vertex_count > MAX_GRAPH_VERTICES:
        raise GraphTooLargeError(
            f"Pair of order {pair.group.order} would realize {vertex_count} vertices, "
            f"above the cap of {MAX_GRAPH_VERTICES}"
        )
    digraph = build_cayley_digraph(pair)
    index = pair.index
    vertices: List[Tuple[VertexId, int]] = [
        (PVertex(i), 1 + pair.coset_of(element)) for i, element in enumerate(pair.ordering)
    ]
    edges: List[Tuple[VertexId, VertexId]] = []

    for i, j, k in digraph.arcs():
        p_i, p_j, marker = PVertex(i), PVertex(j), TVertex(i, j)
        chain = [SVertex(i, j, l) for l in range(k + 3)]
        vertices.append((marker, 0))
        vertices.extend((vertex, index + 1 + l % 2) for l, vertex in enumerate(chain))
        edges.extend([(p_i, chain[0]), (chain[0], p_j), (p_i, marker), (marker, chain[-1]), (p_j, chain[-1])])
        edges.extend(zip(chain, chain[1:]))

    graph = ColoredGraph.build([str(t) for t in range(index + 3)], vertices, edges)
    _LOGGER.info(
        "Realized pair of order %d as %d vertices and %d edges", pair.group.order, graph.vertex_count, graph.edge_count
    )
    return graph


def group_action(pair: GroupPair, graph: ColoredGraph, element: int) -> ColorblindAutomorphism:
    """Vertex permutation induced by right multiplication with ``element``: ``P(i) -> P(k)`` with
    ``g_k = g_i * element``, carried along to every gadget.

    :param pair: Realized pair
    :param graph: Output of :func:`realize` for ``pair``
    :param element: Group element index
    """
    position = {g: index for index, g in enumerate(pair.ordering)}
    moved = [position[pair.group.mul(g, element)] for g in pair.ordering]

    def _image(vertex: VertexId) -> VertexId:
        if isinstance(vertex, PVertex):
            return PVertex(moved[vertex.i])
        if isinstance(vertex, TVertex):
            return TVertex(moved[vertex.i], moved[vertex.j])
        return SVertex(moved[vertex.i], moved[vertex.j], vertex.l)

    images = [graph.position(_image(vertex)) for vertex in graph.vertex_ids]
    return ColorblindAutomorphism(images, induced_type_permutation(graph, images))


def _expected_degree(vertex: VertexId, digraph: CayleyDigraph) -> int:
    if isinstance(vertex, PVertex):
        return 4 * (digraph.order - 1)
    if isinstance(vertex, SVertex) and vertex.l in (0, digraph.label_number(vertex.i, vertex.j) + 2):
        return 3
    return 2


def self_check(pair: GroupPair, graph: ColoredGraph):
    """Audit a realized graph against the closed forms and the structural facts the construction relies on.

    Checks the vertex and edge counts, the degree table, that ``T(i,j)`` is the only degree-2 neighbor of
    ``P(i)`` at distance 2 from ``P(j)``, that the degree-2 chain from the apex ``S(i,j,k+2)`` back to
    ``S(i,j,0)`` has ``k + 2`` edges, and that right multiplication by every element is an automorphism
    that preserves types exactly for elements of ``H``.

    :raises AuditFailureError: on the first failed check
    """
    digraph = build_cayley_digraph(pair)
    counts = (graph.vertex_count, graph.edge_count)
    if counts != expected_counts(pair):
        raise AuditFailureError(f"Counts {counts} differ from the closed forms {expected_counts(pair)}")

    degrees = [len(block) for block in graph.neighbors]
    for vertex, observed in zip(graph.vertex_ids, degrees):
        expected = _expected_degree(vertex, digraph)
        if observed != expected:
            raise AuditFailureError(f"Vertex {vertex} has degree {observed}, expected {expected}")

    network = graph.to_networkx()
    for i, j, k in digraph.arcs():
        near = nx.single_source_shortest_path_length(network, graph.position(PVertex(j)), cutoff=2)
        markers = [
            other
            for other in graph.neighbors[graph.position(PVertex(i))]
            if degrees[other] == 2 and near.get(other) == 2
        ]
        if markers != [graph.position(TVertex(i, j))]:
            raise AuditFailureError(f"Arc ({i},{j}) does not have T({i},{j}) as its unique direction marker")

        previous, current, steps = None, graph.position(SVertex(i, j, k + 2)), 0
        target = graph.position(SVertex(i, j, 0))
        while current != target:
            chain = [
                other
                for other in graph.neighbors[current]
                if other != previous and isinstance(graph.vertex_ids[other], SVertex)
            ]
            if len(chain) != 1:
                raise AuditFailureError(f"Chain of arc ({i},{j}) branches at {graph.vertex_ids[current]}")
            previous, current, steps = current, chain[0], steps + 1
        if steps != k + 2:
            raise AuditFailureError(f"Chain of arc ({i},{j}) has {steps} edges, expected {k + 2}")

    for element in range(pair.group.order):
        action = group_action(pair, graph, element)
        if not is_automorphism(graph, action.vertex_images):
            raise AuditFailureError(f"Right multiplication by {pair.group.label(element)} is not an automorphism")
        if action.is_type_preserving != pair.members[element]:
            raise AuditFailureError(
                f"Right multiplication by {pair.group.label(element)} has the wrong effect on types"
            )
    _LOGGER.info("Self-check passed for %d arcs", len(digraph.labels))
