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
"""Incidence systems as simple proper vertex-colored graphs."""
import logging
from collections import Counter
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import attr
import networkx as nx
from attr.validators import deep_iterable, instance_of

from pairformer.exceptions import (
    EmptyGraphError,
    GraphFormatError,
    GraphTooLargeError,
    NotProperError,
    NotSimpleError,
    TypeNotUsedError,
    UnknownVertexError,
)
from pairformer.identifiers import LOGGER_NAME, MAX_GRAPH_VERTICES
from pairformer.internal.structures import VertexId

_LOGGER = logging.getLogger(LOGGER_NAME)
Flag = Tuple[int, ...]
__all__ = (
    "ColoredGraph",
    "GeometryReport",
    "Flag",
    "validate",
    "degree",
    "maximal_cliques",
    "max_flag_rank",
    "min_degree",
    "is_geometry",
)


@attr.s(frozen=True, eq=False)
class ColoredGraph:
    """Simple proper vertex-colored graph ``(V, E, I, t)``.

    Vertices are addressed by position in ``vertex_ids``, which is sorted by identifier.
    Build instances with :meth:`ColoredGraph.build`.

    :param types: Ordered type names; type ``i`` is ``types[i]``
    :param vertex_ids: Sorted vertex identifiers
    :param vertex_types: Type index of each vertex
    :param edges: Sorted edges as vertex-position pairs ``(a, b)`` with ``a <= b``
    """

    types: Tuple[str, ...] = attr.ib(validator=deep_iterable(member_validator=instance_of(str)))
    vertex_ids: Tuple[VertexId, ...] = attr.ib(validator=deep_iterable(member_validator=instance_of(VertexId)))
    vertex_types: Tuple[int, ...] = attr.ib(validator=deep_iterable(member_validator=instance_of(int)))
    edges: Tuple[Tuple[int, int], ...] = attr.ib()
    neighbors: Tuple[Tuple[int, ...], ...] = attr.ib(init=False, repr=False)
    _positions: Dict[VertexId, int] = attr.ib(init=False, repr=False)
    _edge_set: FrozenSet[Tuple[int, int]] = attr.ib(init=False, repr=False)

    @vertex_types.validator
    def _check_vertex_types(self, attribute, value):  # pylint: disable=unused-argument
        """Verify that every vertex has a declared type."""
        if len(value) != len(self.vertex_ids):
            raise ValueError("vertex_types must have one entry per vertex")
        for type_index in value:
            if not 0 <= type_index < len(self.types):
                raise GraphFormatError(f"Type index {type_index} is not declared")

    def __attrs_post_init__(self):
        """Derive neighbor lists and lookup tables."""
        adjacency: List[set] = [set() for _ in self.vertex_ids]
        for a, b in self.edges:
            if a != b:
                adjacency[a].add(b)
                adjacency[b].add(a)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(block)) for block in adjacency))
        object.__setattr__(self, "_positions", {vertex: position for position, vertex in enumerate(self.vertex_ids)})
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @classmethod
    def build(
        cls,
        types: Sequence[str],
        vertices: Iterable[Tuple[VertexId, int]],
        edges: Iterable[Tuple[VertexId, VertexId]],
        check: bool = True,
    ) -> "ColoredGraph":
        """Assemble a graph from identifier-level data.

        :param types: Ordered type names
        :param vertices: ``(identifier, type index)`` pairs in any order
        :param edges: Identifier pairs in any order
        :param check: Run :func:`validate` on the result
        :raises GraphFormatError: if a vertex identifier repeats
        :raises UnknownVertexError: if an edge references an unknown vertex
        """
        vertices = sorted(vertices, key=lambda item: item[0].sort_key())
        ids = tuple(vertex for vertex, _ in vertices)
        for previous, current in zip(ids, ids[1:]):
            if previous == current:
                raise GraphFormatError(f'Vertex id "{current}" appears twice')

        positions = {vertex: position for position, vertex in enumerate(ids)}
        indexed = []
        for left, right in edges:
            try:
                a, b = positions[left], positions[right]
            except KeyError as error:
                raise UnknownVertexError(f'Edge ({left}, {right}) references unknown vertex "{error.args[0]}"')
            indexed.append((min(a, b), max(a, b)))

        graph = cls(
            types=tuple(types),
            vertex_ids=ids,
            vertex_types=tuple(type_index for _, type_index in vertices),
            edges=tuple(sorted(indexed)),
        )
        if check:
            validate(graph)
        return graph

    @property
    def vertex_count(self) -> int:
        """Number of vertices."""
        return len(self.vertex_ids)

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def rank(self) -> int:
        """Number of types."""
        return len(self.types)

    def position(self, vertex: VertexId) -> int:
        """Position of a vertex identifier.

        :raises UnknownVertexError: if the vertex is not part of the graph
        """
        try:
            return self._positions[vertex]
        except KeyError:
            raise UnknownVertexError(f'Unknown vertex "{vertex}"')

    def type_of(self, vertex: VertexId) -> int:
        """Type index of a vertex identifier."""
        return self.vertex_types[self.position(vertex)]

    def adjacent(self, a: int, b: int) -> bool:
        """Determine whether two vertex positions are joined by an edge."""
        return (min(a, b), max(a, b)) in self._edge_set

    def class_sizes(self) -> Tuple[int, ...]:
        """Number of vertices of each type, indexed by type."""
        counts = Counter(self.vertex_types)
        return tuple(counts.get(type_index, 0) for type_index in range(self.rank))

    def edge_ids(self) -> List[Tuple[VertexId, VertexId]]:
        """Edges as identifier pairs, in sorted order."""
        return [(self.vertex_ids[a], self.vertex_ids[b]) for a, b in self.edges]

    def to_networkx(self) -> nx.Graph:
        """Plain ``networkx`` graph on vertex positions with a ``type`` node attribute."""
        graph = nx.Graph()
        graph.add_nodes_from((position, {"type": t}) for position, t in enumerate(self.vertex_types))
        graph.add_edges_from(edge for edge in self.edges if edge[0] != edge[1])
        return graph


@attr.s(frozen=True)
class GeometryReport:
    """Outcome of :func:`is_geometry`.

    :param is_geometry: Every maximal flag is a chamber
    :param rank: Number of types
    :param chamber_count: Number of chambers (cliques with one vertex of every type)
    :param deficient: Maximal flags smaller than the rank
    """

    is_geometry: bool = attr.ib(validator=instance_of(bool))
    rank: int = attr.ib(validator=instance_of(int))
    chamber_count: int = attr.ib(validator=instance_of(int))
    deficient: Tuple[Flag, ...] = attr.ib(converter=tuple)


def validate(graph: ColoredGraph) -> None:
    """Check the incidence-system invariants, raising on the first violation.

    :raises EmptyGraphError: if there are no vertices
    :raises GraphTooLargeError: if the vertex cap is exceeded
    :raises NotSimpleError: on a loop or a repeated edge
    :raises NotProperError: on an edge between two vertices of the same type
    :raises TypeNotUsedError: if a declared type has no vertex
    """
    if not graph.vertex_ids:
        raise EmptyGraphError("Graph has no vertices")
    if graph.vertex_count > MAX_GRAPH_VERTICES:
        raise GraphTooLargeError(f"Graph has {graph.vertex_count} vertices, above the cap of {MAX_GRAPH_VERTICES}")

    for previous, current in zip(graph.edges, graph.edges[1:]):
        if previous == current:
            a, b = current
            raise NotSimpleError(f"Edge ({graph.vertex_ids[a]}, {graph.vertex_ids[b]}) appears twice")
    for a, b in graph.edges:
        if a == b:
            raise NotSimpleError(f"Vertex {graph.vertex_ids[a]} has a loop")

    for a, b in graph.edges:
        if graph.vertex_types[a] == graph.vertex_types[b]:
            edge = (str(graph.vertex_ids[a]), str(graph.vertex_ids[b]))
            shared = graph.types[graph.vertex_types[a]]
            raise NotProperError(f"Adjacent vertices {edge[0]} and {edge[1]} share type {shared}", edge)

    for type_index, size in enumerate(graph.class_sizes()):
        if size == 0:
            raise TypeNotUsedError(f'Type "{graph.types[type_index]}" has no vertex')


def degree(graph: ColoredGraph, vertex: VertexId) -> int:
    """Number of neighbors of a vertex.

    :raises UnknownVertexError: if the vertex is not part of the graph
    """
    return len(graph.neighbors[graph.position(vertex)])


def maximal_cliques(graph: ColoredGraph) -> List[Flag]:
    """Enumerate the inclusion-maximal flags with pivoting Bron-Kerbosch.

    :returns: Cliques as sorted vertex-position tuples, in lexicographic order
    """
    cliques = sorted(tuple(sorted(clique)) for clique in nx.find_cliques(graph.to_networkx()))
    _LOGGER.debug("Found %d maximal cliques", len(cliques))
    return cliques


def max_flag_rank(graph: ColoredGraph) -> int:
    """Size of the largest flag."""
    return max(len(clique) for clique in maximal_cliques(graph))


def min_degree(graph: ColoredGraph) -> int:
    """Smallest vertex degree."""
    return min(len(block) for block in graph.neighbors)


def is_geometry(graph: ColoredGraph) -> GeometryReport:
    """Decide whether every flag lies in a chamber, i.e. every maximal clique has one vertex of each type."""
    cliques = maximal_cliques(graph)
    deficient = [clique for clique in cliques if len(clique) < graph.rank]
    return GeometryReport(
        is_geometry=not deficient,
        rank=graph.rank,
        chamber_count=len(cliques) - len(deficient),
        deficient=deficient,
    )
