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
"""Refinement of arbitrary incidence systems into systems with degrees >= 2 and flags of rank <= 2.

Every edge is subdivided by the foot of a ray of ``2M + 5`` new vertices ending in a figure eight, and every
vertex of degree 0 or 1 gets a ray of its own. ``M`` is the largest type-class size, which makes the rays
longer than any original class and keeps the pair of automorphism groups unchanged.
"""
import logging
from typing import List, Tuple

import attr
from attr.validators import deep_iterable, instance_of

from pairformer.exceptions import AuditFailureError
from pairformer.graphs import ColoredGraph
from pairformer.identifiers import AUX_TYPE_PREFIX, LOGGER_NAME
from pairformer.internal.structures import GadgetVertex, Raw, VertexId

_LOGGER = logging.getLogger(LOGGER_NAME)
_INT_TUPLE = deep_iterable(member_validator=instance_of(int))
__all__ = ("RefinementPlan", "ClassSizeReport", "plan", "refine", "class_size_audit", "ray_gadget")


@attr.s(frozen=True)
class RefinementPlan:
    """What :func:`refine` adds to a graph.

    :param ray_scale: ``M``, the largest type-class size
    :param edge_owners: Edges (vertex-position pairs) that receive a ray
    :param isolated: Vertices of degree 0
    :param pendant: Vertices of degree 1
    :param even_type: Index of the type given to even ray positions
    :param odd_type: Index of the type given to odd ray positions
    :param new_type_names: Names of the two new types
    """

    ray_scale: int = attr.ib(validator=instance_of(int))
    edge_owners: Tuple[Tuple[int, int], ...] = attr.ib(converter=tuple)
    isolated: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    pendant: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    even_type: int = attr.ib(validator=instance_of(int))
    odd_type: int = attr.ib(validator=instance_of(int))
    new_type_names: Tuple[str, str] = attr.ib(converter=tuple)

    @property
    def vertex_owners(self) -> Tuple[int, ...]:
        """Vertices of degree 0 or 1, sorted."""
        return tuple(sorted(self.isolated + self.pendant))

    @property
    def ray_count(self) -> int:
        """Number of rays added, ``|E| + |V_0| + |V_1|``."""
        return len(self.edge_owners) + len(self.isolated) + len(self.pendant)

    @property
    def ray_length(self) -> int:
        """Vertices per ray."""
        return 2 * self.ray_scale + 5


def _new_type_names(types) -> Tuple[str, str]:
    taken = set(types)
    index = 0
    while f"{AUX_TYPE_PREFIX}{index}" in taken or f"{AUX_TYPE_PREFIX}{index + 1}" in taken:
        index += 2
    return f"{AUX_TYPE_PREFIX}{index}", f"{AUX_TYPE_PREFIX}{index + 1}"


def plan(graph: ColoredGraph) -> RefinementPlan:
    """Work out the ray scale, the owners of the rays and the two new types."""
    degrees = [len(block) for block in graph.neighbors]
    return RefinementPlan(
        ray_scale=max(graph.class_sizes()),
        edge_owners=graph.edges,
        isolated=[vertex for vertex, value in enumerate(degrees) if value == 0],
        pendant=[vertex for vertex, value in enumerate(degrees) if value == 1],
        even_type=graph.rank,
        odd_type=graph.rank + 1,
        new_type_names=_new_type_names(graph.types),
    )


def _ray(owner: Tuple[VertexId, ...], scale: int, even_type: int, odd_type: int):
    """Ray vertices and their internal edges: the chain plus the two figure-eight chords."""
    ray = [GadgetVertex(owner, j) for j in range(2 * scale + 5)]
    vertices = [(vertex, odd_type if j % 2 else even_type) for j, vertex in enumerate(ray)]
    edges = list(zip(ray, ray[1:]))
    edges.append((ray[2 * scale + 4], ray[2 * scale - 1]))
    edges.append((ray[2 * scale + 3], ray[2 * scale]))
    return ray, vertices, edges


def refine(graph: ColoredGraph) -> ColoredGraph:
    """Replace every edge ``{v, w}`` by the path ``v - u0 - w`` carrying a ray at ``u0``, and give every vertex
    of degree 0 or 1 a ray attached at ``u0`` (and also at ``u2`` for degree 0).

    Original vertices keep their identifiers and types.
    """
    layout = plan(graph)
    ids = graph.vertex_ids
    vertices: List[Tuple[VertexId, int]] = list(zip(ids, graph.vertex_types))
    edges: List[Tuple[VertexId, VertexId]] = []

    for a, b in layout.edge_owners:
        ray, ray_vertices, ray_edges = _ray((ids[a], ids[b]), layout.ray_scale, layout.even_type, layout.odd_type)
        vertices.extend(ray_vertices)
        edges.extend([(ids[a], ray[0]), (ray[0], ids[b])] + ray_edges)

    isolated = set(layout.isolated)
    for owner in layout.vertex_owners:
        ray, ray_vertices, ray_edges = _ray((ids[owner],), layout.ray_scale, layout.even_type, layout.odd_type)
        vertices.extend(ray_vertices)
        edges.extend([(ids[owner], ray[0])] + ray_edges)
        if owner in isolated:
            edges.append((ids[owner], ray[2]))

    refined = ColoredGraph.build(graph.types + layout.new_type_names, vertices, edges)
    _LOGGER.info(
        "Refined %d vertices into %d with %d rays of length %d",
        graph.vertex_count,
        refined.vertex_count,
        layout.ray_count,
        layout.ray_length,
    )
    return refined


@attr.s(frozen=True)
class ClassSizeReport:
    """Sizes of the two new type classes against their closed forms.

    :param even_count: Vertices of the even-position type
    :param odd_count: Vertices of the odd-position type
    :param ray_scale: ``M``
    :param ray_count: ``|E| + |V_0| + |V_1|``
    """

    even_count: int = attr.ib(validator=instance_of(int))
    odd_count: int = attr.ib(validator=instance_of(int))
    ray_scale: int = attr.ib(validator=instance_of(int))
    ray_count: int = attr.ib(validator=instance_of(int))


def class_size_audit(graph: ColoredGraph, refined: ColoredGraph) -> ClassSizeReport:
    """Check that the new classes have ``rays * (M + 3)`` and ``rays * (M + 2)`` vertices, exceed ``M`` and differ.

    :param graph: Input of :func:`refine`
    :param refined: Output of :func:`refine` for ``graph``
    :raises AuditFailureError: if any of the checks fails
    """
    layout = plan(graph)
    sizes = refined.class_sizes()
    report = ClassSizeReport(
        even_count=sizes[layout.even_type],
        odd_count=sizes[layout.odd_type],
        ray_scale=layout.ray_scale,
        ray_count=layout.ray_count,
    )
    expected = (layout.ray_count * (layout.ray_scale + 3), layout.ray_count * (layout.ray_scale + 2))
    if (report.even_count, report.odd_count) != expected:
        raise AuditFailureError(f"New class sizes {(report.even_count, report.odd_count)} differ from {expected}")
    if min(report.even_count, report.odd_count) <= layout.ray_scale or report.even_count == report.odd_count:
        raise AuditFailureError("New classes must exceed every original class and differ from each other")
    return report


def ray_gadget(scale: int, attach_to_both: bool = False) -> ColoredGraph:
    """Standalone ray of scale ``M``, attached to one vertex ``Raw(0)`` or to both ends of the edge
    ``Raw(0) - Raw(1)`` (which is then subdivided as in :func:`refine`)."""
    owners = (Raw(0), Raw(1)) if attach_to_both else (Raw(0),)
    types = ["v", "w"][: len(owners)] + [f"{AUX_TYPE_PREFIX}0", f"{AUX_TYPE_PREFIX}1"]
    ray, vertices, edges = _ray(owners, scale, len(owners), len(owners) + 1)
    vertices.extend((owner, index) for index, owner in enumerate(owners))
    edges.extend((owner, ray[0]) for owner in owners)
    return ColoredGraph.build(types, vertices, edges)
