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
"""Colorblind and color-preserving automorphism groups of colored graphs, and pair verification.

Both searches run on the type-augmented graph: one extra vertex per type, joined to every vertex of that
type. A colorblind automorphism is an automorphism of the augmented graph that maps original vertices to
original vertices; its action on the extra vertices is the induced type permutation. Color-preserving
automorphisms additionally fix every extra vertex.
"""
import logging
from typing import List, Optional, Sequence, Tuple, Union

import attr
import networkx as nx
from attr.validators import deep_iterable, instance_of, optional
from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from pairformer.exceptions import AuditFailureError, GroupTooLargeError, IncoherentError, UnknownVertexError
from pairformer.graphs import ColoredGraph
from pairformer.groups import ElementPermutation, GroupPair, group_from_permutations, make_pair, pair_isomorphic
from pairformer.identifiers import LOGGER_NAME
from pairformer.internal.refinement import search_automorphisms
from pairformer.internal.structures import EngineSettings
from pairformer.internal.util import Permutation, closure, compose, identity, invert, orbits

_LOGGER = logging.getLogger(LOGGER_NAME)
_INT_TUPLE = deep_iterable(member_validator=instance_of(int))
__all__ = (
    "ColorblindAutomorphism",
    "AutomorphismGroup",
    "AutomorphismGroupReport",
    "PairVerdict",
    "PairComparison",
    "induced_type_permutation",
    "is_automorphism",
    "color_automorphisms",
    "colorblind_automorphisms",
    "automorphism_report",
    "verify_pair",
    "compare_pairs",
    "brute_force_automorphisms",
)


@attr.s(frozen=True)
class ColorblindAutomorphism:
    """Vertex permutation ``f`` of a colored graph together with its type permutation ``sigma_f``.

    :param vertex_images: ``vertex_images[v]`` is the position of ``f(v)``
    :param type_images: ``type_images[i]`` is ``sigma_f(i)``
    """

    vertex_images: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    type_images: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)

    @classmethod
    def identity(cls, vertex_count: int, type_count: int) -> "ColorblindAutomorphism":
        """Identity map."""
        return cls(identity(vertex_count), identity(type_count))

    @classmethod
    def from_augmented(cls, perm: Sequence[int], vertex_count: int) -> "ColorblindAutomorphism":
        """Split a permutation of the type-augmented vertex set."""
        return cls(perm[:vertex_count], tuple(image - vertex_count for image in perm[vertex_count:]))

    def augmented(self) -> Permutation:
        """Permutation of the type-augmented vertex set."""
        offset = len(self.vertex_images)
        return self.vertex_images + tuple(offset + image for image in self.type_images)

    @property
    def is_type_preserving(self) -> bool:
        """Determine whether ``sigma_f`` is the identity."""
        return self.type_images == identity(len(self.type_images))

    def compose(self, inner: "ColorblindAutomorphism") -> "ColorblindAutomorphism":
        """Apply ``inner`` first, then this map."""
        return ColorblindAutomorphism(
            compose(self.vertex_images, inner.vertex_images), compose(self.type_images, inner.type_images)
        )

    def inverse(self) -> "ColorblindAutomorphism":
        """Inverse map."""
        return ColorblindAutomorphism(invert(self.vertex_images), invert(self.type_images))


def induced_type_permutation(
    graph: ColoredGraph, automorphism: Union[ColorblindAutomorphism, Sequence[int]]
) -> Tuple[int, ...]:
    """Compute ``sigma_f`` from the vertex images of ``f``.

    :param graph: Graph acted on
    :param automorphism: Colorblind automorphism or bare vertex images
    :raises IncoherentError: if ``f`` does not map type classes onto type classes
    """
    images = automorphism.vertex_images if isinstance(automorphism, ColorblindAutomorphism) else tuple(automorphism)
    mapping = {}
    for vertex, image in enumerate(images):
        source, target = graph.vertex_types[vertex], graph.vertex_types[image]
        if mapping.setdefault(source, target) != target:
            raise IncoherentError(
                f"Type {graph.types[source]} is sent to both {graph.types[mapping[source]]} and {graph.types[target]}"
            )
    if len(mapping) != graph.rank or len(set(mapping.values())) != graph.rank:
        raise IncoherentError("Vertex map does not induce a permutation of types")
    return tuple(mapping[type_index] for type_index in range(graph.rank))


def is_automorphism(graph: ColoredGraph, vertex_images: Sequence[int]) -> bool:
    """Determine whether a vertex permutation preserves adjacency in both directions."""
    if sorted(vertex_images) != list(range(graph.vertex_count)):
        return False
    return all(
        sorted(vertex_images[other] for other in graph.neighbors[vertex])
        == list(graph.neighbors[vertex_images[vertex]])
        for vertex in range(graph.vertex_count)
    )


@attr.s(frozen=True)
class AutomorphismGroup:
    """Automorphism group given by generators and orbit-stabilizer data.

    :param vertex_count: Number of vertices acted on
    :param type_count: Number of types acted on
    :param generators: Generating automorphisms
    :param order: Group order
    :param base: Base points of the search, as positions in the type-augmented vertex set
    :param orbit_sizes: Basic orbit sizes along ``base``
    :param nodes: Search nodes spent
    """

    vertex_count: int = attr.ib(validator=instance_of(int))
    type_count: int = attr.ib(validator=instance_of(int))
    generators: Tuple[ColorblindAutomorphism, ...] = attr.ib(
        converter=tuple, validator=deep_iterable(member_validator=instance_of(ColorblindAutomorphism))
    )
    order: int = attr.ib(validator=instance_of(int))
    base: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    orbit_sizes: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    nodes: int = attr.ib(default=0, validator=instance_of(int))

    def elements(self, limit: int) -> Optional[List[ColorblindAutomorphism]]:
        """Enumerate the group, identity first.

        :param limit: Largest order enumerated
        :returns: Sorted elements, or ``None`` if the group is larger than ``limit``
        """
        if self.order > limit:
            return None
        found = closure(
            (generator.augmented() for generator in self.generators), self.vertex_count + self.type_count, limit
        )
        if found is None:
            return None
        return [ColorblindAutomorphism.from_augmented(perm, self.vertex_count) for perm in found]

    def sigma_orbits(self) -> List[Tuple[int, ...]]:
        """Orbits of types under the induced type permutations."""
        return orbits(self.type_count, (generator.type_images for generator in self.generators))


def _augmented_neighbors(graph: ColoredGraph) -> List[Tuple[int, ...]]:
    offset = graph.vertex_count
    neighbors = [block + (offset + graph.vertex_types[vertex],) for vertex, block in enumerate(graph.neighbors)]
    classes: List[List[int]] = [[] for _ in graph.types]
    for vertex, type_index in enumerate(graph.vertex_types):
        classes[type_index].append(vertex)
    neighbors.extend(tuple(members) for members in classes)
    return neighbors


def _search(graph: ColoredGraph, colorblind: bool, settings: EngineSettings) -> AutomorphismGroup:
    offset = graph.vertex_count
    type_vertices = tuple(range(offset, offset + graph.rank))
    if colorblind:
        cells = [tuple(range(offset)), type_vertices]
    else:
        cells = [tuple(range(offset))] + [(vertex,) for vertex in type_vertices]
    result = search_automorphisms(_augmented_neighbors(graph), cells, settings.node_budget, settings.jobs)
    _LOGGER.debug(
        "%s automorphism group: order %d from %d generators after %d nodes",
        "Colorblind" if colorblind else "Color-preserving",
        result.order,
        len(result.generators),
        result.nodes,
    )
    return AutomorphismGroup(
        vertex_count=offset,
        type_count=graph.rank,
        generators=[ColorblindAutomorphism.from_augmented(perm, offset) for perm in result.generators],
        order=result.order,
        base=result.base,
        orbit_sizes=result.orbit_sizes,
        nodes=result.nodes,
    )


def color_automorphisms(graph: ColoredGraph, settings: EngineSettings = EngineSettings()) -> AutomorphismGroup:
    """Compute the group of type-preserving automorphisms.

    :raises ResourceLimitError: if the node budget is exhausted
    """
    return _search(graph, colorblind=False, settings=settings)


def colorblind_automorphisms(graph: ColoredGraph, settings: EngineSettings = EngineSettings()) -> AutomorphismGroup:
    """Compute the group of colorblind automorphisms (correlations).

    :raises ResourceLimitError: if the node budget is exhausted
    """
    return _search(graph, colorblind=True, settings=settings)


@attr.s(frozen=True)
class AutomorphismGroupReport:
    """Both automorphism groups of a graph.

    :param colorblind: Colorblind group
    :param color: Color-preserving group
    :raises AuditFailureError: if the color-preserving order does not divide the colorblind order
    """

    colorblind: AutomorphismGroup = attr.ib(validator=instance_of(AutomorphismGroup))
    color: AutomorphismGroup = attr.ib(validator=instance_of(AutomorphismGroup))

    def __attrs_post_init__(self):
        """Check the index relation between the two groups."""
        if self.colorblind.order % self.color.order:
            raise AuditFailureError(
                f"Color-preserving order {self.color.order} does not divide colorblind order {self.colorblind.order}"
            )

    @property
    def cb_order(self) -> int:
        """Colorblind group order."""
        return self.colorblind.order

    @property
    def c_order(self) -> int:
        """Color-preserving group order."""
        return self.color.order


def automorphism_report(graph: ColoredGraph, settings: EngineSettings = EngineSettings()) -> AutomorphismGroupReport:
    """Compute both automorphism groups of a graph."""
    return AutomorphismGroupReport(
        colorblind=colorblind_automorphisms(graph, settings), color=color_automorphisms(graph, settings)
    )


def _abstract_pair(group: AutomorphismGroup, limit: int) -> GroupPair:
    """Cayley table of an enumerated automorphism group, with the type-preserving elements as subgroup."""
    elements = group.elements(limit)
    if elements is None:
        raise GroupTooLargeError(f"Cannot enumerate a group of order {group.order} (limit {limit})")
    abstract = group_from_permutations([element.augmented() for element in elements])
    return make_pair(abstract, [index for index, element in enumerate(elements) if element.is_type_preserving])


@attr.s(frozen=True)
class PairVerdict:
    """Outcome of :func:`verify_pair`.

    :param match: The automorphism pair is isomorphic to the expected pair
    :param report: Computed automorphism groups
    :param expected_orders: Orders of the expected group and subgroup
    :param witness: Isomorphism from the automorphism group onto the expected group (element indices)
    """

    match: bool = attr.ib(validator=instance_of(bool))
    report: AutomorphismGroupReport = attr.ib(validator=instance_of(AutomorphismGroupReport))
    expected_orders: Tuple[int, int] = attr.ib(converter=tuple)
    witness: Optional[ElementPermutation] = attr.ib(default=None, validator=optional(instance_of(ElementPermutation)))


def verify_pair(
    graph: ColoredGraph,
    pair: GroupPair,
    settings: EngineSettings = EngineSettings(),
    report: Optional[AutomorphismGroupReport] = None,
) -> PairVerdict:
    """Decide whether ``(Aut_cb, Aut_c)`` of a graph is isomorphic to ``pair``.

    :param graph: Graph to check
    :param pair: Expected pair
    :param settings: Search and size limits
    :param report: Precomputed automorphism groups (optional)
    :raises ResourceLimitError: if the search budget is exhausted
    :raises GroupTooLargeError: if the groups are larger than ``settings.pair_cap``
    """
    report = report or automorphism_report(graph, settings)
    expected = (pair.group.order, pair.subgroup_order)
    if (report.cb_order, report.c_order) != expected:
        _LOGGER.info("Orders %s differ from the expected %s", (report.cb_order, report.c_order), expected)
        return PairVerdict(match=False, report=report, expected_orders=expected)
    if report.cb_order > settings.pair_cap:
        raise GroupTooLargeError(f"Group order {report.cb_order} is above the pair isomorphism cap {settings.pair_cap}")

    witness = pair_isomorphic(_abstract_pair(report.colorblind, settings.element_limit), pair, settings.pair_cap)
    _LOGGER.info("Pair verification %s", "succeeded" if witness is not None else "failed")
    return PairVerdict(match=witness is not None, report=report, expected_orders=expected, witness=witness)


@attr.s(frozen=True)
class PairComparison:
    """Outcome of :func:`compare_pairs`.

    :param preserved: The two graphs have isomorphic automorphism pairs
    :param method: ``"orders"`` (orders differ), ``"restriction"`` or ``"abstract"``
    :param source: Automorphism groups of the source graph
    :param derived: Automorphism groups of the derived graph
    """

    preserved: bool = attr.ib(validator=instance_of(bool))
    method: str = attr.ib(validator=instance_of(str))
    source: AutomorphismGroupReport = attr.ib(validator=instance_of(AutomorphismGroupReport))
    derived: AutomorphismGroupReport = attr.ib(validator=instance_of(AutomorphismGroupReport))


def _restrict(
    source: ColoredGraph, derived: ColoredGraph, automorphism: ColorblindAutomorphism
) -> Optional[ColorblindAutomorphism]:
    """Restrict a derived automorphism to the vertices the derived graph shares with the source."""
    images = []
    try:
        for vertex in source.vertex_ids:
            image = derived.vertex_ids[automorphism.vertex_images[derived.position(vertex)]]
            images.append(source.position(image))
    except UnknownVertexError:
        return None
    if not is_automorphism(source, images):
        return None
    try:
        return ColorblindAutomorphism(images, induced_type_permutation(source, images))
    except IncoherentError:
        return None


def _restriction_preserves(
    source: ColoredGraph,
    derived: ColoredGraph,
    source_report: AutomorphismGroupReport,
    derived_report: AutomorphismGroupReport,
    limit: int,
) -> Optional[bool]:
    """Check that restriction to the shared vertices is an isomorphism of pairs; ``None`` when undecidable."""
    groups = []
    for group in (derived_report.colorblind, derived_report.color):
        restricted = [_restrict(source, derived, generator) for generator in group.generators]
        if any(generator is None for generator in restricted):
            return None
        groups.append(restricted)
    colorblind, color = groups
    if any(not generator.is_type_preserving for generator in color):
        return False

    sizes = []
    for generators in (colorblind, color):
        found = closure((generator.augmented() for generator in generators), source.vertex_count + source.rank, limit)
        if found is None:
            return None
        sizes.append(len(found))
    return tuple(sizes) == (source_report.cb_order, source_report.c_order)


def compare_pairs(
    source: ColoredGraph, derived: ColoredGraph, settings: EngineSettings = EngineSettings()
) -> PairComparison:
    """Check empirically that a construction preserved the automorphism pair.

    Derived automorphisms are restricted to the vertices shared with the source; when the restriction is an
    isomorphism onto the source groups the pairs agree. Otherwise the two pairs are compared abstractly.

    :raises GroupTooLargeError: if neither method applies within the configured caps
    """
    source_report = automorphism_report(source, settings)
    derived_report = automorphism_report(derived, settings)

    def _result(preserved: bool, method: str) -> PairComparison:
        _LOGGER.info("Pair %s (%s)", "preserved" if preserved else "not preserved", method)
        return PairComparison(preserved=preserved, method=method, source=source_report, derived=derived_report)

    if (source_report.cb_order, source_report.c_order) != (derived_report.cb_order, derived_report.c_order):
        return _result(False, "orders")

    restricted = _restriction_preserves(source, derived, source_report, derived_report, settings.element_limit)
    if restricted:
        return _result(True, "restriction")

    if source_report.cb_order > settings.pair_cap:
        raise GroupTooLargeError(
            f"Group order {source_report.cb_order} is above the pair isomorphism cap {settings.pair_cap}"
        )
    witness = pair_isomorphic(
        _abstract_pair(source_report.colorblind, settings.element_limit),
        _abstract_pair(derived_report.colorblind, settings.element_limit),
        settings.pair_cap,
    )
    return _result(witness is not None, "abstract")


def brute_force_automorphisms(graph: ColoredGraph, colorblind: bool) -> List[ColorblindAutomorphism]:
    """Enumerate every automorphism with VF2 matching on the type-augmented graph.

    Independent of the partition-refinement search; intended for small graphs.

    :param graph: Graph to analyse
    :param colorblind: Enumerate correlations instead of type-preserving automorphisms
    :returns: All group elements, sorted
    """
    offset = graph.vertex_count
    augmented = nx.Graph()
    for vertex, block in enumerate(_augmented_neighbors(graph)):
        if vertex < offset:
            label = "vertex"
        else:
            label = "type" if colorblind else f"type-{vertex - offset}"
        augmented.add_node(vertex, label=label)
        augmented.add_edges_from((vertex, other) for other in block)

    matcher = GraphMatcher(augmented, augmented, node_match=categorical_node_match("label", None))
    elements = [
        ColorblindAutomorphism.from_augmented(tuple(mapping[vertex] for vertex in range(len(mapping))), offset)
        for mapping in matcher.isomorphisms_iter()
    ]
    return sorted(elements, key=lambda element: element.augmented())
