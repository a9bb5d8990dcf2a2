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
"""Hand-made incidence systems: the recursive symmetric/alternating family and the hexagon fixtures.

The family member of degree ``n`` lives on the ground set ``{1..n}``. Its points are the elements, its
next type are the 2-subsets, each point is joined to the 2-subsets containing it, and for every element
``a`` a copy of the degree ``n - 1`` member on ``{1..n} - {a}`` hangs off the 2-subsets ``{x, a}``. The
recursion bottoms out in paths ``w_p - b0 - b1 - w_q`` oriented so that even relabelings of the ground set
preserve types and odd ones swap the two bottom types.
"""
import logging
import math
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

import attr
from attr.validators import in_, instance_of

from pairformer.automorphisms import AutomorphismGroupReport, ColorblindAutomorphism, induced_type_permutation
from pairformer.exceptions import OutOfRangeError
from pairformer.graphs import ColoredGraph
from pairformer.identifiers import LOGGER_NAME
from pairformer.internal.structures import Base2Vertex, PairVertex, Point, Raw, VertexId
from pairformer.internal.util import parity

_LOGGER = logging.getLogger(LOGGER_NAME)
_MIN_DEGREE, _MAX_DEGREE = 2, 7
FIGURE1_TYPES = ("black", "red", "blue")
FIGURE1_CAPTION_ORDERS = {"solid": (6, 3), "completed": (12, 3)}
__all__ = (
    "GammaN",
    "CaptionAgreement",
    "gamma_n",
    "expected_class_sizes",
    "expected_vertex_count",
    "natural_action",
    "figure1_solid",
    "figure1_completed",
    "figure1",
    "caption_agreement",
)


@attr.s(frozen=True, eq=False)
class GammaN:
    """Member of the symmetric/alternating family.

    :param n: Size of the ground set
    :param graph: Incidence system with types ``"0" .. str(n)``
    """

    n: int = attr.ib(validator=instance_of(int))
    graph: ColoredGraph = attr.ib(validator=instance_of(ColoredGraph))

    def point(self, element: int) -> VertexId:
        """Top-type vertex of a ground-set element (1-based)."""
        return Point(element)

    def point_positions(self) -> Tuple[int, ...]:
        """Vertex positions of the points ``1 .. n``."""
        return tuple(self.graph.position(Point(element)) for element in range(1, self.n + 1))


def _even_orientation(chain: Sequence[int], pair: Tuple[int, int], n: int) -> Tuple[int, int]:
    """Order the last two entries so that ``chain + (p, q)`` is an even permutation of ``1..n`` in one-line form."""
    p, q = pair
    if parity([value - 1 for value in tuple(chain) + (p, q)]):
        p, q = q, p
    return p, q


def _build_copy(
    n: int,
    chain: Tuple[int, ...],
    remaining: Tuple[int, ...],
    top: Callable[[int], VertexId],
    vertices: List[Tuple[VertexId, int]],
    edges: List[Tuple[VertexId, VertexId]],
):
    """Emit one copy on ``remaining``; its top-type vertices already exist and are given by ``top``."""
    if len(remaining) == 2:
        p, q = _even_orientation(chain, remaining, n)
        first, second = Base2Vertex(chain, remaining, 0), Base2Vertex(chain, remaining, 1)
        vertices.extend([(first, 0), (second, 1)])
        edges.extend([(top(p), first), (first, second), (second, top(q))])
        return

    pair_type = len(remaining) - 1
    for x, y in combinations(remaining, 2):
        pair = PairVertex(chain, (x, y))
        vertices.append((pair, pair_type))
        edges.extend([(top(x), pair), (top(y), pair)])

    for removed in remaining:
        _build_copy(
            n,
            chain + (removed,),
            tuple(value for value in remaining if value != removed),
            lambda x, removed=removed: PairVertex(chain, (x, removed)),
            vertices,
            edges,
        )


def gamma_n(n: int) -> GammaN:
    """Build the family member on ``{1..n}``.

    :raises OutOfRangeError: unless ``2 <= n <= 7``
    """
    if not _MIN_DEGREE <= n <= _MAX_DEGREE:
        raise OutOfRangeError(f"n must lie in {_MIN_DEGREE}..{_MAX_DEGREE}, got {n}")

    ground = tuple(range(1, n + 1))
    vertices: List[Tuple[VertexId, int]] = [(Point(element), n) for element in ground]
    edges: List[Tuple[VertexId, VertexId]] = []
    _build_copy(n, (), ground, Point, vertices, edges)

    graph = ColoredGraph.build([str(t) for t in range(n + 1)], vertices, edges)
    _LOGGER.info("Built family member n=%d with %d vertices", n, graph.vertex_count)
    return GammaN(n=n, graph=graph)


def expected_class_sizes(n: int) -> Tuple[int, ...]:
    """Closed-form type-class sizes, indexed by type ``0 .. n``."""
    sizes = [math.factorial(n) // (2 * math.factorial(max(i - 1, 0))) for i in range(n - 1)]
    return tuple(sizes) + (n * (n - 1) // 2, n)


def expected_vertex_count(n: int) -> int:
    """Vertex count from the recurrence ``X_n = n + n (X_{n-1} - (n - 1)) + n (n - 1) / 2`` with ``X_2 = 4``."""
    count = 4
    for m in range(3, n + 1):
        count = m + m * (count - (m - 1)) + m * (m - 1) // 2
    return count


def _check_ground_permutation(perm: Sequence[int], n: int):
    if sorted(perm) != list(range(1, n + 1)):
        raise OutOfRangeError(f"Expected a permutation of 1..{n} in one-line form, got {tuple(perm)}")


def natural_action(gamma: GammaN, perm: Sequence[int]) -> ColorblindAutomorphism:
    """Correlation induced by relabeling the ground set.

    :param gamma: Family member
    :param perm: One-line permutation of ``1..n``: element ``a`` goes to ``perm[a - 1]``
    :raises OutOfRangeError: if ``perm`` is not a permutation of ``1..n``
    """
    _check_ground_permutation(perm, gamma.n)
    image: Dict[int, int] = {element: perm[element - 1] for element in range(1, gamma.n + 1)}
    odd = parity([value - 1 for value in perm])

    def _move(vertex: VertexId) -> VertexId:
        if isinstance(vertex, Point):
            return Point(image[vertex.a])
        chain = tuple(image[value] for value in vertex.chain)
        pair = (image[vertex.pair[0]], image[vertex.pair[1]])
        if isinstance(vertex, PairVertex):
            return PairVertex(chain, pair)
        return Base2Vertex(chain, pair, vertex.slot ^ odd)

    graph = gamma.graph
    images = [graph.position(_move(vertex)) for vertex in graph.vertex_ids]
    return ColorblindAutomorphism(images, induced_type_permutation(graph, images))


def _figure1(completed: bool) -> ColoredGraph:
    corners = range(6) if completed else (0, 2, 4)
    vertices = [(Raw(k), 0) for k in corners] + [(Raw(10 + k), 1 + k % 2) for k in range(6)]
    hexagon = [(Raw(10 + k), Raw(10 + (k + 1) % 6)) for k in range(6)]
    spokes = [(Raw(k), Raw(10 + (k - 1) % 6)) for k in corners] + [(Raw(k), Raw(10 + k)) for k in corners]
    return ColoredGraph.build(FIGURE1_TYPES, vertices, hexagon + spokes)


def figure1_solid() -> ColoredGraph:
    """Nine-vertex hexagon system: corners ``Raw(0), Raw(2), Raw(4)`` (black) each joined to two consecutive
    hexagon vertices ``Raw(10 + k)`` (red for even ``k``, blue for odd ``k``)."""
    return _figure1(completed=False)


def figure1_completed() -> ColoredGraph:
    """The nine-vertex system with the three missing corners ``Raw(1), Raw(3), Raw(5)`` added."""
    return _figure1(completed=True)


def figure1(variant: str) -> ColoredGraph:
    """Hexagon fixture by name: ``"solid"`` or ``"completed"``."""
    if variant not in FIGURE1_CAPTION_ORDERS:
        raise OutOfRangeError(f'Unknown figure variant "{variant}"')
    return _figure1(completed=variant == "completed")


@attr.s(frozen=True)
class CaptionAgreement:
    """Measured automorphism orders of a hexagon fixture against the orders its caption states.

    :param variant: ``"solid"`` or ``"completed"``
    :param caption: ``(cb, c)`` orders stated by the caption
    :param measured: ``(cb, c)`` orders computed
    """

    variant: str = attr.ib(validator=in_(tuple(FIGURE1_CAPTION_ORDERS)))
    caption: Tuple[int, int] = attr.ib(converter=tuple)
    measured: Tuple[int, int] = attr.ib(converter=tuple)

    @property
    def agrees(self) -> bool:
        """Both orders match the caption."""
        return self.caption == self.measured

    @property
    def cb_agrees(self) -> bool:
        """The colorblind order matches the caption."""
        return self.caption[0] == self.measured[0]


def caption_agreement(variant: str, report: AutomorphismGroupReport) -> CaptionAgreement:
    """Compare a computed automorphism report for a hexagon fixture with its caption."""
    agreement = CaptionAgreement(
        variant=variant, caption=FIGURE1_CAPTION_ORDERS[variant], measured=(report.cb_order, report.c_order)
    )
    if not agreement.agrees:
        _LOGGER.warning(
            "Fixture %s: measured orders %s disagree with the caption orders %s",
            variant,
            agreement.measured,
            agreement.caption,
        )
    return agreement
