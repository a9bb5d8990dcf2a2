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
"""Equitable partition refinement and the individualize-refine automorphism search.

Graphs are plain adjacency lists over ``range(n)``; partitions are ordered lists of cells.
"""
import logging
import math
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import attr
from attr.validators import deep_iterable, instance_of

from pairformer.exceptions import ResourceLimitError
from pairformer.identifiers import LOGGER_NAME
from pairformer.internal.util import Permutation, orbit

_LOGGER = logging.getLogger(LOGGER_NAME)
Cell = Tuple[int, ...]
Certificate = Tuple
__all__ = ("SearchResult", "equitable_refinement", "individualize", "target_cell", "search_automorphisms")


def equitable_refinement(neighbors: Sequence[Sequence[int]], cells: Sequence[Cell]) -> Tuple[List[Cell], Certificate]:
    """Split cells by neighbor-count signatures until the partition is equitable.

    Subcells replace their parent in sorted-signature order, so the result and the trace do not depend on
    vertex names.

    :param neighbors: Adjacency lists
    :param cells: Ordered partition of ``range(len(neighbors))``
    :returns: Refined partition and the trace of every round's splits
    """
    cells = [tuple(cell) for cell in cells]
    cell_of = [0] * len(neighbors)
    rounds = []
    while True:
        for index, cell in enumerate(cells):
            for vertex in cell:
                cell_of[vertex] = index

        refined: List[Cell] = []
        summary = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            blocks: Dict[Tuple, List[int]] = defaultdict(list)
            for vertex in cell:
                signature = tuple(sorted(Counter(cell_of[other] for other in neighbors[vertex]).items()))
                blocks[signature].append(vertex)
            for signature in sorted(blocks):
                summary.append((len(refined), len(blocks[signature]), signature))
                refined.append(tuple(blocks[signature]))

        rounds.append(tuple(summary))
        if len(refined) == len(cells):
            return refined, tuple(rounds)
        cells = refined


def individualize(cells: Sequence[Cell], vertex: int) -> List[Cell]:
    """Split ``vertex`` off its cell as a singleton placed directly before the rest of the cell."""
    for index, cell in enumerate(cells):
        if vertex in cell:
            rest = tuple(other for other in cell if other != vertex)
            return list(cells[:index]) + [(vertex,), rest] + list(cells[index + 1 :])
    raise ValueError(f"Vertex {vertex} is not in the partition")


def target_cell(cells: Sequence[Cell]) -> Optional[int]:
    """Index of the first smallest non-singleton cell, or ``None`` for a discrete partition."""
    best = None
    for index, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = index
    return best


@attr.s(frozen=True)
class SearchResult:
    """Generators and orbit-stabilizer data of an automorphism group.

    :param generators: Generating permutations in discovery order
    :param base: Individualized vertex at each level of the first path
    :param orbit_sizes: Orbit size of each base point under the stabilizer of the earlier ones
    :param order: Group order, the product of ``orbit_sizes``
    :param nodes: Refinements performed
    """

    generators: Tuple[Permutation, ...] = attr.ib(converter=tuple)
    base: Tuple[int, ...] = attr.ib(converter=tuple, validator=deep_iterable(member_validator=instance_of(int)))
    orbit_sizes: Tuple[int, ...] = attr.ib(converter=tuple, validator=deep_iterable(member_validator=instance_of(int)))
    order: int = attr.ib(validator=instance_of(int))
    nodes: int = attr.ib(validator=instance_of(int))


class _SearchTree:
    """First path of the search tree plus the depth-first descent for individual automorphisms."""

    def __init__(self, neighbors: Sequence[Sequence[int]], cells: Sequence[Cell], node_budget: int):
        self._neighbors = [tuple(block) for block in neighbors]
        self._neighbor_sets: List[FrozenSet[int]] = [frozenset(block) for block in neighbors]
        self._node_budget = node_budget
        self.nodes = 0
        self.levels: List[Tuple[List[Cell], int, int]] = []
        self.certificates: List[Certificate] = []

        current, _ = self._refine(cells)
        while True:
            index = target_cell(current)
            if index is None:
                break
            base = min(current[index])
            self.levels.append((current, index, base))
            current, certificate = self._refine(individualize(current, base))
            self.certificates.append(certificate)
        self.leaf = [cell[0] for cell in current]

    def _refine(self, cells: Sequence[Cell]) -> Tuple[List[Cell], Certificate]:
        self.nodes += 1
        if self.nodes > self._node_budget:
            raise ResourceLimitError(f"Automorphism search exceeded its budget of {self._node_budget} nodes")
        return equitable_refinement(self._neighbors, cells)

    def _is_automorphism(self, images: Sequence[int]) -> bool:
        return all(
            frozenset(images[other] for other in self._neighbors[vertex]) == self._neighbor_sets[images[vertex]]
            for vertex in range(len(images))
        )

    def _descend(self, level: int, cells: Sequence[Cell], vertex: int) -> Optional[Permutation]:
        refined, certificate = self._refine(individualize(cells, vertex))
        if certificate != self.certificates[level]:
            return None
        if level + 1 == len(self.levels):
            images = [0] * len(self._neighbors)
            for first, cell in zip(self.leaf, refined):
                images[first] = cell[0]
            return tuple(images) if self._is_automorphism(images) else None
        index = self.levels[level + 1][1]
        for candidate in sorted(refined[index]):
            found = self._descend(level + 1, refined, candidate)
            if found is not None:
                return found
        return None

    def find(self, level: int, candidate: int) -> Optional[Permutation]:
        """Search for an automorphism fixing the earlier base points and sending the base point of ``level``
        to ``candidate``."""
        cells, _, _ = self.levels[level]
        return self._descend(level, cells, candidate)


def _find_in_worker(tree: _SearchTree, level: int, candidate: int) -> Tuple[Optional[Permutation], int]:
    start = tree.nodes
    found = tree.find(level, candidate)
    return found, tree.nodes - start


def search_automorphisms(
    neighbors: Sequence[Sequence[int]], cells: Sequence[Cell], node_budget: int, jobs: int = 1
) -> SearchResult:
    """Compute generators and the order of the automorphism group preserving an ordered partition.

    Levels of the first path are processed deepest first; at each level every target-cell vertex outside
    the current orbit of the base point is searched once, so orbit sizes are exact.

    :param neighbors: Adjacency lists
    :param cells: Initial ordered partition; automorphisms map every cell to itself
    :param node_budget: Maximum number of refinements
    :param jobs: Worker processes for the descents at the top level
    :raises ResourceLimitError: if the budget is exhausted
    """
    tree = _SearchTree(neighbors, cells, node_budget)
    generators: List[Permutation] = []
    orbit_sizes = [1] * len(tree.levels)
    extra_nodes = 0

    for level in reversed(range(len(tree.levels))):
        level_cells, index, base = tree.levels[level]
        candidates = [vertex for vertex in sorted(level_cells[index]) if vertex != base]

        precomputed: Dict[int, Optional[Permutation]] = {}
        if jobs > 1 and level == 0 and len(candidates) > 1:
            pending = [vertex for vertex in candidates if vertex not in orbit(base, generators)]
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                futures = {vertex: executor.submit(_find_in_worker, tree, level, vertex) for vertex in pending}
                for vertex in pending:
                    precomputed[vertex], nodes = futures[vertex].result()
                    extra_nodes += nodes
            if tree.nodes + extra_nodes > node_budget:
                raise ResourceLimitError(f"Automorphism search exceeded its budget of {node_budget} nodes")

        for candidate in candidates:
            if candidate in orbit(base, generators):
                continue
            found = precomputed[candidate] if candidate in precomputed else tree.find(level, candidate)
            if found is not None:
                generators.append(found)

        orbit_sizes[level] = len(orbit(base, generators))
        _LOGGER.debug("Level %d: base %d has orbit size %d", level, base, orbit_sizes[level])

    return SearchResult(
        generators=generators,
        base=[base for _, _, base in tree.levels],
        orbit_sizes=orbit_sizes,
        order=math.prod(orbit_sizes),
        nodes=tree.nodes + extra_nodes,
    )
