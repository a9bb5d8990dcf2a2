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
"""Permutation helpers.

Permutations are tuples of images: ``perm[x]`` is the image of ``x``.
"""
import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from networkx.utils import UnionFind

from pairformer.identifiers import LOGGER_NAME

_LOGGER = logging.getLogger(LOGGER_NAME)
Permutation = Tuple[int, ...]
__all__ = (
    "Permutation",
    "identity",
    "compose",
    "invert",
    "parity",
    "orbit",
    "orbits",
    "closure",
)


def identity(degree: int) -> Permutation:
    """Build the identity permutation on ``range(degree)``."""
    return tuple(range(degree))


def compose(first: Sequence[int], second: Sequence[int]) -> Permutation:
    """Compose two permutations: apply ``second`` first, then ``first``.

    :param first: Outer permutation
    :param second: Inner permutation
    :returns: ``first`` after ``second``
    """
    return tuple(first[image] for image in second)


def invert(perm: Sequence[int]) -> Permutation:
    """Invert a permutation."""
    inverse = [0] * len(perm)
    for point, image in enumerate(perm):
        inverse[image] = point
    return tuple(inverse)


def parity(perm: Sequence[int]) -> int:
    """Determine the parity of a permutation (0 for even, 1 for odd) from its cycle count."""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
    return (len(perm) - cycles) % 2


def orbit(point: int, generators: Iterable[Sequence[int]]) -> Set[int]:
    """Compute the orbit of ``point`` under the group generated by ``generators``."""
    generators = list(generators)
    found = {point}
    queue = deque([point])
    while queue:
        current = queue.popleft()
        for generator in generators:
            image = generator[current]
            if image not in found:
                found.add(image)
                queue.append(image)
    return found


def orbits(degree: int, generators: Iterable[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Partition ``range(degree)`` into orbits.

    :returns: Orbits as sorted tuples, ordered by smallest member
    """
    components = UnionFind(range(degree))
    for generator in generators:
        for point, image in enumerate(generator):
            components.union(point, image)
    return sorted(tuple(sorted(block)) for block in components.to_sets())


def closure(generators: Iterable[Sequence[int]], degree: int, limit: int) -> Optional[List[Permutation]]:
    """Enumerate the group generated by ``generators``.

    :param generators: Generating permutations
    :param degree: Number of points acted on
    :param limit: Largest group order to enumerate
    :returns: Sorted elements, or ``None`` once more than ``limit`` elements turn up
    """
    generators = [tuple(generator) for generator in generators]
    start = identity(degree)
    found = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for generator in generators:
            product = compose(generator, current)
            if product not in found:
                found.add(product)
                if len(found) > limit:
                    _LOGGER.debug("Stopped element enumeration past %d elements", limit)
                    return None
                queue.append(product)
    return sorted(found)
