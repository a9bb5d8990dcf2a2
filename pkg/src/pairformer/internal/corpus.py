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
"""Seeded random proper colored graphs."""
import random
from itertools import combinations
from typing import Iterator

from pairformer.exceptions import OutOfRangeError
from pairformer.graphs import ColoredGraph
from pairformer.internal.structures import Raw

__all__ = ("random_colored_graph", "random_corpus")


def random_colored_graph(
    rng: random.Random, vertices: int, types: int, edge_probability: float = 0.4
) -> ColoredGraph:
    """Draw a proper colored graph on ``Raw(0) .. Raw(vertices - 1)`` using every one of ``types`` types.

    :param rng: Source of randomness
    :param vertices: Number of vertices
    :param types: Number of types, at most ``vertices``
    :param edge_probability: Chance of joining two vertices of different types
    :raises OutOfRangeError: if the sizes are inconsistent
    """
    if not 1 <= types <= vertices:
        raise OutOfRangeError(f"Need 1 <= types <= vertices, got {types} types for {vertices} vertices")

    assignment = list(range(types)) + [rng.randrange(types) for _ in range(vertices - types)]
    rng.shuffle(assignment)
    edges = [
        (Raw(a), Raw(b))
        for a, b in combinations(range(vertices), 2)
        if assignment[a] != assignment[b] and rng.random() < edge_probability
    ]
    return ColoredGraph.build(
        [str(t) for t in range(types)], [(Raw(v), t) for v, t in enumerate(assignment)], edges
    )


def random_corpus(seed: int, count: int, max_vertices: int, max_types: int) -> Iterator[ColoredGraph]:
    """Yield ``count`` random graphs with at most ``max_vertices`` vertices and ``max_types`` types."""
    rng = random.Random(seed)
    for _ in range(count):
        vertices = rng.randint(1, max_vertices)
        types = rng.randint(1, min(max_types, vertices))
        yield random_colored_graph(rng, vertices, types, edge_probability=rng.uniform(0.2, 0.7))
