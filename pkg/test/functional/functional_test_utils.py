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
"""Helper tools for use with functional tests."""
import os
from itertools import permutations, product
from typing import Iterator, List, Sequence, Set, Tuple

from pairformer.automorphisms import ColorblindAutomorphism, brute_force_automorphisms, is_automorphism
from pairformer.gallery import GammaN
from pairformer.graphs import ColoredGraph
from pairformer.groups import (
    GroupPair,
    make_pair,
    named_group,
    parse_subgroup_spec,
    subgroup_from_generators,
    symmetric_group,
)
from pairformer.internal.serialization import load_graph

_TEST_VECTORS_DIR = os.path.join(os.path.abspath(os.path.dirname(__file__)), "..", "vectors")

# (group spec, subgroup spec, |G|, |H|)
SMALL_PAIRS = (
    ("cyclic:2", "trivial", 2, 1),
    ("cyclic:2", "all", 2, 2),
    ("cyclic:3", "trivial", 3, 1),
    ("cyclic:3", "all", 3, 3),
    ("cyclic:4", "gens:2", 4, 2),
    ("product:cyclic:2xcyclic:2", "gens:1", 4, 2),
)
ACCEPTANCE_PAIRS = SMALL_PAIRS + (
    ("sym:3", "trivial", 6, 1),
    ("sym:3", "gens:3", 6, 3),
    ("sym:3", "all", 6, 6),
    ("cyclic:6", "gens:2", 6, 3),
    ("dihedral:8", "gens:1", 8, 4),
    ("quaternion:8", "gens:1", 8, 2),
    ("quaternion:8", "gens:2", 8, 4),
)


def vector_path(name: str) -> str:
    filename = os.path.join(_TEST_VECTORS_DIR, name)
    if not os.path.isfile(filename):
        raise ValueError(f"Vector name {name!r} does not exist.")
    return filename


def load_vector_graph(name: str) -> ColoredGraph:
    return load_graph(vector_path(name + ".json"))


def read_vector(name: str) -> str:
    with open(vector_path(name)) as f:
        return f.read()


def pair_from_specs(group_spec: str, normal_spec: str) -> GroupPair:
    group = named_group(group_spec)
    return make_pair(group, parse_subgroup_spec(group, normal_spec))


def symmetric_alternating_pair(n: int) -> GroupPair:
    """The pair (S_n, A_n); the squares of S_n generate A_n."""
    group = symmetric_group(n)
    return make_pair(group, subgroup_from_generators(group, {group.mul(a, a) for a in range(group.order)}))


def point_restrictions(gamma: GammaN, elements: Sequence[ColorblindAutomorphism]) -> Set[Tuple[int, ...]]:
    """Images of the points under each element, as point-position tuples."""
    points = gamma.point_positions()
    return {tuple(element.vertex_images[position] for position in points) for element in elements}


def brute_force_orders(graph: ColoredGraph) -> Tuple[int, int]:
    """(colorblind, color-preserving) orders from VF2 matching."""
    return (
        len(brute_force_automorphisms(graph, colorblind=True)),
        len(brute_force_automorphisms(graph, colorblind=False)),
    )


def _class_maps(graph: ColoredGraph, type_images: Tuple[int, ...]) -> Iterator[List[int]]:
    classes = [[v for v in range(graph.vertex_count) if graph.vertex_types[v] == t] for t in range(graph.rank)]
    if any(len(classes[t]) != len(classes[type_images[t]]) for t in range(graph.rank)):
        return
    for choices in product(*(permutations(classes[type_images[t]]) for t in range(graph.rank))):
        images = [0] * graph.vertex_count
        for t, chosen in enumerate(choices):
            for vertex, image in zip(classes[t], chosen):
                images[vertex] = image
        yield images


def exhaustive_orders(graph: ColoredGraph) -> Tuple[int, int]:
    """(colorblind, color-preserving) orders by trying every class-respecting vertex bijection.

    Only usable for very small graphs.
    """
    colorblind = color = 0
    for type_images in permutations(range(graph.rank)):
        for images in _class_maps(graph, type_images):
            if is_automorphism(graph, images):
                colorblind += 1
                if type_images == tuple(range(graph.rank)):
                    color += 1
    return colorblind, color


def is_triangle_free(graph: ColoredGraph) -> bool:
    return not any(
        graph.adjacent(b, c)
        for a in range(graph.vertex_count)
        for b in graph.neighbors[a]
        for c in graph.neighbors[a]
        if b < c
    )
