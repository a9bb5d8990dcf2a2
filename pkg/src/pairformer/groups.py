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
"""Finite groups as Cayley tables, normal subgroups and isomorphisms of group pairs.

Elements are the integers ``0 .. order - 1``; ``table[a, b]`` is the index of ``a * b``.
"""
import itertools
import logging
import math
import re
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import attr
import numpy as np
from attr.validators import deep_iterable, instance_of, optional

from pairformer.exceptions import (
    GroupTooLargeError,
    NotAGroupError,
    NotNormalError,
    NotSubgroupError,
    OutOfRangeError,
    TableFormatError,
    UnsupportedSpecError,
)
from pairformer.identifiers import LOGGER_NAME, MAX_GROUP_ORDER

_LOGGER = logging.getLogger(LOGGER_NAME)
_FAMILY_SPLIT = re.compile(r"x(?=(?:cyclic|dihedral|sym|alt|quaternion|table|product):)")
# (basis, sign) products of the quaternion units 1, i, j, k
_QUATERNION_UNITS: Dict[Tuple[int, int], Tuple[int, int]] = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}  # fmt: skip
__all__ = (
    "FiniteGroup",
    "GroupPair",
    "ElementPermutation",
    "from_cayley_table",
    "parse_cayley_table",
    "format_cayley_table",
    "named_group",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "quaternion_group",
    "direct_product",
    "permutations_of",
    "subgroup_from_generators",
    "parse_subgroup_spec",
    "make_pair",
    "generating_sequence",
    "pair_isomorphic",
    "group_from_permutations",
)


@attr.s(frozen=True, eq=False)
class FiniteGroup:
    """Finite group stored as a validated Cayley table.

    Build instances with :func:`from_cayley_table` or :func:`named_group`.

    :param table: Read-only ``order x order`` array of element indices
    :param identity: Index of the identity element
    :param inverse: ``inverse[a]`` is the index of ``a^-1``
    :param labels: Human-readable element names (optional)
    """

    table: np.ndarray = attr.ib(validator=instance_of(np.ndarray), repr=False)
    identity: int = attr.ib(validator=instance_of(int))
    inverse: Tuple[int, ...] = attr.ib(validator=deep_iterable(member_validator=instance_of(int)), repr=False)
    labels: Optional[Tuple[str, ...]] = attr.ib(
        default=None, validator=optional(deep_iterable(member_validator=instance_of(str))), repr=False
    )

    @property
    def order(self) -> int:
        """Number of elements."""
        return int(self.table.shape[0])

    def mul(self, a: int, b: int) -> int:
        """Multiply two elements."""
        return int(self.table[a, b])

    def conjugate(self, a: int, h: int) -> int:
        """Compute ``a * h * a^-1``."""
        return int(self.table[self.table[a, h], self.inverse[a]])

    def element_order(self, a: int) -> int:
        """Smallest ``k >= 1`` with ``a^k`` the identity."""
        power, k = a, 1
        while power != self.identity:
            power = int(self.table[power, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        """Determine whether the group is commutative."""
        return bool(np.array_equal(self.table, self.table.T))

    def label(self, a: int) -> str:
        """Name of an element, falling back to its index."""
        if self.labels is None:
            return str(a)
        return self.labels[a]


def from_cayley_table(
    table: Sequence[Sequence[int]], associativity_cap: int = 256, labels: Optional[Sequence[str]] = None
) -> FiniteGroup:
    """Validate a Cayley table and locate its identity and inverses.

    :param table: Square array; ``table[a][b]`` is the index of ``a * b``
    :param associativity_cap: Largest order for which every triple is checked for associativity
    :param labels: Element names (optional)
    :returns: Validated group
    :raises NotAGroupError: on shape problems, a non-Latin table, non-associativity or a missing identity
    """
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as error:
        raise NotAGroupError(f"Cayley table is not a rectangular integer array: {error}")

    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise NotAGroupError("Cayley table must be a non-empty square array")

    order = array.shape[0]
    if array.min() < 0 or array.max() >= order:
        raise NotAGroupError(f"Cayley table entries must lie in 0..{order - 1}")

    expected = np.arange(order)
    for a in range(order):
        if not np.array_equal(np.sort(array[a]), expected):
            raise NotAGroupError(f"Row {a} is not a permutation of the elements", (a,))
    for b in range(order):
        if not np.array_equal(np.sort(array[:, b]), expected):
            raise NotAGroupError(f"Column {b} is not a permutation of the elements", (b,))

    if order <= associativity_cap:
        for a in range(order):
            left = array[array[a]]  # left[b, c] = (a*b)*c
            right = array[a][array]  # right[b, c] = a*(b*c)
            mismatch = np.argwhere(left != right)
            if mismatch.size:
                b, c = (int(value) for value in mismatch[0])
                raise NotAGroupError(f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
    else:
        _LOGGER.debug("Skipping associativity check for order %d above cap %d", order, associativity_cap)

    identities = [
        e for e in range(order) if np.array_equal(array[e], expected) and np.array_equal(array[:, e], expected)
    ]
    if not identities:
        raise NotAGroupError("Cayley table has no identity element")
    identity = identities[0]

    inverse = []
    for a in range(order):
        b = int(np.flatnonzero(array[a] == identity)[0])
        if array[b, a] != identity:
            raise NotAGroupError(f"Element {a} has no two-sided inverse", (a, b))
        inverse.append(b)

    dtype = np.int16 if order <= np.iinfo(np.int16).max else np.int32
    stored = array.astype(dtype)
    stored.setflags(write=False)
    return FiniteGroup(
        table=stored, identity=identity, inverse=tuple(inverse), labels=None if labels is None else tuple(labels)
    )


def parse_cayley_table(text: str, associativity_cap: int = 256) -> FiniteGroup:
    """Parse the Cayley table text format: the order on the first line, then one row per line.

    :param text: File contents
    :param associativity_cap: Passed to :func:`from_cayley_table`
    :raises TableFormatError: if the text does not follow the format
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 1:
        raise TableFormatError("Cayley table must start with a line holding the group order")
    try:
        order = int(lines[0][0])
        rows = [[int(entry) for entry in line] for line in lines[1:]]
    except ValueError as error:
        raise TableFormatError(f"Cayley table entries must be integers: {error}")
    if len(rows) != order or any(len(row) != order for row in rows):
        raise TableFormatError(f"Cayley table must have {order} rows of {order} entries")
    return from_cayley_table(rows, associativity_cap=associativity_cap)


def format_cayley_table(group: FiniteGroup) -> str:
    """Render a group in the Cayley table text format."""
    lines = [str(group.order)]
    lines.extend(" ".join(str(int(entry)) for entry in row) for row in group.table)
    return "\n".join(lines) + "\n"


def _check_order(order: int, group_cap: int, spec: str):
    """Reject a family member before its table is built."""
    cap = min(group_cap, MAX_GROUP_ORDER)
    if order > cap:
        raise UnsupportedSpecError(f'Group "{spec}" has order {order}, above the cap of {cap}')


def cyclic_group(n: int) -> FiniteGroup:
    """Cyclic group of order ``n``; element ``k`` is the ``k``-th power of the generator."""
    elements = np.arange(n)
    table = (elements[:, None] + elements[None, :]) % n
    return from_cayley_table(table, labels=[str(k) for k in range(n)])


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order; element ``k + n*e`` is ``r^k s^e`` with ``n = order / 2``."""
    n = order // 2
    elements = np.arange(order)
    k, e = elements % n, elements // n
    signs = np.where(e == 0, 1, -1)
    rotation = (k[:, None] + signs[:, None] * k[None, :]) % n
    reflection = e[:, None] ^ e[None, :]
    labels = []
    for index in range(order):
        rot, ref = index % n, index // n
        name = "" if rot == 0 else ("r" if rot == 1 else f"r^{rot}")
        name += "s" if ref else ""
        labels.append(name or "e")
    return from_cayley_table(rotation + n * reflection, labels=labels)


def permutations_of(n: int, even_only: bool = False) -> List[Tuple[int, ...]]:
    """List the permutations of ``range(n)`` in lexicographic order, as used for ``sym:n`` and ``alt:n``."""
    result = []
    for perm in itertools.permutations(range(n)):
        if even_only and _parity(perm):
            continue
        result.append(perm)
    return result


def _parity(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return inversions % 2


def _cycle_label(perm: Sequence[int]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, point = [], start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = perm[point]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


def _permutation_group(perms: List[Tuple[int, ...]]) -> FiniteGroup:
    """Cayley table of a list of lexicographically sorted permutations; ``a * b`` applies ``b`` first."""
    n = len(perms[0])
    array = np.array(perms, dtype=np.int64).reshape(len(perms), n)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = array @ weights
    table = np.empty((len(perms), len(perms)), dtype=np.int64)
    for a in range(len(perms)):
        composed = array[a][array]  # composed[b, x] = a(b(x))
        table[a] = np.searchsorted(codes, composed @ weights)
    return from_cayley_table(table, associativity_cap=256, labels=[_cycle_label(perm) for perm in perms])


def symmetric_group(n: int) -> FiniteGroup:
    """Symmetric group on ``n`` letters; elements follow :func:`permutations_of`."""
    return _permutation_group(permutations_of(n))


def alternating_group(n: int) -> FiniteGroup:
    """Alternating group on ``n`` letters; elements follow :func:`permutations_of` with ``even_only``."""
    return _permutation_group(permutations_of(n, even_only=True))


def quaternion_group() -> FiniteGroup:
    """Quaternion group; elements ``1, -1, i, -i, j, -j, k, -k`` in that order."""
    table = []
    for a in range(8):
        row = []
        for b in range(8):
            basis, sign = _QUATERNION_UNITS[(a // 2, b // 2)]
            sign *= (-1) ** (a % 2 + b % 2)
            row.append(2 * basis + (0 if sign > 0 else 1))
        table.append(row)
    return from_cayley_table(table, labels=["1", "-1", "i", "-i", "j", "-j", "k", "-k"])


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product; element indices are mixed-radix with the last factor varying fastest."""
    result = factors[0]
    for factor in factors[1:]:
        right = factor.order
        left_table = result.table.astype(np.int64)[:, None, :, None]
        table = left_table * right + factor.table.astype(np.int64)[None, :, None, :]
        labels = [f"({result.label(a)},{factor.label(b)})" for a in range(result.order) for b in range(right)]
        result = from_cayley_table(table.reshape(result.order * right, result.order * right), labels=labels)
    return result


def _split_factors(parameter: str) -> List[str]:
    """Split a product parameter at each ``x`` that starts a new factor.

    Only the first ``:`` of a factor separates its family; a nested ``product:`` factor takes the rest of
    the parameter, so ``product:Axproduct:BxC`` is ``A x (B x C)``.
    """
    factors = []
    rest = parameter
    while not rest.startswith("product:"):
        match = _FAMILY_SPLIT.search(rest)
        if match is None:
            break
        factors.append(rest[: match.start()])
        rest = rest[match.end() :]
    factors.append(rest)
    return factors


def named_group(spec: str, group_cap: int = MAX_GROUP_ORDER, associativity_cap: int = 256) -> FiniteGroup:
    """Build a group from the spec mini-language.

    Supported: ``cyclic:N``, ``dihedral:N`` (``N`` the order, even), ``sym:N``, ``alt:N``, ``quaternion:8``,
    ``product:<spec>x<spec>[x...]`` and ``table:<path>``.

    :param spec: Group spec
    :param group_cap: Largest accepted order
    :param associativity_cap: Passed through when loading ``table:`` specs
    :raises UnsupportedSpecError: for unknown families or parameters outside the supported range
    """
    family, separator, parameter = spec.partition(":")
    if not separator or not parameter:
        raise UnsupportedSpecError(f'Group spec "{spec}" must look like "family:parameter"')

    if family == "product":
        factors = [named_group(part, group_cap, associativity_cap) for part in _split_factors(parameter)]
        if len(factors) < 2:
            raise UnsupportedSpecError(f'Group spec "{spec}" needs at least two factors separated by "x"')
        _check_order(math.prod(factor.order for factor in factors), group_cap, spec)
        return direct_product(*factors)

    if family == "table":
        try:
            with open(parameter, "r", encoding="utf-8") as table_file:
                text = table_file.read()
        except OSError as error:
            raise UnsupportedSpecError(f'Cannot read Cayley table "{parameter}": {error}')
        except UnicodeDecodeError as error:
            raise TableFormatError(f'Cayley table "{parameter}" is not UTF-8 text: {error}')
        group = parse_cayley_table(text, associativity_cap=associativity_cap)
        _check_order(group.order, group_cap, spec)
        return group

    try:
        n = int(parameter)
    except ValueError:
        raise UnsupportedSpecError(f'Group spec "{spec}" needs an integer parameter')

    if family == "cyclic" and n >= 1:
        _check_order(n, group_cap, spec)
        return cyclic_group(n)
    if family == "dihedral" and n >= 2 and n % 2 == 0:
        _check_order(n, group_cap, spec)
        return dihedral_group(n)
    if family == "sym" and n >= 1:
        _check_order(math.factorial(n), group_cap, spec)
        return symmetric_group(n)
    if family == "alt" and n >= 1:
        _check_order(max(1, math.factorial(n) // 2), group_cap, spec)
        return alternating_group(n)
    if family == "quaternion" and n == 8:
        return quaternion_group()

    raise UnsupportedSpecError(f'Unsupported group spec "{spec}"')


def subgroup_from_generators(group: FiniteGroup, generators: Iterable[int]) -> FrozenSet[int]:
    """Close a set of elements under the group operation.

    :param group: Ambient group
    :param generators: Element indices
    :returns: Members of the generated subgroup (always containing the identity)
    :raises OutOfRangeError: if a generator is not an element index
    """
    generators = list(generators)
    for generator in generators:
        if not 0 <= generator < group.order:
            raise OutOfRangeError(f"Element index {generator} outside 0..{group.order - 1}")

    members = {group.identity}
    queue = deque([group.identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            product = group.mul(current, generator)
            if product not in members:
                members.add(product)
                queue.append(product)
    return frozenset(members)


def parse_subgroup_spec(group: FiniteGroup, spec: str) -> FrozenSet[int]:
    """Resolve a subgroup spec: ``gens:i1,i2,...``, ``all`` or ``trivial``.

    :raises UnsupportedSpecError: for malformed specs or invalid element indices
    """
    if spec == "all":
        return frozenset(range(group.order))
    if spec == "trivial":
        return frozenset((group.identity,))
    if spec.startswith("gens:"):
        try:
            generators = [int(part) for part in spec[len("gens:") :].split(",") if part.strip()]
            return subgroup_from_generators(group, generators)
        except (ValueError, OutOfRangeError) as error:
            raise UnsupportedSpecError(f'Invalid subgroup spec "{spec}": {error}')
    raise UnsupportedSpecError(f'Subgroup spec "{spec}" must be "gens:i1,i2,...", "all" or "trivial"')


def _bijection(instance, attribute, value):  # pylint: disable=unused-argument
    """Verify that an image tuple is a permutation of its index range."""
    if sorted(value) != list(range(len(value))):
        raise ValueError(f"{attribute.name} must be a permutation of 0..{len(value) - 1}")


@attr.s(frozen=True)
class ElementPermutation:
    """Bijection between the element indices of two groups of the same order.

    :param images: ``images[a]`` is the image of element ``a``
    """

    images: Tuple[int, ...] = attr.ib(converter=tuple, validator=_bijection)

    def __call__(self, element: int) -> int:
        """Image of an element."""
        return self.images[element]


@attr.s(frozen=True, eq=False)
class GroupPair:
    """A finite group with a distinguished normal subgroup and the coset-aware element listing.

    Build instances with :func:`make_pair`.

    :param group: Ambient group
    :param members: ``members[a]`` is true when ``a`` lies in the subgroup
    :param index: Number of cosets
    :param ordering: Element listing: the identity, one representative per further coset, then the rest
    :param coset_index: ``coset_index[a]`` is the position (0-based) of the coset containing ``a``
    """

    group: FiniteGroup = attr.ib(validator=instance_of(FiniteGroup))
    members: Tuple[bool, ...] = attr.ib(validator=deep_iterable(member_validator=instance_of(bool)))
    index: int = attr.ib(validator=instance_of(int))
    ordering: Tuple[int, ...] = attr.ib(validator=_bijection)
    coset_index: Tuple[int, ...] = attr.ib(validator=deep_iterable(member_validator=instance_of(int)))

    @property
    def subgroup(self) -> FrozenSet[int]:
        """Members of the normal subgroup."""
        return frozenset(a for a, member in enumerate(self.members) if member)

    @property
    def subgroup_order(self) -> int:
        """Order of the normal subgroup."""
        return sum(self.members)

    @property
    def representatives(self) -> Tuple[int, ...]:
        """Coset representatives, in coset order."""
        return self.ordering[: self.index]

    def coset_of(self, element: int) -> int:
        """Position (0-based) of the coset containing ``element``."""
        return self.coset_index[element]


def make_pair(group: FiniteGroup, members: Iterable[int]) -> GroupPair:
    """Check that ``members`` is a normal subgroup and build the coset-aware element listing.

    :param group: Ambient group
    :param members: Element indices of the subgroup
    :raises NotSubgroupError: if ``members`` holds a non-element, is not closed or lacks the identity
    :raises NotNormalError: if some conjugate of a member leaves the subgroup
    """
    subgroup = frozenset(members)
    strays = sorted(a for a in subgroup if not 0 <= a < group.order)
    if strays:
        raise NotSubgroupError(f"Members {strays} are not element indices 0..{group.order - 1}")
    if group.identity not in subgroup:
        raise NotSubgroupError("Subgroup must contain the identity")
    for a in sorted(subgroup):
        if group.inverse[a] not in subgroup:
            raise NotSubgroupError(f"Inverse of element {a} is missing from the subgroup")
        for b in sorted(subgroup):
            if group.mul(a, b) not in subgroup:
                raise NotSubgroupError(f"Product {a}*{b} leaves the subgroup")

    for a in range(group.order):
        for h in sorted(subgroup):
            conjugate = group.conjugate(a, h)
            if conjugate not in subgroup:
                raise NotNormalError(f"Conjugate of {h} by {a} is {conjugate}, outside the subgroup", (a, h, conjugate))

    cosets: List[List[int]] = []
    coset_index = [-1] * group.order
    for a in [group.identity] + [a for a in range(group.order) if a != group.identity]:
        if coset_index[a] >= 0:
            continue
        coset = sorted(group.mul(a, h) for h in subgroup)
        for member in coset:
            coset_index[member] = len(cosets)
        cosets.append(coset)

    # the identity's coset comes first; every later coset is discovered at its smallest element
    representatives = [group.identity] + [coset[0] for coset in cosets[1:]]
    chosen = set(representatives)
    ordering = representatives + [member for coset in cosets for member in coset if member not in chosen]
    _LOGGER.debug("Built pair of order %d with index %d", group.order, len(cosets))
    return GroupPair(
        group=group,
        members=tuple(a in subgroup for a in range(group.order)),
        index=len(cosets),
        ordering=tuple(ordering),
        coset_index=tuple(coset_index),
    )


def generating_sequence(group: FiniteGroup) -> List[int]:
    """Greedy generating sequence: repeatedly add the smallest element outside the current closure."""
    generators: List[int] = []
    closure = frozenset((group.identity,))
    for a in range(group.order):
        if a not in closure:
            generators.append(a)
            closure = subgroup_from_generators(group, generators)
        if len(closure) == group.order:
            break
    return generators


def _extend(
    source: GroupPair, target: GroupPair, generators: Sequence[int], images: Sequence[int]
) -> Optional[Dict[int, int]]:
    """Extend generator images to a homomorphism on the generated subgroup.

    :returns: Element map when consistent, injective and membership-preserving; otherwise ``None``
    """
    left, right = source.group, target.group
    mapping = {left.identity: right.identity}
    queue = deque([left.identity])
    while queue:
        current = queue.popleft()
        for generator, image in zip(generators, images):
            product = left.mul(current, generator)
            mapped = right.mul(mapping[current], image)
            known = mapping.get(product)
            if known is None:
                mapping[product] = mapped
                queue.append(product)
            elif known != mapped:
                return None

    if len(set(mapping.values())) != len(mapping):
        return None
    if any(source.members[a] != target.members[b] for a, b in mapping.items()):
        return None
    return mapping


def pair_isomorphic(source: GroupPair, target: GroupPair, cap: int = 48) -> Optional[ElementPermutation]:
    """Search for an isomorphism ``phi`` of the ambient groups with ``phi(H) = H'``.

    Backtracks over images of a greedy generating sequence, pruned by element orders and subgroup membership.

    :param source: First pair
    :param target: Second pair
    :param cap: Largest group order searched
    :returns: Witness isomorphism, or ``None`` when the pairs are not isomorphic
    :raises GroupTooLargeError: if the groups are larger than ``cap``
    """
    if source.group.order != target.group.order or source.subgroup_order != target.subgroup_order:
        return None
    if source.group.order > cap:
        raise GroupTooLargeError(f"Pair isomorphism search is capped at order {cap}, got {source.group.order}")

    source_orders = [source.group.element_order(a) for a in range(source.group.order)]
    target_orders = [target.group.element_order(b) for b in range(target.group.order)]
    if sorted(zip(source_orders, source.members)) != sorted(zip(target_orders, target.members)):
        return None

    generators = generating_sequence(source.group)
    candidates = [
        [
            b
            for b in range(target.group.order)
            if target_orders[b] == source_orders[s] and target.members[b] == source.members[s]
        ]
        for s in generators
    ]

    def _search(images: List[int]) -> Optional[Dict[int, int]]:
        mapping = _extend(source, target, generators[: len(images)], images)
        if mapping is None:
            return None
        if len(images) == len(generators):
            return mapping
        used = set(mapping.values())
        for candidate in candidates[len(images)]:
            if candidate in used:
                continue
            found = _search(images + [candidate])
            if found is not None:
                return found
        return None

    found = _search([])
    if found is None:
        return None
    return ElementPermutation(tuple(found[a] for a in range(source.group.order)))


def group_from_permutations(elements: Sequence[Sequence[int]]) -> FiniteGroup:
    """Cayley table of a permutation group given by its full element list; ``a * b`` applies ``b`` first."""
    elements = [tuple(element) for element in elements]
    position = {element: index for index, element in enumerate(elements)}
    table = [[position[tuple(a[x] for x in b)] for b in elements] for a in elements]
    return from_cayley_table(table)
