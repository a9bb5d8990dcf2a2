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
"""Internal data structures: engine settings and structured vertex identifiers."""
from typing import Dict, Optional, Tuple

import attr
import oyaml as yaml
from attr.validators import deep_iterable, instance_of

from pairformer.exceptions import GraphFormatError
from pairformer.identifiers import MAX_GROUP_ORDER

__all__ = (
    "EngineSettings",
    "VertexId",
    "Raw",
    "PVertex",
    "TVertex",
    "SVertex",
    "Point",
    "PairVertex",
    "Base2Vertex",
    "GadgetVertex",
    "ChamberVertex",
    "parse_vertex_id",
)
_INT_TUPLE = deep_iterable(member_validator=instance_of(int), iterable_validator=instance_of(tuple))


def _positive(instance, attribute, value):  # pylint: disable=unused-argument
    """Verify that an integer setting is at least one."""
    if value < 1:
        raise ValueError(f"{attribute.name} must be >= 1")


class _ConfigStructure:
    """Base for configuration structures."""

    @staticmethod
    def _clean_kwargs(kwargs: Dict):
        """Convert keys separators from YAML-valid "-" characters to Python-variable-name-valid "_" characters."""
        return {key.replace("-", "_"): value for key, value in kwargs.items()}

    @classmethod
    def from_dict(cls, kwargs: Dict):
        """Load from a dictionary."""
        return cls(**cls._clean_kwargs(kwargs))


@attr.s(frozen=True)
class EngineSettings(_ConfigStructure):
    """Limits and knobs shared by the group, search and verification layers.

    :param node_budget: Maximum number of search nodes per automorphism search
    :param pair_cap: Largest group order handed to the abstract pair-isomorphism backtracking
    :param element_limit: Largest group order for which full element lists are enumerated
    :param group_cap: Largest group order accepted by the named-group builders
    :param associativity_cap: Largest order for which associativity is checked on every triple
    :param jobs: Worker processes for the top level of the automorphism search
    :param seed: Seed for randomized corpora
    """

    node_budget: int = attr.ib(default=10 ** 8, validator=[instance_of(int), _positive])
    pair_cap: int = attr.ib(default=48, validator=[instance_of(int), _positive])
    element_limit: int = attr.ib(default=10 ** 4, validator=[instance_of(int), _positive])
    group_cap: int = attr.ib(default=MAX_GROUP_ORDER, validator=[instance_of(int), _positive])
    associativity_cap: int = attr.ib(default=256, validator=[instance_of(int), _positive])
    jobs: int = attr.ib(default=1, validator=[instance_of(int), _positive])
    seed: int = attr.ib(default=0, validator=instance_of(int))

    @group_cap.validator
    def _check_group_cap(self, attribute, value):  # pylint: disable=unused-argument,no-self-use
        """Verify that ``group_cap`` does not exceed the hard construction limit."""
        if value > MAX_GROUP_ORDER:
            raise ValueError(f"group_cap cannot exceed {MAX_GROUP_ORDER}")

    @classmethod
    def from_file(cls, filename: Optional[str]) -> "EngineSettings":
        """Load settings from a YAML file; a missing filename yields the defaults.

        :param filename: Existing filename or ``None``
        :return: Loaded settings
        """
        if filename is None:
            return cls()

        with open(filename, "rb") as settings_file:
            raw_parsed = yaml.safe_load(settings_file) or {}

        if not isinstance(raw_parsed, dict):
            raise ValueError(f'Settings file "{filename}" must contain a mapping')

        return cls.from_dict(raw_parsed)

    def evolve(self, **changes) -> "EngineSettings":
        """Copy with the given values replaced; ``None`` values are ignored."""
        return attr.evolve(self, **{key: value for key, value in changes.items() if value is not None})


class VertexId:
    """Structured vertex identifier.

    Every identifier has a canonical string rendering that :func:`parse_vertex_id` reverses,
    and a sort key that orders identifiers first by tag and then by payload.
    """

    _rank: int = -1

    def payload(self) -> Tuple:
        """Tag-specific part of the sort key."""
        raise NotImplementedError("VertexId does not provide a payload. Children must provide their own.")

    def render(self) -> str:
        """Canonical string form."""
        raise NotImplementedError("VertexId does not provide a rendering. Children must provide their own.")

    def sort_key(self) -> Tuple:
        """Total order key across all identifier tags."""
        return (self._rank,) + self.payload()

    def __lt__(self, other: "VertexId") -> bool:
        """Order by sort key."""
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        """Render the identifier."""
        return self.render()


@attr.s(frozen=True, eq=True, order=False, repr=False)
class Raw(VertexId):
    """Plain integer vertex, used for hand-written inputs."""

    _rank = 0
    value: int = attr.ib(validator=instance_of(int))

    def payload(self) -> Tuple:
        return (self.value,)

    def render(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Raw({self.value})"


@attr.s(frozen=True, eq=True, order=False, repr=False)
class PVertex(VertexId):
    """Group-element vertex of the Cayley construction."""

    _rank = 1
    i: int = attr.ib(validator=instance_of(int))

    def payload(self) -> Tuple:
        return (self.i,)

    def render(self) -> str:
        return f"P({self.i})"

    __repr__ = render


@attr.s(frozen=True, eq=True, order=False, repr=False)
class TVertex(VertexId):
    """Direction marker of the arc gadget from ``P(i)`` to ``P(j)``."""

    _rank = 2
    i: int = attr.ib(validator=instance_of(int))
    j: int = attr.ib(validator=instance_of(int))

    def payload(self) -> Tuple:
        return (self.i, self.j)

    def render(self) -> str:
        return f"T({self.i},{self.j})"

    __repr__ = render


@attr.s(frozen=True, eq=True, order=False, repr=False)
class SVertex(VertexId):
    """Chain vertex ``l`` of the arc gadget from ``P(i)`` to ``P(j)``."""

    _rank = 3
    i: int = attr.ib(validator=instance_of(int))
    j: int = attr.ib(validator=instance_of(int))
    l: int = attr.ib(validator=instance_of(int))

    def payload(self) -> Tuple:
        return (self.i, self.j, self.l)

    def render(self) -> str:
        return f"S({self.i},{self.j},{self.l})"

    __repr__ = render


@attr.s(frozen=True, eq=True, order=False, repr=False)
class Point(VertexId):
    """Ground-set element of the symmetric-group systems."""

    _rank = 4
    a: int = attr.ib(validator=instance_of(int))

    def payload(self) -> Tuple:
        return (self.a,)

    def render(self) -> str:
        return f"pt({self.a})"

    __repr__ = render


@attr.s(frozen=True, eq=True, order=False, repr=False)
class PairVertex(VertexId):
    """Two-element subset ``pair`` of the ground set left after removing ``chain``."""

    _rank = 5
    chain: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    pair: Tuple[int, int] = attr.ib(converter=lambda value: tuple(sorted(value)), validator=_INT_TUPLE)

    def payload(self) -> Tuple:
        return (len(self.chain), self.chain, self.pair)

    def render(self) -> str:
        return "pair[{}]({},{})".format(",".join(str(c) for c in self.chain), *self.pair)

    __repr__ = render


@attr.s(frozen=True, eq=True, order=False, repr=False)
class Base2Vertex(VertexId):
    """One of the two inner vertices of a bottom rank-two path."""

    _rank = 6
    chain: Tuple[int, ...] = attr.ib(converter=tuple, validator=_INT_TUPLE)
    pair: Tuple[int, int] = attr.ib(converter=lambda value: tuple(sorted(value)), validator=_INT_TUPLE)
    slot: int = attr.ib(validator=instance_of(int))

    @slot.validator
    def _check_slot(self, attribute, value):  # pylint: disable=unused-argument,no-self-use
        """Verify that ``slot`` is 0 or 1."""
        if value not in (0, 1):
            raise ValueError("Base2Vertex slot must be 0 or 1")

    def payload(self) -> Tuple:
        return (len(self.chain), self.chain, self.pair, self.slot)

    def render(self) -> str:
        return "base[{}]({},{};{})".format(",".join(str(c) for c in self.chain), *self.pair, self.slot)

    __repr__ = render


def _id_tuple(value) -> Tuple[VertexId, ...]:
    return tuple(sorted(value, key=VertexId.sort_key))


@attr.s(frozen=True, eq=True, order=False, repr=False)
class GadgetVertex(VertexId):
    """Ray vertex ``j`` attached to an owner: a single vertex or an edge (sorted identifier pair)."""

    _rank = 7
    owner: Tuple[VertexId, ...] = attr.ib(converter=_id_tuple)
    j: int = attr.ib(validator=instance_of(int))

    @owner.validator
    def _check_owner(self, attribute, value):  # pylint: disable=unused-argument,no-self-use
        """Verify that the owner is one vertex or one edge."""
        if len(value) not in (1, 2):
            raise ValueError("GadgetVertex owner must be a vertex or an edge")

    def payload(self) -> Tuple:
        return (len(self.owner),) + tuple(member.sort_key() for member in self.owner) + (self.j,)

    def render(self) -> str:
        return "u{{{}}}({})".format(",".join(member.render() for member in self.owner), self.j)

    __repr__ = render


@attr.s(frozen=True, eq=True, order=False, repr=False)
class ChamberVertex(VertexId):
    """Vertex of type ``type_index`` added to complete the chamber of ``edge``."""

    _rank = 8
    edge: Tuple[VertexId, VertexId] = attr.ib(converter=_id_tuple)
    type_index: int = attr.ib(validator=instance_of(int))

    @edge.validator
    def _check_edge(self, attribute, value):  # pylint: disable=unused-argument,no-self-use
        """Verify that the edge has two endpoints."""
        if len(value) != 2:
            raise ValueError("ChamberVertex edge must have two endpoints")

    def payload(self) -> Tuple:
        return tuple(member.sort_key() for member in self.edge) + (self.type_index,)

    def render(self) -> str:
        return "c{{{},{}}}({})".format(self.edge[0].render(), self.edge[1].render(), self.type_index)

    __repr__ = render


class _IdParser:
    """Recursive-descent reader for rendered identifiers."""

    def __init__(self, text: str):
        self._text = text
        self._pos = 0

    def _fail(self, reason: str):
        raise GraphFormatError(f'Cannot parse vertex id "{self._text}" at offset {self._pos}: {reason}')

    def _peek(self) -> str:
        return self._text[self._pos] if self._pos < len(self._text) else ""

    def _expect(self, char: str):
        if self._peek() != char:
            self._fail(f'expected "{char}"')
        self._pos += 1

    def _integer(self) -> int:
        start = self._pos
        if self._peek() == "-":
            self._pos += 1
        while self._peek().isdigit():
            self._pos += 1
        if self._pos == start or self._text[start : self._pos] == "-":
            self._fail("expected an integer")
        return int(self._text[start : self._pos])

    def _integers(self, separator: str, close: str) -> Tuple[int, ...]:
        values = []
        while self._peek() != close:
            if values:
                self._expect(separator)
            values.append(self._integer())
        return tuple(values)

    def _name(self) -> str:
        start = self._pos
        while self._peek().isalpha():
            self._pos += 1
        return self._text[start : self._pos]

    def _members(self) -> Tuple[VertexId, ...]:
        self._expect("{")
        members = [self.vertex_id()]
        while self._peek() == ",":
            self._pos += 1
            members.append(self.vertex_id())
        self._expect("}")
        return tuple(members)

    def _bracketed_chain(self) -> Tuple[int, ...]:
        self._expect("[")
        chain = self._integers(",", "]")
        self._expect("]")
        return chain

    def vertex_id(self) -> VertexId:
        """Read one identifier starting at the current offset."""
        if self._peek().isdigit() or self._peek() == "-":
            return Raw(self._integer())

        name = self._name()
        if name in ("P", "T", "S", "pt"):
            self._expect("(")
            values = self._integers(",", ")")
            self._expect(")")
            arity = {"P": 1, "T": 2, "S": 3, "pt": 1}[name]
            if len(values) != arity:
                self._fail(f"{name} takes {arity} integers")
            return {"P": PVertex, "T": TVertex, "S": SVertex, "pt": Point}[name](*values)

        if name in ("pair", "base"):
            chain = self._bracketed_chain()
            self._expect("(")
            x = self._integer()
            self._expect(",")
            y = self._integer()
            if name == "pair":
                self._expect(")")
                return PairVertex(chain, (x, y))
            self._expect(";")
            slot = self._integer()
            self._expect(")")
            try:
                return Base2Vertex(chain, (x, y), slot)
            except ValueError as error:
                self._fail(str(error))

        if name in ("u", "c"):
            members = self._members()
            self._expect("(")
            index = self._integer()
            self._expect(")")
            try:
                if name == "u":
                    return GadgetVertex(members, index)
                return ChamberVertex(members, index)
            except ValueError as error:
                self._fail(str(error))

        self._fail(f'unknown tag "{name}"')

    def parse(self) -> VertexId:
        """Read exactly one identifier spanning the whole text."""
        result = self.vertex_id()
        if self._pos != len(self._text):
            self._fail("trailing characters")
        return result


def parse_vertex_id(text: str) -> VertexId:
    """Parse a rendered vertex identifier.

    :param text: Rendered identifier, as produced by :meth:`VertexId.render`
    :return: Structured identifier
    :raises GraphFormatError: if the text is not a rendered identifier
    """
    return _IdParser(text).parse()
