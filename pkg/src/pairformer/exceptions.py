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
"""Exceptions raised by pairformer."""
from typing import Any, Sequence, Tuple

__all__ = (
    "PairformerError",
    "NotAGroupError",
    "TableFormatError",
    "UnsupportedSpecError",
    "NotSubgroupError",
    "NotNormalError",
    "GroupTooLargeError",
    "SettingsError",
    "GraphValidationError",
    "NotSimpleError",
    "NotProperError",
    "TypeNotUsedError",
    "EmptyGraphError",
    "GraphTooLargeError",
    "UnknownVertexError",
    "GraphFormatError",
    "TrivialGroupError",
    "PreconditionError",
    "PreconditionDegreeError",
    "PreconditionFlagError",
    "AuditFailureError",
    "ResourceLimitError",
    "IncoherentError",
    "OutOfRangeError",
)


class PairformerError(Exception):
    """Base for all errors raised by pairformer."""


class NotAGroupError(PairformerError, ValueError):
    """A Cayley table does not describe a group.

    :param message: Description of the violation
    :param triple: First violating element triple (or pair/single element) when one exists
    """

    def __init__(self, message: str, triple: Tuple[int, ...] = ()):
        super(NotAGroupError, self).__init__(message)
        self.triple = triple


class TableFormatError(PairformerError, ValueError):
    """Cayley table text does not follow the table format."""


class UnsupportedSpecError(PairformerError, ValueError):
    """A group or subgroup spec string cannot be built."""


class NotSubgroupError(PairformerError, ValueError):
    """A member set is not closed under the group operation."""


class NotNormalError(PairformerError, ValueError):
    """A subgroup is not normal.

    :param message: Description of the violation
    :param witness: ``(a, h, a*h*a^-1)`` with ``h`` in the subgroup and the conjugate outside it
    """

    def __init__(self, message: str, witness: Tuple[int, int, int]):
        super(NotNormalError, self).__init__(message)
        self.witness = witness


class GroupTooLargeError(PairformerError, ValueError):
    """A group exceeds a configured size cap."""


class SettingsError(PairformerError, ValueError):
    """A settings file cannot be loaded into engine settings."""


class GraphValidationError(PairformerError, ValueError):
    """A colored graph violates the incidence-system invariants."""


class NotSimpleError(GraphValidationError):
    """A colored graph has a loop or a repeated edge."""


class NotProperError(GraphValidationError):
    """Two adjacent vertices share a type.

    :param message: Description of the violation
    :param edge: Offending edge as a pair of rendered vertex identifiers
    """

    def __init__(self, message: str, edge: Tuple[str, str]):
        super(NotProperError, self).__init__(message)
        self.edge = edge


class TypeNotUsedError(GraphValidationError):
    """A declared type has no vertex."""


class EmptyGraphError(GraphValidationError):
    """A colored graph has no vertices."""


class GraphTooLargeError(GraphValidationError):
    """A colored graph exceeds the vertex cap."""


class UnknownVertexError(PairformerError, KeyError):
    """A vertex is not part of the graph."""


class GraphFormatError(PairformerError, ValueError):
    """A serialized graph or vertex identifier could not be parsed."""


class TrivialGroupError(PairformerError, ValueError):
    """A construction that needs a non-trivial group received the trivial one."""


class PreconditionError(PairformerError, ValueError):
    """A construction's preconditions are not met.

    :param message: Description of the violation
    :param witnesses: Every offending vertex or flag
    """

    def __init__(self, message: str, witnesses: Sequence[Any]):
        super(PreconditionError, self).__init__(message)
        self.witnesses = tuple(witnesses)


class PreconditionDegreeError(PreconditionError):
    """Some vertices have degree below two."""


class PreconditionFlagError(PreconditionError):
    """Some flags have rank three or more."""


class AuditFailureError(PairformerError, AssertionError):
    """A construction produced output that contradicts its own closed forms."""


class ResourceLimitError(PairformerError, RuntimeError):
    """The automorphism search reached its node budget."""


class IncoherentError(PairformerError, ValueError):
    """A vertex permutation does not induce a permutation of types."""


class OutOfRangeError(PairformerError, ValueError):
    """A parameter lies outside the supported range."""
