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
"""Unit tests for ``pairformer.groups``."""
from itertools import permutations, product

import pytest

from pairformer.exceptions import (
    GroupTooLargeError,
    NotAGroupError,
    NotNormalError,
    NotSubgroupError,
    OutOfRangeError,
    TableFormatError,
    UnsupportedSpecError,
)
from pairformer.groups import (
    ElementPermutation,
    alternating_group,
    cyclic_group,
    dihedral_group,
    format_cayley_table,
    from_cayley_table,
    generating_sequence,
    group_from_permutations,
    make_pair,
    named_group,
    pair_isomorphic,
    parse_cayley_table,
    parse_subgroup_spec,
    quaternion_group,
    subgroup_from_generators,
    symmetric_group,
)

pytestmark = [pytest.mark.local, pytest.mark.unit]

# Latin square with identity 0 in which every element squares to 0; no group of order 5 does that
_LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]
# x * y = 2x + 2y mod 3
_NO_IDENTITY = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def _pair(spec: str, subgroup: str):
    group = named_group(spec)
    return make_pair(group, parse_subgroup_spec(group, subgroup))


def _is_pair_isomorphism(source, target, witness: ElementPermutation) -> bool:
    left, right = source.group, target.group
    homomorphic = all(
        witness(left.mul(a, b)) == right.mul(witness(a), witness(b))
        for a in range(left.order)
        for b in range(left.order)
    )
    return homomorphic and {witness(a) for a in source.subgroup} == target.subgroup


def test_cyclic_group():
    group = cyclic_group(4)

    assert group.order == 4
    assert group.identity == 0
    assert group.is_abelian()
    assert group.inverse == (0, 3, 2, 1)
    assert [group.element_order(a) for a in range(4)] == [1, 4, 2, 4]


def test_symmetric_group_listing():
    group = symmetric_group(3)

    assert group.order == 6
    assert group.identity == 0
    assert not group.is_abelian()
    assert group.label(0) == "()"
    assert group.label(1) == "(2 3)"
    assert group.element_order(1) == 2
    assert group.element_order(3) == 3


def test_conjugate():
    group = symmetric_group(3)

    for a in range(6):
        for h in range(6):
            assert group.conjugate(a, h) == group.mul(group.mul(a, h), group.inverse[a])


def test_dihedral_group():
    group = dihedral_group(8)

    assert group.order == 8
    assert not group.is_abelian()
    assert group.labels[:3] == ("e", "r", "r^2")
    assert group.labels[4:6] == ("s", "rs")
    assert group.element_order(1) == 4
    assert all(group.element_order(a) == 2 for a in range(4, 8))


def test_quaternion_group():
    group = quaternion_group()
    i, j, k, minus_one = 2, 4, 6, 1

    assert group.mul(i, j) == k
    assert group.mul(j, i) == k + 1
    assert group.mul(i, i) == minus_one
    assert sum(1 for a in range(8) if group.element_order(a) == 4) == 6


def test_alternating_group():
    assert alternating_group(4).order == 12
    assert alternating_group(1).order == 1


def test_table_is_read_only():
    group = cyclic_group(3)

    with pytest.raises(ValueError):
        group.table[0, 0] = 1


@pytest.mark.parametrize(
    "table",
    (
        pytest.param([[0, 1]], id="not square"),
        pytest.param([], id="empty"),
        pytest.param([[0, 2], [1, 0]], id="out of range"),
        pytest.param([[0, 0], [1, 1]], id="not latin"),
        pytest.param([[0, 1], [0, 1]], id="repeated column"),
        pytest.param([[0, 1], [1]], id="ragged"),
    ),
)
def test_from_cayley_table_rejects(table):
    with pytest.raises(NotAGroupError):
        from_cayley_table(table)


def test_from_cayley_table_reports_non_associative_triple():
    with pytest.raises(NotAGroupError) as excinfo:
        from_cayley_table(_LOOP_5)

    a, b, c = excinfo.value.triple
    assert _LOOP_5[_LOOP_5[a][b]][c] != _LOOP_5[a][_LOOP_5[b][c]]


def test_from_cayley_table_associativity_cap_skips_check():
    loop = from_cayley_table(_LOOP_5, associativity_cap=4)

    assert loop.order == 5


def test_from_cayley_table_requires_identity():
    with pytest.raises(NotAGroupError) as excinfo:
        from_cayley_table(_NO_IDENTITY, associativity_cap=0)

    excinfo.match("no identity")


def test_parse_cayley_table():
    group = parse_cayley_table("3\n0 1 2\n\n1 2 0\n2 0 1\n")

    assert group.order == 3
    assert group.is_abelian()
    assert format_cayley_table(group) == "3\n0 1 2\n1 2 0\n2 0 1\n"


@pytest.mark.parametrize("text", ("", "0 1\n1 0\n", "2\n0 1\n", "2\n0 x\n1 0\n", "2\n0 1 1\n1 0\n"))
def test_parse_cayley_table_rejects(text):
    with pytest.raises(TableFormatError):
        parse_cayley_table(text)


@pytest.mark.parametrize(
    "spec, order, abelian",
    (
        ("cyclic:5", 5, True),
        ("dihedral:6", 6, False),
        ("sym:4", 24, False),
        ("alt:4", 12, False),
        ("quaternion:8", 8, False),
        ("product:cyclic:2xcyclic:3", 6, True),
        ("product:cyclic:2xsym:3", 12, False),
        ("product:cyclic:2xcyclic:2xcyclic:2", 8, True),
        ("product:cyclic:2xproduct:cyclic:2xcyclic:3", 12, True),
        ("product:cyclic:2xproduct:cyclic:2xsym:3", 24, False),
    ),
)
def test_named_group(spec, order, abelian):
    group = named_group(spec)

    assert group.order == order
    assert group.is_abelian() == abelian


@pytest.mark.parametrize(
    "spec",
    ("cyclic", "cyclic:", "dihedral:5", "quaternion:4", "free:3", "cyclic:x", "sym:8", "product:cyclic:2", "cyclic:0"),
)
def test_named_group_rejects(spec):
    with pytest.raises(UnsupportedSpecError):
        named_group(spec)


def test_named_group_respects_cap():
    with pytest.raises(UnsupportedSpecError):
        named_group("cyclic:10", group_cap=5)


def test_named_group_missing_table_file(tmpdir):
    with pytest.raises(UnsupportedSpecError):
        named_group("table:" + str(tmpdir.join("missing.table")))


@pytest.mark.parametrize(
    "content",
    (pytest.param(b"2\n0 1\n", id="short"), pytest.param(b"\xff\xfe", id="not text")),
)
def test_named_group_malformed_table_file(tmpdir, content):
    table_file = tmpdir.join("broken.table")
    table_file.write_binary(content)

    with pytest.raises(TableFormatError):
        named_group("table:" + str(table_file))


def test_direct_product_labels():
    group = named_group("product:cyclic:2xcyclic:3")

    assert group.label(4) == "(1,1)"


def test_subgroup_from_generators():
    group = symmetric_group(3)

    assert subgroup_from_generators(group, [3]) == frozenset((0, 3, 4))
    assert subgroup_from_generators(group, [1]) == frozenset((0, 1))
    assert subgroup_from_generators(group, []) == frozenset((0,))
    assert len(subgroup_from_generators(group, [1, 2])) == 6


def test_subgroup_from_generators_out_of_range():
    with pytest.raises(OutOfRangeError):
        subgroup_from_generators(cyclic_group(3), [3])


def test_parse_subgroup_spec():
    group = symmetric_group(3)

    assert parse_subgroup_spec(group, "all") == frozenset(range(6))
    assert parse_subgroup_spec(group, "trivial") == frozenset((0,))
    assert parse_subgroup_spec(group, "gens:3") == frozenset((0, 3, 4))


@pytest.mark.parametrize("spec", ("gens:x", "gens:9", "half", ""))
def test_parse_subgroup_spec_rejects(spec):
    with pytest.raises(UnsupportedSpecError):
        parse_subgroup_spec(symmetric_group(3), spec)


def test_make_pair_not_normal():
    group = symmetric_group(3)

    with pytest.raises(NotNormalError) as excinfo:
        make_pair(group, {0, 1})

    a, h, conjugate = excinfo.value.witness
    assert h in (0, 1)
    assert conjugate not in (0, 1)
    assert group.conjugate(a, h) == conjugate


@pytest.mark.parametrize("members", ({1}, {0, 3}, {0, 1, 2}, {0, 6}, {0, -1}))
def test_make_pair_not_subgroup(members):
    with pytest.raises(NotSubgroupError):
        make_pair(symmetric_group(3), members)


def test_make_pair_cosets():
    pair = _pair("sym:3", "gens:3")

    assert pair.index == 2
    assert pair.subgroup == frozenset((0, 3, 4))
    assert pair.subgroup_order == 3
    assert pair.representatives == (0, 1)
    assert sorted(pair.ordering) == list(range(6))
    assert [pair.coset_of(a) for a in range(6)] == [0, 1, 1, 0, 0, 1]


def test_make_pair_cyclic_ordering():
    pair = _pair("cyclic:4", "gens:2")

    assert pair.ordering == (0, 1, 2, 3)
    assert pair.representatives == (0, 1)
    assert pair.members == (True, False, True, False)


def test_make_pair_trivial_subgroup_lists_all_elements_as_representatives():
    pair = _pair("cyclic:3", "trivial")

    assert pair.index == 3
    assert pair.representatives == pair.ordering


def test_generating_sequence():
    assert generating_sequence(cyclic_group(6)) == [1]
    assert generating_sequence(symmetric_group(3)) == [1, 2]
    assert generating_sequence(cyclic_group(1)) == []


def test_pair_isomorphic_finds_witness():
    source = _pair("cyclic:6", "gens:2")
    target = _pair("product:cyclic:2xcyclic:3", "gens:1")

    witness = pair_isomorphic(source, target)

    assert witness is not None
    assert _is_pair_isomorphism(source, target, witness)


@pytest.mark.parametrize(
    "source, target",
    (
        pytest.param(("cyclic:4", "all"), ("product:cyclic:2xcyclic:2", "all"), id="different groups"),
        pytest.param(("quaternion:8", "gens:1"), ("dihedral:8", "gens:2"), id="quaternion vs dihedral"),
        pytest.param(("dihedral:8", "gens:1"), ("dihedral:8", "gens:2,4"), id="cyclic vs klein subgroup"),
        pytest.param(("cyclic:4", "gens:2"), ("cyclic:4", "all"), id="different subgroup orders"),
    ),
)
def test_pair_isomorphic_rejects(source, target):
    assert pair_isomorphic(_pair(*source), _pair(*target)) is None


def test_pair_isomorphic_respects_cap():
    pair = _pair("sym:4", "all")

    with pytest.raises(GroupTooLargeError):
        pair_isomorphic(pair, pair, cap=10)


# Normal subgroups of catalogue groups up to order 8
_CATALOGUE = (
    ("cyclic:4", "gens:2"),
    ("cyclic:4", "all"),
    ("product:cyclic:2xcyclic:2", "gens:1"),
    ("product:cyclic:2xcyclic:2", "all"),
    ("cyclic:6", "gens:2"),
    ("cyclic:6", "gens:3"),
    ("product:cyclic:2xcyclic:3", "gens:1"),
    ("product:cyclic:2xcyclic:3", "gens:3"),
    ("sym:3", "gens:3"),
    ("dihedral:6", "gens:1"),
    ("cyclic:8", "gens:2"),
    ("product:cyclic:2xcyclic:4", "gens:1"),
    ("dihedral:8", "gens:1"),
    ("dihedral:8", "gens:2"),
    ("dihedral:8", "gens:2,4"),
    ("quaternion:8", "gens:1"),
    ("quaternion:8", "gens:2"),
    ("product:cyclic:2xcyclic:2xcyclic:2", "all"),
)


def _catalogue_id(case):
    return "/".join(case)


def _isomorphic_by_enumeration(source, target) -> bool:
    left, right = source.group, target.group
    if left.order != right.order or source.subgroup_order != target.subgroup_order:
        return False
    others = [a for a in range(left.order) if a != left.identity]
    for images in permutations([b for b in range(right.order) if b != right.identity]):
        phi = dict(zip(others, images))
        phi[left.identity] = right.identity
        if any(source.members[a] != target.members[phi[a]] for a in others):
            continue
        if all(phi[left.mul(a, b)] == right.mul(phi[a], phi[b]) for a in others for b in others):
            return True
    return False


@pytest.mark.parametrize("case", _CATALOGUE, ids=_catalogue_id)
def test_pair_isomorphic_identity_witness(case):
    pair = _pair(*case)

    witness = pair_isomorphic(pair, pair)

    assert witness.images == tuple(range(pair.group.order))


def test_pair_isomorphic_whole_group():
    pair = _pair("sym:3", "all")

    assert pair.index == 1
    assert pair.ordering[0] == pair.group.identity
    assert pair_isomorphic(pair, _pair("dihedral:6", "all")) is not None


def test_pair_isomorphic_symmetric_to_dihedral():
    source = _pair("sym:3", "gens:3")
    target = _pair("dihedral:6", "gens:1")

    witness = pair_isomorphic(source, target)

    assert witness is not None
    assert _is_pair_isomorphism(source, target, witness)
    assert {witness(a) for a in source.subgroup} == {0, 1, 2}


@pytest.mark.parametrize("order", (4, 6, 8))
def test_pair_isomorphic_agrees_with_enumeration(order):
    pairs = [_pair(*case) for case in _CATALOGUE if named_group(case[0]).order == order]

    for source, target in product(pairs, repeat=2):
        witness = pair_isomorphic(source, target)
        assert (witness is not None) == _isomorphic_by_enumeration(source, target)
        if witness is not None:
            assert _is_pair_isomorphism(source, target, witness)


def test_pair_isomorphic_is_symmetric():
    pairs = [_pair(*case) for case in _CATALOGUE]

    for source, target in product(pairs, repeat=2):
        assert (pair_isomorphic(source, target) is None) == (pair_isomorphic(target, source) is None)


@pytest.mark.parametrize("case", _CATALOGUE, ids=_catalogue_id)
def test_cosets_partition_the_group(case):
    pair = _pair(*case)
    group = pair.group

    cosets = [frozenset(group.mul(r, h) for h in pair.subgroup) for r in pair.representatives]

    assert len(cosets) == pair.index
    assert sum(len(coset) for coset in cosets) == group.order
    assert frozenset().union(*cosets) == frozenset(range(group.order))
    for position, coset in enumerate(cosets):
        assert all(pair.coset_of(a) == position for a in coset)


def test_group_from_permutations():
    group = group_from_permutations([(0, 1, 2), (1, 2, 0), (2, 0, 1)])

    assert group.order == 3
    assert group.identity == 0
    assert group.mul(1, 1) == 2


def test_element_permutation_requires_bijection():
    with pytest.raises(ValueError):
        ElementPermutation((0, 0))

    assert ElementPermutation([1, 0])(0) == 1
