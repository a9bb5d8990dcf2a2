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
"""Acceptance tests: full constructions checked end to end against independent oracles."""
import pytest

from pairformer.automorphisms import automorphism_report, compare_pairs, verify_pair
from pairformer.exceptions import ResourceLimitError
from pairformer.gallery import caption_agreement, expected_class_sizes, figure1, gamma_n
from pairformer.geometrize import chamber_index, geometrize
from pairformer.graphs import is_geometry, maximal_cliques, min_degree
from pairformer.internal.corpus import random_corpus
from pairformer.internal.structures import EngineSettings
from pairformer.realize import expected_counts, realize, self_check
from pairformer.refine import class_size_audit, refine

from ..functional import functional_test_utils

pytestmark = [pytest.mark.accept]

_SETTINGS = EngineSettings(element_limit=10 ** 5)
# Brute-force enumeration lists every element; keep it to groups this small
_ORACLE_LIMIT = 5040


def _pair_id(case):
    return f"{case[0]}/{case[1]}"


def _refined_corpus():
    return [(graph, refine(graph)) for graph in random_corpus(seed=0, count=100, max_vertices=10, max_types=4)]


@pytest.fixture(scope="module")
def refined_corpus():
    return _refined_corpus()


@pytest.mark.parametrize("case", functional_test_utils.ACCEPTANCE_PAIRS, ids=_pair_id)
def test_realization(case):
    group_spec, normal_spec, group_order, subgroup_order = case
    pair = functional_test_utils.pair_from_specs(group_spec, normal_spec)

    graph = realize(pair)
    self_check(pair, graph)
    verdict = verify_pair(graph, pair, _SETTINGS)

    assert verdict.match
    assert (verdict.report.cb_order, verdict.report.c_order) == (group_order, subgroup_order)


@pytest.mark.parametrize(
    "case", [case for case in functional_test_utils.ACCEPTANCE_PAIRS if case[2] <= 6], ids=_pair_id
)
def test_pipeline(case):
    group_spec, normal_spec, _, _ = case
    pair = functional_test_utils.pair_from_specs(group_spec, normal_spec)

    graph = geometrize(realize(pair))

    assert is_geometry(graph).is_geometry
    assert verify_pair(graph, pair, _SETTINGS).match


@pytest.mark.parametrize(
    "group_spec",
    ["cyclic:{}".format(order) for order in range(2, 13)] + ["dihedral:10", "dihedral:12", "alt:4", "quaternion:8"],
)
def test_counts(group_spec):
    pair = functional_test_utils.pair_from_specs(group_spec, "all")

    graph = realize(pair)

    assert (graph.vertex_count, graph.edge_count) == expected_counts(pair)


def test_refine_properties(refined_corpus):
    for graph, refined in refined_corpus:
        assert min_degree(refined) >= 2
        assert functional_test_utils.is_triangle_free(refined)
        class_size_audit(graph, refined)

        source = automorphism_report(graph, _SETTINGS)
        derived = automorphism_report(refined, _SETTINGS)
        assert (derived.cb_order, derived.c_order) == (source.cb_order, source.c_order)
        if source.cb_order <= _ORACLE_LIMIT:
            assert functional_test_utils.brute_force_orders(graph) == (source.cb_order, source.c_order)
            assert compare_pairs(graph, refined, _SETTINGS).preserved


def test_geometrize_properties(refined_corpus):
    for graph, refined in refined_corpus:
        result = geometrize(refined)

        assert is_geometry(result).is_geometry
        assert sorted(maximal_cliques(result)) == sorted(
            tuple(sorted(result.position(member) for member in chamber)) for chamber in chamber_index(result).values()
        )
        source = automorphism_report(graph, _SETTINGS)
        derived = automorphism_report(result, _SETTINGS)
        assert (derived.cb_order, derived.c_order) == (source.cb_order, source.c_order)
        if source.cb_order <= _ORACLE_LIMIT:
            assert compare_pairs(graph, result, _SETTINGS).preserved


@pytest.mark.parametrize("n", range(2, 7))
def test_family_class_sizes(n):
    graph = gamma_n(n).graph

    assert graph.class_sizes() == expected_class_sizes(n)
    assert graph.class_sizes()[n] == n


@pytest.mark.parametrize("n, orders", ((2, (2, 1)), (3, (6, 3)), (4, (24, 12))))
def test_family_orders(n, orders):
    report = automorphism_report(gamma_n(n).graph)

    assert (report.cb_order, report.c_order) == orders


@pytest.mark.parametrize("n", (2, 3, 4))
def test_family_pair(n):
    gamma = gamma_n(n)

    verdict = verify_pair(gamma.graph, functional_test_utils.symmetric_alternating_pair(n), _SETTINGS)

    assert verdict.match
    elements = verdict.report.colorblind.elements(limit=_SETTINGS.element_limit)
    assert len(functional_test_utils.point_restrictions(gamma, elements)) == len(elements)


def test_family_orders_n5():
    try:
        report = automorphism_report(gamma_n(5).graph)
    except ResourceLimitError:
        pytest.xfail("node budget exhausted")

    assert (report.cb_order, report.c_order) == (120, 60)


def test_figure_fixtures():
    solid = automorphism_report(figure1("solid"))
    completed_graph = figure1("completed")
    completed = automorphism_report(completed_graph)

    assert (solid.cb_order, solid.c_order) == (6, 3)
    assert caption_agreement("solid", solid).agrees
    assert completed.cb_order == 12
    assert is_geometry(completed_graph).is_geometry
    assert completed.c_order == functional_test_utils.exhaustive_orders(completed_graph)[1]
    agreement = caption_agreement("completed", completed)
    assert agreement.cb_agrees
    assert agreement.agrees == (completed.c_order == 3)


def test_engine_against_exhaustive_oracle():
    for graph in random_corpus(seed=1, count=200, max_vertices=8, max_types=4):
        report = automorphism_report(graph)
        assert (report.cb_order, report.c_order) == functional_test_utils.exhaustive_orders(graph)

        elements = report.colorblind.elements(limit=10 ** 5)
        kernel = {element.vertex_images for element in elements if element.is_type_preserving}
        assert len(kernel) == report.c_order
        for generator in report.colorblind.generators:
            for member in report.color.generators:
                conjugate = generator.compose(member).compose(generator.inverse())
                assert conjugate.is_type_preserving
                assert conjugate.vertex_images in kernel
