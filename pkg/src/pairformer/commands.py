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
"""Command implementations behind the ``pairformer`` command line.

Every command returns an exit code: 0 on success, 1 when a verification or geometry check fails and 2 on
usage, input or resource errors.
"""
import argparse
import json
import logging
import random
import sys
from collections import Counter
from typing import Callable, Dict, Optional

import oyaml as yaml

from pairformer.automorphisms import AutomorphismGroupReport, automorphism_report, verify_pair
from pairformer.exceptions import PairformerError, SettingsError
from pairformer.gallery import figure1, gamma_n
from pairformer.geometrize import geometrize
from pairformer.graphs import ColoredGraph, is_geometry, maximal_cliques
from pairformer.groups import GroupPair, make_pair, named_group, parse_subgroup_spec
from pairformer.identifiers import LOGGER_NAME
from pairformer.internal.corpus import random_colored_graph
from pairformer.internal.logging_utils import log_duration
from pairformer.internal.serialization import dumps, load_graph, to_dot
from pairformer.internal.structures import EngineSettings, Raw
from pairformer.realize import realize, self_check
from pairformer.refine import class_size_audit, refine

_LOGGER = logging.getLogger(LOGGER_NAME)
EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2
__all__ = ("run", "stats", "EXIT_OK", "EXIT_MISMATCH", "EXIT_ERROR")


def _write(text: str, output: str):
    if output == "-":
        sys.stdout.write(text)
        return
    with open(output, "w") as output_file:
        output_file.write(text)


def _report_json(payload: Dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _pair(group_spec: str, normal_spec: str, settings: EngineSettings) -> GroupPair:
    group = named_group(group_spec, group_cap=settings.group_cap, associativity_cap=settings.associativity_cap)
    return make_pair(group, parse_subgroup_spec(group, normal_spec))


def stats(graph: ColoredGraph) -> Dict:
    """Summary counts of a graph: sizes, type classes, degrees, flag rank and the geometry verdict."""
    degrees = Counter(len(block) for block in graph.neighbors)
    return {
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "classSizes": dict(zip(graph.types, graph.class_sizes())),
        "degreeHistogram": {str(value): degrees[value] for value in sorted(degrees)},
        "minDegree": min(degrees),
        "maxFlagRank": max(len(clique) for clique in maximal_cliques(graph)),
        "isGeometry": is_geometry(graph).is_geometry,
    }


def _groups_payload(graph: ColoredGraph, report: AutomorphismGroupReport) -> Dict:
    return {
        "cbOrder": report.cb_order,
        "cOrder": report.c_order,
        "sigmaOrbits": [[graph.types[t] for t in block] for block in report.colorblind.sigma_orbits()],
    }


def _build(args: argparse.Namespace, settings: EngineSettings) -> int:
    pair = _pair(args.group, args.normal, settings)
    with log_duration("build"):
        graph = realize(pair)
    if args.self_check:
        with log_duration("self-check"):
            self_check(pair, graph)
    _write(dumps(graph), args.output)
    return EXIT_OK


def _refine(args: argparse.Namespace, settings: EngineSettings) -> int:  # pylint: disable=unused-argument
    graph = load_graph(args.input)
    with log_duration("refine"):
        refined = refine(graph)
    if args.audit:
        audit = class_size_audit(graph, refined)
        _LOGGER.info("New classes hold %d and %d vertices", audit.even_count, audit.odd_count)
    _write(dumps(refined), args.output)
    return EXIT_OK


def _geometrize(args: argparse.Namespace, settings: EngineSettings) -> int:  # pylint: disable=unused-argument
    graph = load_graph(args.input)
    with log_duration("geometrize"):
        result = geometrize(graph, strict=not args.allow_low_degree)
    _write(dumps(result), args.output)
    return EXIT_OK


def _pipeline(args: argparse.Namespace, settings: EngineSettings) -> int:
    pair = _pair(args.group, args.normal, settings)
    if pair.group.order == 1:
        graph = ColoredGraph.build(["0"], [(Raw(0), 0)], [])
    else:
        with log_duration("build"):
            system = realize(pair)
        with log_duration("geometrize"):
            graph = geometrize(system)

    with log_duration("verify"):
        geometry = is_geometry(graph)
        verdict = verify_pair(graph, pair, settings)

    _write(dumps(graph), args.output)
    payload = _groups_payload(graph, verdict.report)
    payload.update({"pairMatch": verdict.match, "isGeometry": geometry.is_geometry})
    report_stream = sys.stderr if args.output == "-" else sys.stdout
    report_stream.write(_report_json(payload))
    return EXIT_OK if verdict.match and geometry.is_geometry else EXIT_MISMATCH


def _verify(args: argparse.Namespace, settings: EngineSettings) -> int:
    graph = load_graph(args.input)
    with log_duration("automorphism search"):
        report = automorphism_report(graph, settings)
    payload = _groups_payload(graph, report)
    match: Optional[bool] = None
    if args.expect_group is not None:
        verdict = verify_pair(graph, _pair(args.expect_group, args.expect_normal, settings), settings, report)
        match = verdict.match
        payload["expectedOrders"] = list(verdict.expected_orders)
    payload["pairMatch"] = match

    sys.stdout.write(_report_json(payload))
    summary = f"Colorblind group order {report.cb_order}, color-preserving group order {report.c_order}"
    if match is not None:
        summary += "; pair matches" if match else "; pair does NOT match"
    sys.stderr.write(summary + "\n")
    return EXIT_MISMATCH if match is False else EXIT_OK


def _check_geometry(args: argparse.Namespace, settings: EngineSettings) -> int:  # pylint: disable=unused-argument
    graph = load_graph(args.input)
    report = is_geometry(graph)
    payload = {
        "isGeometry": report.is_geometry,
        "rank": report.rank,
        "chambers": report.chamber_count,
        "deficientFlags": [[graph.vertex_ids[member].render() for member in flag] for flag in report.deficient],
    }
    sys.stdout.write(_report_json(payload))
    return EXIT_OK if report.is_geometry else EXIT_MISMATCH


def _example(args: argparse.Namespace, settings: EngineSettings) -> int:
    if args.example == "sn-an":
        graph = gamma_n(args.n).graph
    elif args.example == "figure1":
        graph = figure1(args.variant)
    else:
        graph = random_colored_graph(random.Random(settings.seed), args.vertices, args.types)
    _write(dumps(graph), args.output)
    return EXIT_OK


def _export_dot(args: argparse.Namespace, settings: EngineSettings) -> int:  # pylint: disable=unused-argument
    _write(to_dot(load_graph(args.input)), args.output)
    return EXIT_OK


def _stats(args: argparse.Namespace, settings: EngineSettings) -> int:  # pylint: disable=unused-argument
    sys.stdout.write(_report_json(stats(load_graph(args.input))))
    return EXIT_OK


_COMMANDS: Dict[str, Callable[[argparse.Namespace, EngineSettings], int]] = {
    "build": _build,
    "refine": _refine,
    "geometrize": _geometrize,
    "pipeline": _pipeline,
    "verify": _verify,
    "check-geometry": _check_geometry,
    "example": _example,
    "export-dot": _export_dot,
    "stats": _stats,
}


def _load_settings(args: argparse.Namespace) -> EngineSettings:
    try:
        return EngineSettings.from_file(args.config).evolve(
            jobs=args.jobs, node_budget=getattr(args, "budget", None), seed=getattr(args, "seed", None)
        )
    except (TypeError, ValueError, yaml.YAMLError) as error:
        raise SettingsError(f"Invalid settings: {error}") from error


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command line.

    :param args: Output of :func:`pairformer.internal.arg_parsing.parse_args`
    :returns: Exit code
    """
    try:
        return _COMMANDS[args.command](args, _load_settings(args))
    except (PairformerError, OSError) as error:
        _LOGGER.debug("Command %s failed", args.command, exc_info=True)
        sys.stderr.write(f"pairformer {args.command}: {type(error).__name__}: {error}\n")
        return EXIT_ERROR
