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
"""Helper functions for parsing and processing input arguments."""
import argparse
import os
from typing import Iterator, Optional

from pairformer.identifiers import __version__

__all__ = ("parse_args",)
_STDOUT = "-"


def _positive_int(value: str) -> int:
    """Parse a strictly positive integer argument."""
    try:
        parsed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{value}" is not an integer')
    if parsed < 1:
        raise argparse.ArgumentTypeError(f"{parsed} must be at least 1")
    return parsed


def _add_input(parser: argparse.ArgumentParser):
    parser.add_argument("-i", "--input", required=True, help="Graph JSON file to read.")


def _add_output(parser: argparse.ArgumentParser, what: str = "Graph JSON"):
    parser.add_argument("-o", "--output", default=_STDOUT, help=f"{what} file to write (default: stdout).")


def _add_pair(parser: argparse.ArgumentParser, required: bool, prefix: str = ""):
    parser.add_argument(
        f"--{prefix}group",
        required=required,
        help="Group spec: cyclic:N, dihedral:N, sym:N, alt:N, quaternion:8, product:AxB or table:PATH.",
    )
    parser.add_argument(
        f"--{prefix}normal",
        required=required,
        default=None if required else "all",
        help="Normal subgroup spec: gens:i1,i2,..., all or trivial.",
    )


def _add_budget(parser: argparse.ArgumentParser):
    parser.add_argument("--budget", type=_positive_int, help="Node budget of each automorphism search.")


def _build_parser() -> argparse.ArgumentParser:
    """Construct the argument parser.

    :returns: Constructed argument parser
    """
    parser = argparse.ArgumentParser(
        description="Build incidence systems and geometries with a prescribed pair of automorphism groups."
    )
    parser.add_argument("--version", action="version", version="pairformer/{}".format(__version__))
    parser.add_argument("--config", help="Path to a YAML engine settings file.")
    parser.add_argument("--jobs", type=_positive_int, help="Worker processes for the automorphism search.")
    parser.add_argument(
        "-v",
        dest="verbosity",
        action="count",
        help="Enables logging and sets detail level. Multiple -v options increases verbosity (max: 4).",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="Suppresses most warning and diagnostic messages")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    build = commands.add_parser("build", help="Realize a pair (G, H) as an incidence system.")
    _add_pair(build, required=True)
    _add_output(build)
    build.add_argument("--self-check", action="store_true", help="Audit the construction before writing it.")

    refine = commands.add_parser("refine", help="Raise all degrees to 2 and cut all flags to rank 2.")
    _add_input(refine)
    _add_output(refine)
    refine.add_argument("--audit", action="store_true", help="Check the sizes of the new type classes.")

    geometrize = commands.add_parser("geometrize", help="Complete every edge to a chamber.")
    _add_input(geometrize)
    _add_output(geometrize)
    geometrize.add_argument(
        "--allow-low-degree", action="store_true", help="Accept vertices of degree below 2 (the pair may change)."
    )

    pipeline = commands.add_parser("pipeline", help="Realize, geometrize and verify a pair (G, H).")
    _add_pair(pipeline, required=True)
    _add_output(pipeline)
    _add_budget(pipeline)

    verify = commands.add_parser("verify", help="Compute both automorphism groups and compare with a pair.")
    _add_input(verify)
    _add_pair(verify, required=False, prefix="expect-")
    _add_budget(verify)

    check = commands.add_parser("check-geometry", help="Decide whether every flag lies in a chamber.")
    _add_input(check)

    example = commands.add_parser("example", help="Write one of the bundled example systems.")
    examples = example.add_subparsers(dest="example", metavar="EXAMPLE")
    examples.required = True
    sn_an = examples.add_parser("sn-an", help="Symmetric/alternating family member on {1..n}.")
    sn_an.add_argument("--n", type=int, required=True, help="Size of the ground set (2..7).")
    _add_output(sn_an)
    figure = examples.add_parser("figure1", help="Hexagon fixture.")
    figure.add_argument("--variant", choices=("solid", "completed"), default="solid")
    _add_output(figure)
    random_graph = examples.add_parser("random", help="Seeded random proper colored graph.")
    random_graph.add_argument("--seed", type=int, help="Random seed (default: from settings).")
    random_graph.add_argument("--vertices", type=_positive_int, default=8)
    random_graph.add_argument("--types", type=_positive_int, default=3)
    _add_output(random_graph)

    dot = commands.add_parser("export-dot", help="Render a graph in Graphviz DOT.")
    _add_input(dot)
    _add_output(dot, what="DOT")

    stats = commands.add_parser("stats", help="Summarize a graph.")
    _add_input(stats)

    return parser


def parse_args(raw_args: Optional[Iterator[str]] = None) -> argparse.Namespace:
    """Handle argparse to collect the needed input values.

    :param raw_args: List of arguments
    :returns: parsed arguments
    """
    parser = _build_parser()
    parsed_args = parser.parse_args(raw_args)

    for filename in (parsed_args.config, getattr(parsed_args, "input", None)):
        if filename is not None and not os.path.isfile(filename):
            parser.error('Invalid filename: "{}"'.format(filename))

    if getattr(parsed_args, "expect_group", None) is None and getattr(parsed_args, "expect_normal", "all") != "all":
        parser.error("--expect-normal requires --expect-group")

    return parsed_args
